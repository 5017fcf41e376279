#pragma once

#include "gsym/budget.hpp"
#include "gsym/corpus.hpp"
#include "gsym/distinguishing.hpp"
#include "gsym/graph.hpp"
#include "gsym/io.hpp"
#include "gsym/product.hpp"
#include "gsym/structure.hpp"
#include "gsym/symmetry.hpp"
#include "gsym/theorems.hpp"
