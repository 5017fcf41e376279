#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsym/graph.hpp"
#include "gsym/io.hpp"
#include "gsym/product.hpp"

namespace gsym {

enum class Family { path, cycle, complete, asymmetric_tree, other };

/// A named factor graph together with what the harness is told about it.
///
/// Strong-product primality is declared, not computed: P_n (n >= 3), C_m (m >= 5) and the
/// asymmetric trees A_n carry the flag. A connected triangle-free graph on two or more vertices
/// is strong-prime, since a strong product of two connected nontrivial graphs contains K_4.
struct Factor {
  std::string name;
  Graph graph;
  Family family = Family::other;
  std::size_t param = 0;
  bool declared_prime = false;
};

inline Factor make_factor(Family family, std::size_t n) {
  switch (family) {
    case Family::path: return {"P" + std::to_string(n), path(n), family, n, n >= 3};
    case Family::cycle: return {"C" + std::to_string(n), cycle(n), family, n, n >= 5};
    case Family::complete: return {"K" + std::to_string(n), complete(n), family, n, false};
    case Family::asymmetric_tree: return {"A" + std::to_string(n), asymmetric_tree(n), family, n, true};
    case Family::other: break;
  }
  throw std::invalid_argument("no generator for this family");
}

inline Factor named_graph(std::string name, Graph g) { return {std::move(name), std::move(g), Family::other, 0, false}; }

/// "P5", "C6", "K4", "A7".
inline std::optional<Factor> parse_family(std::string_view token) {
  if (token.size() < 2) return std::nullopt;
  Family family;
  switch (token[0]) {
    case 'P': family = Family::path; break;
    case 'C': family = Family::cycle; break;
    case 'K': family = Family::complete; break;
    case 'A': family = Family::asymmetric_tree; break;
    default: return std::nullopt;
  }
  std::size_t n = 0;
  auto digits = token.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return make_factor(family, n);
}

/// One corpus entry: a single graph, a product of factors, or a strong power.
struct Instance {
  std::string text;
  std::vector<Factor> factors;
  ProductKind kind = ProductKind::strong;
  std::size_t power = 1;

  bool is_single() const { return factors.size() == 1 && power == 1; }
  bool is_power() const { return factors.size() == 1 && power > 1; }
  bool is_product() const { return factors.size() > 1; }

  Graph graph() const {
    if (is_power()) return strong_power(factors[0].graph, power);
    std::vector<Graph> gs;
    for (const auto& f : factors) gs.push_back(f.graph);
    return product(gs, kind);
  }
};

/// Parses a family shorthand expression ("P3xP4s", "C5^2", "P2xP2xP2") or a graph6 string.
/// Product suffixes: s strong (default), c Cartesian, d direct.
inline Instance parse_instance(std::string_view text) {
  text = detail::trim(text);
  Instance inst{std::string(text), {}, ProductKind::strong, 1};
  if (text.empty()) throw parse_error("empty corpus entry");

  auto shorthand = [&]() -> bool {
    std::string_view body = text;
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      auto base = parse_family(body.substr(0, caret));
      auto exp = body.substr(caret + 1);
      std::size_t k = 0;
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), k);
      if (!base || ec != std::errc() || ptr != exp.data() + exp.size() || k == 0) return false;
      inst.factors.push_back(std::move(*base));
      inst.power = k;
      return true;
    }
    if (body.size() > 2 && body.find('x') != std::string_view::npos) {
      switch (body.back()) {
        case 's': inst.kind = ProductKind::strong; body.remove_suffix(1); break;
        case 'c': inst.kind = ProductKind::cartesian; body.remove_suffix(1); break;
        case 'd': inst.kind = ProductKind::direct; body.remove_suffix(1); break;
        default: break;
      }
    }
    while (true) {
      auto x = body.find('x');
      auto f = parse_family(body.substr(0, x));
      if (!f) return false;
      inst.factors.push_back(std::move(*f));
      if (x == std::string_view::npos) break;
      body.remove_prefix(x + 1);
    }
    return true;
  };

  if (!shorthand()) {
    inst.factors.clear();
    inst.kind = ProductKind::strong;
    inst.power = 1;
    inst.factors.push_back(named_graph(std::string(text), parse_graph6(text)));
  }
  return inst;
}

/// One entry per non-blank line; '#' starts a comment.
inline std::vector<Instance> parse_corpus(std::string_view text) {
  std::vector<Instance> corpus;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (!line.empty()) corpus.push_back(parse_instance(line));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return corpus;
}

/// Paths P2..P6, cycles C3..C7 and K2..K5 on their own; every pair of them whose product has at
/// most 12 vertices; and the larger instances the theorems are checked on by name.
inline std::vector<Instance> default_corpus() {
  std::vector<Factor> base;
  for (std::size_t n = 2; n <= 6; ++n) base.push_back(make_factor(Family::path, n));
  for (std::size_t n = 3; n <= 7; ++n) base.push_back(make_factor(Family::cycle, n));
  for (std::size_t n = 2; n <= 5; ++n) base.push_back(make_factor(Family::complete, n));

  std::vector<Instance> corpus;
  for (const auto& f : base) corpus.push_back(parse_instance(f.name));
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[i].graph.order() * base[j].graph.order() > 12) continue;
      corpus.push_back(parse_instance(base[i].name + "x" + base[j].name + "s"));
    }
  }
  for (const char* extra : {"K1xP3s", "P3xC5s", "P4xC5s", "C5xC6s", "A7xP3s", "P3^2", "C5^2", "K2^2",
                            "P2xP2xP2s"}) {
    corpus.push_back(parse_instance(extra));
  }
  return corpus;
}

}  // namespace gsym
