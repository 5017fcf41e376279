#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gsym/budget.hpp"
#include "gsym/graph.hpp"
#include "gsym/symmetry.hpp"

namespace gsym {

/// Classes of the relation x S y  <=>  N[x] = N[y], each sorted, ordered by smallest member.
struct SPartition {
  std::vector<std::vector<Vertex>> classes;
};

inline SPartition s_partition(const Graph& g) {
  std::map<VertexSet, std::vector<Vertex>> by_neighborhood;
  for (Vertex v = 0; v < g.order(); ++v) by_neighborhood[closed_neighborhood(g, v)].push_back(v);
  SPartition p;
  for (auto& [key, members] : by_neighborhood) p.classes.push_back(std::move(members));
  std::sort(p.classes.begin(), p.classes.end());
  return p;
}

inline bool is_s_thin(const Graph& g) {
  const auto p = s_partition(g);
  return p.classes.size() == g.order();
}

/// Same vertex set and E(h) is contained in E(g).
inline bool is_spanning_subgraph(const Graph& h, const Graph& g) {
  if (h.order() != g.order()) return false;
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) { return g.adjacent(e.u, e.v); });
}

/// Every element of aut_g is an automorphism of h.
inline bool aut_subgroup_of(const AutomorphismGroup& aut_g, const Graph& h) {
  if (aut_g.degree() != h.order()) throw std::invalid_argument("graphs have different vertex counts");
  return std::all_of(aut_g.begin(), aut_g.end(), [&](const Permutation& p) { return is_automorphism(h, p); });
}

/// Aut(g) is a subgroup of Aut(h).
inline bool aut_subgroup_of(const Graph& g, const Graph& h, const SearchLimits& limits = {}) {
  if (g.order() != h.order()) throw std::invalid_argument("graphs have different vertex counts");
  return aut_subgroup_of(automorphism_group(g, limits), h);
}

struct HamiltonianLimits {
  std::size_t max_vertices = 16;
};

/// A Hamiltonian path as a vertex sequence, if one exists. Backtracking that tries low-degree
/// vertices first; up to 20 vertices it also remembers (visited set, endpoint) states already
/// shown to be dead ends.
inline std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g, const HamiltonianLimits& limits = {}) {
  const std::size_t n = g.order();
  if (n > limits.max_vertices) throw budget_exceeded("hamiltonian vertex", limits.max_vertices, n);
  if (n > 64) throw budget_exceeded("hamiltonian vertex", 64, n);
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<Vertex>{0};
  if (!is_connected(g)) return std::nullopt;

  auto by_degree = [&](std::vector<Vertex> vs) {
    std::stable_sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    return vs;
  };
  std::vector<std::vector<Vertex>> ordered_nbrs(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    ordered_nbrs[v] = by_degree(std::vector<Vertex>(nbrs.begin(), nbrs.end()));
  }

  const bool memo = n <= 20;
  std::vector<bool> dead(memo ? n << n : 0, false);
  std::vector<Vertex> walk;
  auto extend = [&](auto&& self, std::uint64_t visited, Vertex end) -> bool {
    if (walk.size() == n) return true;
    const std::size_t state = static_cast<std::size_t>(visited) * n + end;
    if (memo && dead[state]) return false;
    for (Vertex w : ordered_nbrs[end]) {
      if (visited & (std::uint64_t{1} << w)) continue;
      walk.push_back(w);
      if (self(self, visited | (std::uint64_t{1} << w), w)) return true;
      walk.pop_back();
    }
    if (memo) dead[state] = true;
    return false;
  };

  std::vector<Vertex> starts(n);
  for (Vertex v = 0; v < n; ++v) starts[v] = v;
  for (Vertex s : by_degree(starts)) {
    walk.assign(1, s);
    if (extend(extend, std::uint64_t{1} << s, s)) return walk;
  }
  return std::nullopt;
}

inline bool hamiltonian_path_exists(const Graph& g, const HamiltonianLimits& limits = {}) {
  return hamiltonian_path(g, limits).has_value();
}

}  // namespace gsym
