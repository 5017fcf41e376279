#pragma once

// Brute-force reference implementations. Nothing here calls the library's search code: every
// answer comes from enumerating all n! permutations and all r^n labelings directly.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gsym/graph.hpp"
#include "gsym/io.hpp"

namespace oracle {

using gsym::Edge;
using gsym::Graph;
using gsym::Vertex;

using Perm = std::vector<Vertex>;

inline bool preserves_edges(const Graph& g, const Perm& p) {
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g.edges()) edges.insert({e.u, e.v});
  for (const Edge& e : g.edges()) {
    auto a = p[e.u], b = p[e.v];
    if (!edges.count({std::min(a, b), std::max(a, b)})) return false;
  }
  return true;
}

/// Every permutation of 0..n-1 that is an automorphism, in lexicographic order.
inline std::vector<Perm> automorphisms(const Graph& g) {
  Perm p(g.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  std::vector<Perm> result;
  do {
    if (preserves_edges(g, p)) result.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return result;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::set<std::pair<Vertex, Vertex>> target;
  for (const Edge& e : h.edges()) target.insert({e.u, e.v});
  Perm p(g.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      auto a = p[e.u], b = p[e.v];
      if (!target.count({std::min(a, b), std::max(a, b)})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool is_identity(const Perm& p) {
  for (Vertex v = 0; v < p.size(); ++v)
    if (p[v] != v) return false;
  return true;
}

/// Advances an odometer over {1..r}^n; false after the last labeling.
inline bool next_labeling(std::vector<std::uint32_t>& labels, std::uint32_t r) {
  for (std::size_t i = labels.size(); i-- > 0;) {
    if (labels[i] < r) {
      ++labels[i];
      return true;
    }
    labels[i] = 1;
  }
  return false;
}

inline bool vertex_distinguishing(const std::vector<Perm>& aut, const std::vector<std::uint32_t>& labels) {
  for (const Perm& p : aut) {
    if (is_identity(p)) continue;
    bool kept = true;
    for (Vertex v = 0; v < p.size() && kept; ++v) kept = labels[v] == labels[p[v]];
    if (kept) return false;
  }
  return true;
}

/// D(G): smallest r such that some labeling in {1..r}^n is distinguishing.
inline std::size_t distinguishing_number(const Graph& g) {
  const auto aut = automorphisms(g);
  for (std::uint32_t r = 1;; ++r) {
    std::vector<std::uint32_t> labels(g.order(), 1);
    do {
      if (vertex_distinguishing(aut, labels)) return r;
    } while (next_labeling(labels, r));
  }
}

/// Edge permutations induced by each automorphism, with edges numbered as in g.edges().
inline std::vector<std::vector<std::size_t>> edge_permutations(const Graph& g, const std::vector<Perm>& aut) {
  std::map<std::pair<Vertex, Vertex>, std::size_t> index;
  for (std::size_t i = 0; i < g.edges().size(); ++i) index[{g.edges()[i].u, g.edges()[i].v}] = i;
  std::vector<std::vector<std::size_t>> result;
  for (const Perm& p : aut) {
    std::vector<std::size_t> act;
    for (const Edge& e : g.edges()) act.push_back(index.at({std::min(p[e.u], p[e.v]), std::max(p[e.u], p[e.v])}));
    result.push_back(act);
  }
  return result;
}

inline bool edge_distinguishing(const std::vector<Perm>& aut, const std::vector<std::vector<std::size_t>>& acts,
                                const std::vector<std::uint32_t>& labels) {
  for (std::size_t k = 0; k < aut.size(); ++k) {
    if (is_identity(aut[k])) continue;
    bool kept = true;
    for (std::size_t i = 0; i < labels.size() && kept; ++i) kept = labels[i] == labels[acts[k][i]];
    if (kept) return false;
  }
  return true;
}

/// D'(G), or nullopt when no edge labeling is distinguishing.
inline std::optional<std::size_t> distinguishing_index(const Graph& g) {
  const auto aut = automorphisms(g);
  const auto acts = edge_permutations(g, aut);
  const std::size_t m = g.size();
  {
    // With all labels distinct only edge-fixing automorphisms survive.
    std::vector<std::uint32_t> distinct(m);
    std::iota(distinct.begin(), distinct.end(), 1u);
    if (!edge_distinguishing(aut, acts, distinct)) return std::nullopt;
  }
  for (std::uint32_t r = 1;; ++r) {
    std::vector<std::uint32_t> labels(m, 1);
    do {
      if (edge_distinguishing(aut, acts, labels)) return r;
    } while (next_labeling(labels, r));
  }
}

inline bool hamiltonian_path(const Graph& g) {
  if (g.order() == 0) return false;
  Perm p(g.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) ok = g.adjacent(p[i], p[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Random connected graph: a random spanning tree plus each other pair with probability `density`.
inline Graph random_connected(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Vertex v = 1; v < n; ++v) edges.push_back(Edge::of(static_cast<Vertex>(rng() % v), v));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < density) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < density) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace oracle
