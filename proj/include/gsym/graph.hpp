#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gsym {

using Vertex = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown when a graph would violate its invariants (self-loop, index out of range, ...).
class graph_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adjacency_(n), matrix_(n * n, 0) {}

  /// Builds a graph from an edge list. Both orientations of a pair name the same edge;
  /// repeated pairs are merged. Self-loops and out-of-range endpoints are rejected.
  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw graph_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") out of range for " + std::to_string(n) + " vertices");
      }
      if (e.u == e.v) throw graph_error("self-loop at vertex " + std::to_string(e.u));
      edges_.push_back(Edge::of(e.u, e.v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
      matrix_[e.u * n + e.v] = 1;
      matrix_[e.v * n + e.u] = 1;
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const { return matrix_[std::size_t{u} * order() + v] != 0; }

  /// Edges sorted lexicographically by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  /// Position of edge {u,v} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const {
    const Edge e = Edge::of(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
    return best;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> matrix_;
};

// ---------------------------------------------------------------------------
// Standard families

inline Graph path(std::size_t n) {
  if (n == 0) throw graph_error("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw graph_error("cycle needs at least three vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back(Edge::of(i, static_cast<Vertex>((i + 1) % n)));
  return Graph(n, edges);
}

inline Graph complete(std::size_t n) {
  if (n == 0) throw graph_error("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

/// Spider with legs of lengths 1, 2 and n-4 joined at a centre. For n >= 7 the legs are
/// pairwise distinct, so the tree has no non-identity automorphism.
inline Graph asymmetric_tree(std::size_t n) {
  if (n < 7) throw graph_error("asymmetric tree needs at least seven vertices");
  // Long leg 0-1-...-(n-4) ends at the centre c = n-4.
  std::vector<Edge> edges;
  const auto c = static_cast<Vertex>(n - 4);
  for (Vertex i = 0; i < c; ++i) edges.push_back({i, i + 1});
  edges.push_back({c, c + 1});
  edges.push_back({c + 1, c + 2});
  edges.push_back({c, c + 3});
  return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Neighborhoods and traversal

inline VertexSet open_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.order()) throw graph_error("vertex " + std::to_string(v) + " out of range");
  auto nbrs = g.neighbors(v);
  return VertexSet(std::vector<Vertex>(nbrs.begin(), nbrs.end()));
}

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.order()) throw graph_error("vertex " + std::to_string(v) + " out of range");
  auto nbrs = g.neighbors(v);
  std::vector<Vertex> members(nbrs.begin(), nbrs.end());
  members.push_back(v);
  return VertexSet(std::move(members));
}

/// N[W] for a vertex subset W.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& w) {
  std::vector<Vertex> members;
  for (Vertex v : w) {
    auto n = closed_neighborhood(g, v);
    members.insert(members.end(), n.begin(), n.end());
  }
  return VertexSet(std::move(members));
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < vertices.size(); ++i)
    for (Vertex j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) edges.push_back({i, j});
  return Graph(vertices.size(), edges);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.order() + b.order(), edges);
}

}  // namespace gsym
