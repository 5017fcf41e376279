#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsym/graph.hpp"

namespace gsym {

enum class ProductKind { cartesian, direct, strong };

inline const char* to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::direct: return "direct";
    case ProductKind::strong: return "strong";
  }
  return "?";
}

// Vertex (g, h) of a binary product is flattened to g * |V(H)| + h. Iterated products are
// left-associated, so the same row-major rule holds for any number of factors.

inline Graph product(const Graph& g, const Graph& h, ProductKind kind) {
  if (g.order() == 0 || h.order() == 0) throw graph_error("product of an empty graph");
  const std::size_t m = h.order();
  auto flat = [m](Vertex a, Vertex b) { return static_cast<Vertex>(a * m + b); };

  std::vector<Edge> edges;
  if (kind != ProductKind::direct) {
    for (Vertex a = 0; a < g.order(); ++a)
      for (const Edge& e : h.edges()) edges.push_back({flat(a, e.u), flat(a, e.v)});
    for (const Edge& e : g.edges())
      for (Vertex b = 0; b < m; ++b) edges.push_back({flat(e.u, b), flat(e.v, b)});
  }
  if (kind != ProductKind::cartesian) {
    for (const Edge& e : g.edges()) {
      for (const Edge& f : h.edges()) {
        edges.push_back(Edge::of(flat(e.u, f.u), flat(e.v, f.v)));
        edges.push_back(Edge::of(flat(e.u, f.v), flat(e.v, f.u)));
      }
    }
  }
  return Graph(g.order() * m, edges);
}

inline Graph cartesian_product(const Graph& g, const Graph& h) { return product(g, h, ProductKind::cartesian); }
inline Graph direct_product(const Graph& g, const Graph& h) { return product(g, h, ProductKind::direct); }
inline Graph strong_product(const Graph& g, const Graph& h) { return product(g, h, ProductKind::strong); }

/// Left-associated product of all factors.
inline Graph product(std::span<const Graph> factors, ProductKind kind) {
  if (factors.empty()) throw graph_error("product of no factors");
  Graph result = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) result = product(result, factors[i], kind);
  return result;
}

/// k-th power of g with respect to the strong product.
inline Graph strong_power(const Graph& g, std::size_t k) {
  if (k == 0) throw graph_error("strong power needs k >= 1");
  Graph result = g;
  for (std::size_t i = 1; i < k; ++i) result = strong_product(result, g);
  return result;
}

// ---------------------------------------------------------------------------
// Coordinates and layers

struct ProductVertex {
  std::vector<Vertex> coords;
  Vertex flat = 0;

  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

inline std::size_t product_order(std::span<const std::size_t> orders) {
  return std::accumulate(orders.begin(), orders.end(), std::size_t{1}, std::multiplies<>());
}

inline ProductVertex make_product_vertex(std::span<const std::size_t> orders, std::span<const Vertex> coords) {
  if (coords.size() != orders.size()) throw graph_error("coordinate count does not match factor count");
  ProductVertex pv{std::vector<Vertex>(coords.begin(), coords.end()), 0};
  std::size_t flat = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (coords[i] >= orders[i]) {
      throw graph_error("coordinate " + std::to_string(i) + " = " + std::to_string(coords[i]) +
                        " out of range");
    }
    flat = flat * orders[i] + coords[i];
  }
  pv.flat = static_cast<Vertex>(flat);
  return pv;
}

inline ProductVertex unflatten(std::span<const std::size_t> orders, Vertex flat) {
  if (flat >= product_order(orders)) throw graph_error("product vertex " + std::to_string(flat) + " out of range");
  ProductVertex pv{std::vector<Vertex>(orders.size()), flat};
  std::size_t rest = flat;
  for (std::size_t i = orders.size(); i-- > 0;) {
    pv.coords[i] = static_cast<Vertex>(rest % orders[i]);
    rest /= orders[i];
  }
  return pv;
}

/// The copy of factor i through `anchor`: every vertex agreeing with the anchor off coordinate i.
struct Layer {
  std::size_t factor_index = 0;
  ProductVertex anchor;
  /// vertices[x] is the product vertex whose i-th coordinate is x.
  std::vector<Vertex> vertices;
};

inline Layer layer(std::span<const std::size_t> orders, std::size_t i, const ProductVertex& anchor) {
  if (i >= orders.size()) throw graph_error("factor index " + std::to_string(i) + " out of range");
  const ProductVertex checked = make_product_vertex(orders, anchor.coords);
  Layer result{i, checked, {}};
  std::vector<Vertex> coords = checked.coords;
  for (Vertex x = 0; x < orders[i]; ++x) {
    coords[i] = x;
    result.vertices.push_back(make_product_vertex(orders, coords).flat);
  }
  return result;
}

inline Layer layer(const Graph& product_graph, std::span<const Graph> factors, std::size_t i,
                   const ProductVertex& anchor) {
  std::vector<std::size_t> orders;
  for (const Graph& f : factors) orders.push_back(f.order());
  if (product_order(orders) != product_graph.order()) {
    throw graph_error("product graph does not match the factor orders");
  }
  return layer(orders, i, anchor);
}

/// All distinct layers of factor i, ordered by the flat index of their first vertex.
inline std::vector<Layer> layers(std::span<const std::size_t> orders, std::size_t i) {
  std::vector<Layer> result;
  const std::size_t total = product_order(orders);
  for (Vertex v = 0; v < total; ++v) {
    ProductVertex pv = unflatten(orders, v);
    if (pv.coords.at(i) != 0) continue;
    result.push_back(layer(orders, i, pv));
  }
  return result;
}

}  // namespace gsym
