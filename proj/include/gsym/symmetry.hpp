#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gsym/budget.hpp"
#include "gsym/graph.hpp"

namespace gsym {

/// Bijection on 0..n-1 in one-line notation: image[v] is where v goes.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
    std::vector<char> hit(image_.size(), 0);
    for (Vertex v : image_) {
      if (v >= image_.size() || hit[v]) throw std::invalid_argument("not a permutation");
      hit[v] = 1;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Vertex> image(n);
    std::iota(image.begin(), image.end(), Vertex{0});
    return Permutation(std::move(image));
  }

  std::size_t size() const { return image_.size(); }
  Vertex operator[](Vertex v) const { return image_[v]; }
  const std::vector<Vertex>& image() const { return image_; }

  bool is_identity() const {
    for (Vertex v = 0; v < image_.size(); ++v)
      if (image_[v] != v) return false;
    return true;
  }

  /// (a * b)(v) = a(b(v)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
    std::vector<Vertex> image(a.size());
    for (Vertex v = 0; v < image.size(); ++v) image[v] = a[b[v]];
    return Permutation(std::move(image));
  }

  Permutation inverse() const {
    std::vector<Vertex> image(image_.size());
    for (Vertex v = 0; v < image_.size(); ++v) image[image_[v]] = v;
    return Permutation(std::move(image));
  }

  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < image_.size(); ++i) out << (i ? " " : "") << image_[i];
    return out.str();
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) {
    throw std::invalid_argument("permutation of degree " + std::to_string(p.size()) + " on a graph of order " +
                                std::to_string(g.order()));
  }
  // A bijection that maps edges to edges maps non-edges to non-edges by counting.
  for (const Edge& e : g.edges())
    if (!g.adjacent(p[e.u], p[e.v])) return false;
  return true;
}

/// Caps on the automorphism search.
struct SearchLimits {
  std::size_t max_vertices = 20;
  std::size_t max_elements = 200000;
};

/// Every automorphism of a graph, sorted lexicographically by image.
class AutomorphismGroup {
 public:
  AutomorphismGroup() = default;
  AutomorphismGroup(std::size_t degree, std::vector<Permutation> elements)
      : degree_(degree), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
  }

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() <= 1; }
  const std::vector<Permutation>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const Permutation& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

  friend bool operator==(const AutomorphismGroup&, const AutomorphismGroup&) = default;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

namespace detail {

/// Colour refinement run jointly on two graphs so colours are comparable between them.
/// Any isomorphism maps each vertex to a vertex of the same stable colour.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(const Graph& a, const Graph& b) {
  const std::size_t na = a.order();
  auto graph_of = [&](std::size_t v) -> std::pair<const Graph*, Vertex> {
    return v < na ? std::pair{&a, static_cast<Vertex>(v)} : std::pair{&b, static_cast<Vertex>(v - na)};
  };
  const std::size_t total = na + b.order();
  std::vector<std::size_t> colour(total);
  for (std::size_t v = 0; v < total; ++v) {
    auto [g, x] = graph_of(v);
    colour[v] = g->degree(x);
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(total);
    for (std::size_t v = 0; v < total; ++v) {
      auto [g, x] = graph_of(v);
      std::vector<std::size_t> around;
      for (Vertex w : g->neighbors(x)) around.push_back(colour[g == &a ? w : w + na]);
      std::sort(around.begin(), around.end());
      sig[v] = {colour[v], std::move(around)};
      ids.emplace(sig[v], 0);
    }
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t v = 0; v < total; ++v) colour[v] = ids[sig[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::vector<std::size_t>(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(na)),
          std::vector<std::size_t>(colour.begin() + static_cast<std::ptrdiff_t>(na), colour.end())};
}

/// Depth-first extension of partial maps from g into h. Calls `found` on each complete
/// isomorphism; stops early once `found` returns false.
inline void for_each_isomorphism(const Graph& g, const Graph& h, const std::function<bool(const Permutation&)>& found) {
  const std::size_t n = g.order();
  if (h.order() != n || h.size() != g.size()) return;
  if (n == 0) {
    found(Permutation{});
    return;
  }

  auto [cg, ch] = refine_colours(g, h);
  {
    auto sg = cg, sh = ch;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return;
  }
  std::map<std::size_t, std::size_t> count;
  for (auto c : cg) ++count[c];

  // Visit order: each next vertex has the most already-placed neighbours; ties go to the
  // smaller colour class, then the lower index.
  std::vector<Vertex> order;
  std::vector<std::size_t> placed_nbrs(n, 0);
  std::vector<char> placed(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    bool have = false;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (!have || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && count[cg[v]] < count[cg[best]])) {
        best = v;
        have = true;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) ++placed_nbrs[w];
  }

  // For each position, one earlier neighbour whose image restricts the candidates.
  std::vector<std::optional<std::size_t>> anchor(n);
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;
  for (std::size_t k = 0; k < n; ++k) {
    for (Vertex w : g.neighbors(order[k])) {
      if (position[w] < k && (!anchor[k] || position[w] < *anchor[k])) anchor[k] = position[w];
    }
  }

  std::vector<Vertex> image(n);
  std::vector<char> used(n, 0);
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  bool stop = false;

  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) {
      if (!found(Permutation(image))) stop = true;
      return;
    }
    const Vertex v = order[k];
    std::span<const Vertex> candidates = anchor[k] ? h.neighbors(image[order[*anchor[k]]]) : std::span<const Vertex>(all);
    for (Vertex x : candidates) {
      if (used[x] || ch[x] != cg[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Vertex w = order[j];
        ok = g.adjacent(v, w) == h.adjacent(x, image[w]);
      }
      if (!ok) continue;
      image[v] = x;
      used[x] = 1;
      extend(k + 1);
      used[x] = 0;
      if (stop) return;
    }
  };
  extend(0);
}

}  // namespace detail

inline AutomorphismGroup automorphism_group(const Graph& g, const SearchLimits& limits = {}) {
  if (g.order() > limits.max_vertices) throw budget_exceeded("automorphism vertex", limits.max_vertices, g.order());
  std::vector<Permutation> elements;
  detail::for_each_isomorphism(g, g, [&](const Permutation& p) {
    if (elements.size() == limits.max_elements) {
      throw budget_exceeded("automorphism group order", limits.max_elements, elements.size() + 1);
    }
    elements.push_back(p);
    return true;
  });
  return AutomorphismGroup(g.order(), std::move(elements));
}

inline bool has_nontrivial_automorphism(const Graph& g, const SearchLimits& limits = {}) {
  if (g.order() > limits.max_vertices) throw budget_exceeded("automorphism vertex", limits.max_vertices, g.order());
  bool witness = false;
  detail::for_each_isomorphism(g, g, [&](const Permutation& p) {
    witness = !p.is_identity();
    return !witness;
  });
  return witness;
}

inline std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h, const SearchLimits& limits = {}) {
  if (g.order() > limits.max_vertices) throw budget_exceeded("isomorphism vertex", limits.max_vertices, g.order());
  std::optional<Permutation> result;
  detail::for_each_isomorphism(g, h, [&](const Permutation& p) {
    result = p;
    return false;
  });
  return result;
}

inline bool are_isomorphic(const Graph& g, const Graph& h, const SearchLimits& limits = {}) {
  return find_isomorphism(g, h, limits).has_value();
}

inline bool group_equal(const AutomorphismGroup& a, const AutomorphismGroup& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("comparing groups of different degree");
  return a.elements() == b.elements();
}

/// Image of each edge index under p, for a p in Aut(g).
inline std::vector<std::size_t> edge_action(const Graph& g, const Permutation& p) {
  std::vector<std::size_t> action;
  action.reserve(g.size());
  for (const Edge& e : g.edges()) {
    auto idx = g.edge_index(p[e.u], p[e.v]);
    if (!idx) throw std::logic_error("permutation is not an automorphism: edge leaves the edge set");
    action.push_back(*idx);
  }
  return action;
}

}  // namespace gsym
