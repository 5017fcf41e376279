#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsym/graph.hpp"
#include "gsym/symmetry.hpp"

namespace gsym {

using Label = std::uint32_t;

/// Vertex labels in 1..r, indexed by vertex.
class VertexLabeling {
 public:
  VertexLabeling() = default;
  explicit VertexLabeling(std::vector<Label> labels, std::optional<Label> palette = std::nullopt)
      : labels_(std::move(labels)) {
    Label top = 1;
    for (Label l : labels_) {
      if (l == 0) throw std::invalid_argument("labels start at 1");
      top = std::max(top, l);
    }
    palette_ = palette.value_or(top);
    if (palette_ < top) throw std::invalid_argument("label exceeds the declared palette");
  }

  std::size_t size() const { return labels_.size(); }
  Label operator[](Vertex v) const { return labels_[v]; }
  const std::vector<Label>& labels() const { return labels_; }
  /// r: labels are drawn from 1..r.
  Label palette() const { return palette_; }
  std::size_t labels_used() const { return std::set<Label>(labels_.begin(), labels_.end()).size(); }

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;

 private:
  std::vector<Label> labels_;
  Label palette_ = 1;
};

/// Edge labels in 1..r, defined on exactly the edge set of one graph.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;

  /// labels[i] belongs to g.edges()[i].
  EdgeLabeling(const Graph& g, std::vector<Label> labels, std::optional<Label> palette = std::nullopt)
      : edges_(g.edges()), labels_(std::move(labels)) {
    if (labels_.size() != edges_.size()) {
      throw std::invalid_argument("edge labeling has " + std::to_string(labels_.size()) + " labels for " +
                                  std::to_string(edges_.size()) + " edges");
    }
    Label top = 1;
    for (Label l : labels_) {
      if (l == 0) throw std::invalid_argument("labels start at 1");
      top = std::max(top, l);
    }
    palette_ = palette.value_or(top);
    if (palette_ < top) throw std::invalid_argument("label exceeds the declared palette");
  }

  static EdgeLabeling from_map(const Graph& g, const std::map<Edge, Label>& labels) {
    if (labels.size() != g.size()) throw std::invalid_argument("edge labeling domain differs from the edge set");
    std::vector<Label> by_index;
    for (const Edge& e : g.edges()) {
      auto it = labels.find(e);
      if (it == labels.end()) throw std::invalid_argument("edge labeling domain differs from the edge set");
      by_index.push_back(it->second);
    }
    return EdgeLabeling(g, std::move(by_index));
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Label>& labels() const { return labels_; }
  Label palette() const { return palette_; }
  std::size_t labels_used() const { return std::set<Label>(labels_.begin(), labels_.end()).size(); }

  Label at(Vertex u, Vertex v) const {
    const Edge e = Edge::of(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) throw std::out_of_range("edge not in labeling domain");
    return labels_[static_cast<std::size_t>(it - edges_.begin())];
  }

 private:
  std::vector<Edge> edges_;
  std::vector<Label> labels_;
  Label palette_ = 1;
};

enum class ResultMode { exact, certified_upper, bracket, undefined };
enum class LowerBoundReason { asymmetric, nontrivial_aut, exhausted_smaller_r, none };

inline const char* to_string(ResultMode m) {
  switch (m) {
    case ResultMode::exact: return "exact";
    case ResultMode::certified_upper: return "certified-upper";
    case ResultMode::bracket: return "bracket";
    case ResultMode::undefined: return "undefined";
  }
  return "?";
}

inline const char* to_string(LowerBoundReason r) {
  switch (r) {
    case LowerBoundReason::asymmetric: return "asymmetric";
    case LowerBoundReason::nontrivial_aut: return "nontrivial-aut";
    case LowerBoundReason::exhausted_smaller_r: return "exhausted-smaller-r";
    case LowerBoundReason::none: return "none";
  }
  return "?";
}

/// Outcome of computing D(G) or D'(G).
///
/// `value` is always backed by `witness`, a labeling that uses exactly `value` labels and is
/// distinguishing. `lower` is the proven lower bound; the value is the true minimum exactly when
/// lower == value. In bracket mode the true value lies in [lower, value]. In undefined mode there
/// is no distinguishing labeling at all and value, lower and witness are empty.
struct DistinguishingResult {
  std::size_t value = 0;
  std::size_t lower = 0;
  ResultMode mode = ResultMode::undefined;
  LowerBoundReason reason = LowerBoundReason::none;
  std::vector<Label> witness;
  std::size_t group_order = 0;

  bool defined() const { return mode != ResultMode::undefined; }
  bool proven() const { return defined() && lower == value; }
};

struct DistinguishingOptions {
  /// Largest vertex count for which D is minimised by exhaustive enumeration.
  std::size_t exact_bound = 12;
  /// Largest edge count for which D' is minimised by exhaustive enumeration.
  std::size_t exact_edge_bound = 14;
  /// Labelings evaluated per palette size by the randomized witness search.
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  SearchLimits limits;
};

namespace detail {

/// Non-identity group elements acting on a point set (vertices or edges), one image table each.
struct PointActions {
  std::size_t points = 0;
  std::vector<std::vector<std::uint32_t>> moves;
};

inline PointActions vertex_actions(const AutomorphismGroup& group) {
  PointActions a{group.degree(), {}};
  for (const Permutation& p : group)
    if (!p.is_identity()) a.moves.emplace_back(p.image().begin(), p.image().end());
  return a;
}

/// Returns nullopt when some non-identity automorphism fixes every edge, in which case no edge
/// labeling can be distinguishing.
inline std::optional<PointActions> edge_actions(const Graph& g, const AutomorphismGroup& group) {
  PointActions a{g.size(), {}};
  for (const Permutation& p : group) {
    if (p.is_identity()) continue;
    auto action = edge_action(g, p);
    bool fixes_all = true;
    for (std::size_t i = 0; i < action.size() && fixes_all; ++i) fixes_all = action[i] == i;
    if (fixes_all) return std::nullopt;
    a.moves.emplace_back(action.begin(), action.end());
  }
  return a;
}

inline bool preserves(const std::vector<std::uint32_t>& move, const std::vector<Label>& labels) {
  for (std::size_t p = 0; p < move.size(); ++p)
    if (labels[move[p]] != labels[p]) return false;
  return true;
}

/// Index of a non-identity action preserving the labeling, if any.
inline std::optional<std::size_t> preserving_action(const PointActions& actions, const std::vector<Label>& labels) {
  for (std::size_t i = 0; i < actions.moves.size(); ++i)
    if (preserves(actions.moves[i], labels)) return i;
  return std::nullopt;
}

/// First distinguishing labeling with exactly r labels in restricted-growth order: point 0
/// carries label 1 and each new label first appears after all smaller ones.
inline std::optional<std::vector<Label>> exhaustive_search(const PointActions& actions, Label r) {
  const std::size_t n = actions.points;
  if (n < r) return std::nullopt;
  std::vector<Label> labels(n, 1);
  std::optional<std::vector<Label>> found;
  auto recurse = [&](auto&& self, std::size_t pos, Label top) -> bool {
    if (n - pos < static_cast<std::size_t>(r - top)) return false;
    if (pos == n) {
      if (!preserving_action(actions, labels)) {
        found = labels;
        return true;
      }
      return false;
    }
    const Label limit = std::min<Label>(r, top + 1);
    for (Label l = 1; l <= limit; ++l) {
      labels[pos] = l;
      if (self(self, pos + 1, std::max(top, l))) return true;
    }
    return false;
  };
  if (n == 0) return std::nullopt;
  labels[0] = 1;
  recurse(recurse, 1, 1);
  return found;
}

/// Random labelings with greedy repair: while some non-identity element preserves the labeling,
/// relabel one point it moves.
inline std::optional<std::vector<Label>> randomized_search(const PointActions& actions, Label r, std::size_t trials,
                                                           std::mt19937_64& rng) {
  const std::size_t n = actions.points;
  if (n == 0 || r < 2) return std::nullopt;
  std::vector<Label> labels(n);
  auto randomize = [&] {
    for (auto& l : labels) l = static_cast<Label>(1 + rng() % r);
  };
  randomize();
  std::size_t repairs = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto bad = preserving_action(actions, labels);
    if (!bad) return labels;
    if (++repairs > 2 * n) {
      randomize();
      repairs = 0;
      continue;
    }
    const auto& move = actions.moves[*bad];
    std::vector<std::size_t> moved;
    for (std::size_t p = 0; p < n; ++p)
      if (move[p] != p) moved.push_back(p);
    const std::size_t p = moved[rng() % moved.size()];
    labels[p] = static_cast<Label>(1 + (labels[p] + rng() % (r - 1)) % r);
  }
  return std::nullopt;
}

/// Renumbers labels to 1..k in order of first appearance.
inline std::vector<Label> compact(std::vector<Label> labels) {
  std::map<Label, Label> renumber;
  for (auto& l : labels) {
    auto [it, inserted] = renumber.emplace(l, static_cast<Label>(renumber.size() + 1));
    l = it->second;
  }
  return labels;
}

inline DistinguishingResult minimise(const PointActions& actions, std::size_t group_order, bool exhaustive,
                                     const DistinguishingOptions& opts) {
  DistinguishingResult result;
  result.group_order = group_order;
  const std::size_t n = actions.points;
  if (actions.moves.empty()) {
    result.value = result.lower = 1;
    result.mode = ResultMode::exact;
    result.reason = LowerBoundReason::asymmetric;
    result.witness.assign(n, 1);
    return result;
  }
  result.lower = 2;
  result.reason = LowerBoundReason::nontrivial_aut;

  if (exhaustive) {
    for (Label r = 2; r <= n; ++r) {
      if (auto w = exhaustive_search(actions, r)) {
        result.value = r;
        result.lower = r;
        result.mode = ResultMode::exact;
        if (r > 2) result.reason = LowerBoundReason::exhausted_smaller_r;
        result.witness = std::move(*w);
        return result;
      }
    }
    throw std::logic_error("no distinguishing labeling even with all labels distinct");
  }

  std::mt19937_64 rng(opts.seed);
  for (Label r = 2; r < n; ++r) {
    if (auto w = randomized_search(actions, r, opts.trials, rng)) {
      result.witness = compact(std::move(*w));
      result.value = *std::max_element(result.witness.begin(), result.witness.end());
      result.mode = result.value == result.lower ? ResultMode::certified_upper : ResultMode::bracket;
      return result;
    }
  }
  // All labels distinct is distinguishing whenever the group acts faithfully on the points.
  result.witness.resize(n);
  for (std::size_t p = 0; p < n; ++p) result.witness[p] = static_cast<Label>(p + 1);
  result.value = n;
  result.mode = result.value == result.lower ? ResultMode::certified_upper : ResultMode::bracket;
  return result;
}

}  // namespace detail

/// Elements of the group that preserve every vertex label.
inline std::vector<Permutation> stabilizer(const AutomorphismGroup& group, const VertexLabeling& labeling) {
  if (labeling.size() != group.degree()) throw std::invalid_argument("labeling size does not match the group degree");
  std::vector<Permutation> result;
  for (const Permutation& p : group) {
    bool keeps = true;
    for (Vertex v = 0; v < labeling.size() && keeps; ++v) keeps = labeling[p[v]] == labeling[v];
    if (keeps) result.push_back(p);
  }
  return result;
}

/// Elements of Aut(g) that preserve every edge label.
inline std::vector<Permutation> stabilizer(const Graph& g, const AutomorphismGroup& group, const EdgeLabeling& labeling) {
  if (labeling.edges() != g.edges()) throw std::invalid_argument("edge labeling belongs to a different graph");
  std::vector<Permutation> result;
  for (const Permutation& p : group) {
    auto action = edge_action(g, p);
    bool keeps = true;
    for (std::size_t i = 0; i < action.size() && keeps; ++i) keeps = labeling.labels()[action[i]] == labeling.labels()[i];
    if (keeps) result.push_back(p);
  }
  return result;
}

inline bool is_distinguishing_vertex(const Graph& g, const AutomorphismGroup& group, const VertexLabeling& labeling) {
  if (group.degree() != g.order()) throw std::invalid_argument("group does not act on this graph");
  if (labeling.size() != g.order()) throw std::invalid_argument("labeling size does not match the graph");
  for (const Permutation& p : group) {
    if (p.is_identity()) continue;
    bool keeps = true;
    for (Vertex v = 0; v < g.order() && keeps; ++v) keeps = labeling[p[v]] == labeling[v];
    if (keeps) return false;
  }
  return true;
}

inline bool is_distinguishing_edge(const Graph& g, const AutomorphismGroup& group, const EdgeLabeling& labeling) {
  if (group.degree() != g.order()) throw std::invalid_argument("group does not act on this graph");
  if (labeling.edges() != g.edges()) throw std::invalid_argument("edge labeling belongs to a different graph");
  for (const Permutation& p : group) {
    if (p.is_identity()) continue;
    auto action = edge_action(g, p);
    bool keeps = true;
    for (std::size_t i = 0; i < action.size() && keeps; ++i) keeps = labeling.labels()[action[i]] == labeling.labels()[i];
    if (keeps) return false;
  }
  return true;
}

inline DistinguishingResult distinguishing_number(const Graph& g, const AutomorphismGroup& group,
                                                  const DistinguishingOptions& opts = {}) {
  if (group.degree() != g.order()) throw std::invalid_argument("group does not act on this graph");
  return detail::minimise(detail::vertex_actions(group), group.order(), g.order() <= opts.exact_bound, opts);
}

inline DistinguishingResult distinguishing_number(const Graph& g, const DistinguishingOptions& opts = {}) {
  return distinguishing_number(g, automorphism_group(g, opts.limits), opts);
}

/// D'(g). Undefined when a non-identity automorphism fixes every edge (K_2, or any graph with
/// two isolated vertices or a K_2 component).
inline DistinguishingResult distinguishing_index(const Graph& g, const AutomorphismGroup& group,
                                                 const DistinguishingOptions& opts = {}) {
  if (group.degree() != g.order()) throw std::invalid_argument("group does not act on this graph");
  auto actions = detail::edge_actions(g, group);
  if (!actions) {
    DistinguishingResult undefined;
    undefined.group_order = group.order();
    return undefined;
  }
  return detail::minimise(*actions, group.order(), g.size() <= opts.exact_edge_bound, opts);
}

inline DistinguishingResult distinguishing_index(const Graph& g, const DistinguishingOptions& opts = {}) {
  return distinguishing_index(g, automorphism_group(g, opts.limits), opts);
}

}  // namespace gsym
