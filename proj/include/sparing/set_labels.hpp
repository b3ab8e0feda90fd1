#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sparing/graph.hpp"

namespace sparing {

/// Finite nonempty set of non-negative integers, kept sorted and deduplicated.
class SetLabel {
 public:
  using value_type = std::uint64_t;

  explicit SetLabel(std::vector<value_type> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.empty()) throw std::invalid_argument("set label must be nonempty");
  }
  SetLabel(std::initializer_list<value_type> elements)
      : SetLabel(std::vector<value_type>(elements)) {}

  std::size_t size() const noexcept { return elements_.size(); }
  bool singleton() const noexcept { return elements_.size() == 1; }
  const std::vector<value_type>& elements() const noexcept { return elements_; }
  value_type min() const noexcept { return elements_.front(); }

  friend auto operator<=>(const SetLabel&, const SetLabel&) = default;

 private:
  std::vector<value_type> elements_;
};

/// A + B = { a + b : a in A, b in B }.
inline SetLabel sumset(const SetLabel& a, const SetLabel& b) {
  std::vector<SetLabel::value_type> sums;
  sums.reserve(a.size() * b.size());
  for (auto x : a.elements())
    for (auto y : b.elements()) sums.push_back(x + y);
  return SetLabel(std::move(sums));
}

/// Vertex labeling f of a graph; the induced edge labels f+(uv) are computed
/// on demand.
class Labeling {
 public:
  Labeling(Graph graph, std::vector<SetLabel> labels)
      : graph_(std::move(graph)), labels_(std::move(labels)) {
    if (labels_.size() != graph_.vertex_count())
      throw std::invalid_argument("labeling must assign a set to every vertex");
  }

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<SetLabel>& labels() const noexcept { return labels_; }

  const SetLabel& label(Vertex v) const {
    graph_.check_vertex(v);
    return labels_[v];
  }

  SetLabel edge_label(const Edge& e) const {
    if (!graph_.adjacent(e.u, e.v))
      throw std::out_of_range("no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    return sumset(labels_[e.u], labels_[e.v]);
  }

 private:
  Graph graph_;
  std::vector<SetLabel> labels_;
};

/// Cardinality of the set-label of a vertex or an edge.
inline std::size_t set_indexing_number(const Labeling& l, Vertex v) { return l.label(v).size(); }
inline std::size_t set_indexing_number(const Labeling& l, const Edge& e) {
  return l.edge_label(e).size();
}

struct IasiReport {
  enum class Violation { none, vertex_collision, edge_collision, not_weak };

  Violation violation = Violation::none;
  /// Colliding vertices (vertex_collision), colliding edges (edge_collision),
  /// or the offending edge twice (not_weak).
  std::pair<Edge, Edge> where{};
  std::string message;

  bool ok() const noexcept { return violation == Violation::none; }
  explicit operator bool() const noexcept { return ok(); }
};

inline IasiReport is_iasi(const Labeling& l) {
  const auto& labels = l.labels();
  std::map<SetLabel, Vertex> seen_vertices;
  for (Vertex v = 0; v < labels.size(); ++v) {
    auto [it, fresh] = seen_vertices.emplace(labels[v], v);
    if (!fresh) {
      return {IasiReport::Violation::vertex_collision,
              {{it->second, it->second}, {v, v}},
              "vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                  " share a set-label"};
    }
  }
  std::map<SetLabel, Edge> seen_edges;
  for (const auto& e : l.graph().edges()) {
    auto [it, fresh] = seen_edges.emplace(sumset(labels[e.u], labels[e.v]), e);
    if (!fresh) {
      const auto& f = it->second;
      return {IasiReport::Violation::edge_collision,
              {f, e},
              "edges " + std::to_string(f.u) + "-" + std::to_string(f.v) + " and " +
                  std::to_string(e.u) + "-" + std::to_string(e.v) + " share a sumset"};
    }
  }
  return {};
}

/// IASI whose every edge satisfies |f+(uv)| = max(|f(u)|, |f(v)|).
/// The first violation in sorted edge order is reported.
inline IasiReport is_weak_iasi(const Labeling& l) {
  auto report = is_iasi(l);
  if (!report) return report;
  const auto& labels = l.labels();
  for (const auto& e : l.graph().edges()) {
    const auto sum = sumset(labels[e.u], labels[e.v]).size();
    if (sum != std::max(labels[e.u].size(), labels[e.v].size())) {
      return {IasiReport::Violation::not_weak,
              {e, e},
              "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has sumset size " +
                  std::to_string(sum) + ", exceeding the larger endpoint label"};
    }
  }
  return {};
}

/// Structural form of the weak condition: no edge joins two non-singleton labels.
inline bool every_edge_has_singleton_end(const Labeling& l) {
  const auto& labels = l.labels();
  return std::all_of(l.graph().edges().begin(), l.graph().edges().end(), [&](const Edge& e) {
    return labels[e.u].singleton() || labels[e.v].singleton();
  });
}

/// Edges whose sumset is a single integer, i.e. both ends singletons.
inline std::vector<Edge> mono_indexed_edges(const Labeling& l) {
  std::vector<Edge> out;
  const auto& labels = l.labels();
  for (const auto& e : l.graph().edges())
    if (labels[e.u].singleton() && labels[e.v].singleton()) out.push_back(e);
  return out;
}

inline std::size_t mono_edge_count(const Labeling& l) { return mono_indexed_edges(l).size(); }

namespace detail {

// Prime p >= n for the Sidon fallback.
inline std::uint64_t next_prime(std::uint64_t n) {
  auto is_prime = [](std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return true;
  };
  while (!is_prime(n)) ++n;
  return n;
}

}  // namespace detail

/// Base values b_0 < b_1 < ... whose pairwise sums b_i + b_j (i != j) are all
/// distinct. Up to 30 vertices these are powers of four (each pair sum has
/// exactly two nonzero base-4 digits). Beyond that 4^(i+1) overflows 64 bits,
/// so the Erdos-Turan Sidon set 2pk + (k^2 mod p) is used instead, scaled by 4.
inline std::vector<std::uint64_t> injective_bases(std::size_t count) {
  std::vector<std::uint64_t> bases(count);
  if (count <= 30) {
    std::uint64_t b = 4;
    for (auto& x : bases) {
      x = b;
      b *= 4;
    }
    return bases;
  }
  const auto p = detail::next_prime(count);
  for (std::uint64_t k = 0; k < count; ++k) bases[k] = 4 * (2 * p * k + (k * k) % p) + 4;
  return bases;
}

/// Builds a weak IASI whose non-singleton vertices are exactly `nonsingleton`.
/// Singletons get {b_i}, the others {b_i, b_i + 1}. Distinct edges have
/// distinct smallest sums b_i + b_j, so both f and f+ are injective.
inline Labeling realize_labeling(const Graph& g, std::span<const Vertex> nonsingleton) {
  std::vector<bool> marked(g.vertex_count(), false);
  for (auto v : nonsingleton) {
    g.check_vertex(v);
    marked[v] = true;
  }
  for (const auto& e : g.edges())
    if (marked[e.u] && marked[e.v])
      throw std::invalid_argument("non-singleton vertices " + std::to_string(e.u) + " and " +
                                  std::to_string(e.v) + " are adjacent");

  const auto bases = injective_bases(g.vertex_count());
  std::vector<SetLabel> labels;
  labels.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    labels.push_back(marked[v] ? SetLabel{bases[v], bases[v] + 1} : SetLabel{bases[v]});
  return Labeling(g, std::move(labels));
}

inline Labeling realize_labeling(const Graph& g, std::initializer_list<Vertex> nonsingleton) {
  return realize_labeling(g, std::span<const Vertex>(nonsingleton.begin(), nonsingleton.size()));
}

/// Vertices carrying non-singleton labels, ascending.
inline std::vector<Vertex> nonsingleton_vertices(const Labeling& l) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < l.labels().size(); ++v)
    if (!l.labels()[v].singleton()) out.push_back(v);
  return out;
}

}  // namespace sparing
