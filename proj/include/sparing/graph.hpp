#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sparing {

using Vertex = std::size_t;

/// Undirected edge stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Position of a product vertex: `row` indexes the first factor, `copy` the
/// second factor (the copy of the first factor the vertex lives in).
struct Coord {
  std::size_t row = 0;
  std::size_t copy = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// Simple undirected graph. Immutable once built; every constructor path
/// goes through the validating constructor below.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::vector<Edge> edges,
        std::optional<std::vector<Coord>> coords = std::nullopt)
      : n_(vertex_count), edges_(std::move(edges)), coords_(std::move(coords)) {
    if (n_ == 0) throw std::invalid_argument("graph must have at least one vertex");
    for (auto& e : edges_) {
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (e.u >= n_ || e.v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("duplicate edge");

    adjacency_.resize(n_);
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());

    if (coords_) validate_coords();
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::optional<std::vector<Coord>>& coords() const noexcept { return coords_; }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool adjacent(Vertex a, Vertex b) const {
    const auto& list = neighbors(a);
    check_vertex(b);
    return std::binary_search(list.begin(), list.end(), b);
  }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> out;
    out.reserve(n_);
    for (const auto& list : adjacency_) out.push_back(list.size());
    std::sort(out.begin(), out.end());
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " +
                              std::to_string(n_) + "-vertex graph");
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.coords_ == b.coords_;
  }

 private:
  void validate_coords() const {
    const auto& c = *coords_;
    if (c.size() != n_) throw std::invalid_argument("coords size must equal vertex count");
    std::size_t rows = 0, copies = 0;
    for (const auto& p : c) {
      rows = std::max(rows, p.row + 1);
      copies = std::max(copies, p.copy + 1);
    }
    if (rows * copies != n_) throw std::invalid_argument("coords do not form a full grid");
    std::vector<bool> seen(n_, false);
    for (const auto& p : c) {
      const auto slot = p.copy * rows + p.row;
      if (seen[slot]) throw std::invalid_argument("coords are not a bijection");
      seen[slot] = true;
    }
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::optional<std::vector<Coord>> coords_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Generators. Paths are parameterized by vertex count.

inline Graph path_graph(std::size_t vertex_count) {
  if (vertex_count < 2) throw std::invalid_argument("path needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < vertex_count; ++i) edges.push_back({i, i + 1});
  return Graph(vertex_count, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
  if (n < 2) throw std::invalid_argument("complete graph needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

/// The two sides of K_{m1,m2}: X = [0, m1), Y = [m1, m1 + m2).
struct Bipartition {
  std::vector<Vertex> x;
  std::vector<Vertex> y;
};

inline Bipartition complete_bipartite_sides(std::size_t m1, std::size_t m2) {
  if (m1 < 1 || m2 < 1) throw std::invalid_argument("complete bipartite sides must be nonempty");
  Bipartition sides;
  for (Vertex i = 0; i < m1; ++i) sides.x.push_back(i);
  for (Vertex j = 0; j < m2; ++j) sides.y.push_back(m1 + j);
  return sides;
}

inline Graph complete_bipartite(std::size_t m1, std::size_t m2) {
  const auto sides = complete_bipartite_sides(m1, m2);
  std::vector<Edge> edges;
  for (auto a : sides.x)
    for (auto b : sides.y) edges.push_back({a, b});
  return Graph(m1 + m2, std::move(edges));
}

/// Index of product vertex (row, copy): copy-major, so the copies of the
/// first factor occupy contiguous index blocks.
constexpr Vertex product_index(std::size_t row, std::size_t copy, std::size_t rows) noexcept {
  return copy * rows + row;
}

inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const auto p1 = g1.vertex_count();
  const auto p2 = g2.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(p1 * g2.edge_count() + p2 * g1.edge_count());
  for (std::size_t copy = 0; copy < p2; ++copy)
    for (const auto& e : g1.edges())
      edges.push_back({product_index(e.u, copy, p1), product_index(e.v, copy, p1)});
  for (std::size_t row = 0; row < p1; ++row)
    for (const auto& e : g2.edges())
      edges.push_back({product_index(row, e.u, p1), product_index(row, e.v, p1)});

  std::vector<Coord> coords(p1 * p2);
  for (std::size_t copy = 0; copy < p2; ++copy)
    for (std::size_t row = 0; row < p1; ++row) coords[product_index(row, copy, p1)] = {row, copy};
  return Graph(p1 * p2, std::move(edges), std::move(coords));
}

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

/// Result of a bipartiteness test: a proper two-coloring, or a closed walk
/// of odd length (a simple odd cycle, listed in traversal order).
struct BipartiteCheck {
  bool bipartite = false;
  std::vector<int> coloring;
  std::vector<Vertex> odd_cycle;

  explicit operator bool() const noexcept { return bipartite; }
};

inline BipartiteCheck is_bipartite(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);

  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Same BFS level parity: climb both tree paths to their meeting point.
          std::vector<Vertex> left{u}, right{w};
          auto a = u, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          BipartiteCheck out;
          out.odd_cycle = std::move(left);
          out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
          return out;
        }
      }
    }
  }
  BipartiteCheck out;
  out.bipartite = true;
  out.coloring = std::move(color);
  return out;
}

}  // namespace sparing
