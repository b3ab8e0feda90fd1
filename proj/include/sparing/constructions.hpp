#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparing/formulas.hpp"
#include "sparing/graph.hpp"
#include "sparing/set_labels.hpp"

// Explicit weak IASIs for the product families. Each labeler chooses which
// vertices carry two-element sets and hands that independent set to
// realize_labeling; the outcome records the mono-edge count it achieves next
// to the claimed value(s).

namespace sparing {

struct ConstructionOutcome {
  FamilyInstance family;
  Labeling labeling;
  std::size_t achieved_mono_edges = 0;
  /// As-stated claim first, then the proof count when it differs.
  std::vector<FormulaClaim> claims;

  const FormulaClaim& claim() const { return claims.front(); }
};

namespace detail {

using Params = std::map<std::string, std::int64_t>;

inline ConstructionOutcome finish(FamilyInstance inst, const Graph& g,
                                  const std::vector<Vertex>& nonsingleton) {
  auto labeling = realize_labeling(g, nonsingleton);
  const auto achieved = mono_edge_count(labeling);
  auto claims = all_claims(inst);
  return ConstructionOutcome{std::move(inst), std::move(labeling), achieved, std::move(claims)};
}

inline std::int64_t checked(std::int64_t value, std::int64_t min, const char* what) {
  if (value < min)
    throw std::invalid_argument(std::string(what) + " must be at least " + std::to_string(min));
  return value;
}

/// Rows of an odd cycle of length `len` labeled alternately singleton /
/// non-singleton from `start`: start+1, start+3, ..., start+len-2. The single
/// mono edge is (start-1, start).
inline std::vector<std::size_t> odd_cycle_pattern(std::size_t len, std::size_t start) {
  std::vector<std::size_t> rows;
  for (std::size_t k = 1; k + 1 < len; k += 2) rows.push_back((start + k) % len);
  return rows;
}

/// Starting offsets for `copies` consecutive odd cycles of length `len`
/// arranged around a cycle (closed) or along a path. Offsets of neighbouring
/// copies differ by +-1, which makes their non-singleton rows disjoint.
inline std::vector<std::size_t> cycle_starts(std::size_t len, std::size_t copies, bool closed) {
  std::vector<std::size_t> starts(copies, 0);
  if (!closed) {
    for (std::size_t j = 0; j < copies; ++j) starts[j] = j % len;
    return starts;
  }
  if (copies % 2 == 0) {
    for (std::size_t j = 0; j < copies; ++j) starts[j] = j % 2;
    return starts;
  }
  // Odd number of steps around a closed walk: take (copies+len)/2 steps up and
  // the rest down, a net displacement of len. Needs copies >= len.
  if (copies < len) throw std::invalid_argument("closed odd walk needs copies >= cycle length");
  const auto ups = (copies + len) / 2;
  std::size_t s = 0;
  for (std::size_t j = 0; j < copies; ++j) {
    starts[j] = s;
    s = j < ups ? (s + 1) % len : (s + len - 1) % len;
  }
  return starts;
}

/// Non-singleton vertices from a two-coloring: color 1 class.
inline std::vector<Vertex> color_class(const Graph& g) {
  const auto check = is_bipartite(g);
  if (!check) throw std::invalid_argument("graph is not bipartite");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (check.coloring[v] == 1) out.push_back(v);
  return out;
}

}  // namespace detail

/// Any bipartite instance: one color class non-singleton, no mono edges.
inline ConstructionOutcome label_bipartite_checkerboard(const FamilyInstance& inst) {
  const auto g = build_graph(inst);
  return detail::finish(inst, g, detail::color_class(g));
}

/// P(rows) x P(cols), both vertex counts. Checkerboard.
inline ConstructionOutcome label_grid(std::int64_t rows, std::int64_t cols) {
  FamilyInstance inst(Family::grid, {{"rows", rows}, {"cols", cols}});
  const auto g = build_graph(inst);
  std::vector<Vertex> ns;
  for (std::size_t c = 0; c < static_cast<std::size_t>(cols); ++c)
    for (std::size_t r = 0; r < static_cast<std::size_t>(rows); ++r)
      if ((r + c) % 2 == 1) ns.push_back(product_index(r, c, rows));
  return detail::finish(std::move(inst), g, ns);
}

/// C_m x P with path_edges + 1 copies of C_m.
inline ConstructionOutcome label_prism(std::int64_t m, std::int64_t path_edges) {
  FamilyInstance inst(Family::prism, {{"m", m}, {"n", path_edges}});
  const auto g = build_graph(inst);
  const auto len = static_cast<std::size_t>(m);
  const auto copies = static_cast<std::size_t>(path_edges) + 1;
  std::vector<Vertex> ns;
  if (len % 2 == 0) {
    for (std::size_t c = 0; c < copies; ++c)
      for (std::size_t r = 0; r < len; ++r)
        if ((r + c) % 2 == 1) ns.push_back(product_index(r, c, len));
  } else {
    // One mono edge per copy, rotated one step per copy so that neighbouring
    // copies never share a non-singleton row.
    const auto starts = detail::cycle_starts(len, copies, false);
    for (std::size_t c = 0; c < copies; ++c)
      for (auto r : detail::odd_cycle_pattern(len, starts[c])) ns.push_back(product_index(r, c, len));
  }
  return detail::finish(std::move(inst), g, ns);
}

/// C_m x C_n. Both even: checkerboard. Otherwise one cycle factor is laid out
/// as copies of the other with one mono edge per copy; the inner cycle is the
/// odd one (the shorter one when both are odd).
inline ConstructionOutcome label_torus(std::int64_t m, std::int64_t n) {
  FamilyInstance inst(Family::torus, {{"m", m}, {"n", n}});
  const auto g = build_graph(inst);
  const auto rows = static_cast<std::size_t>(m);
  const auto copies = static_cast<std::size_t>(n);
  std::vector<Vertex> ns;
  if (rows % 2 == 0 && copies % 2 == 0) {
    for (std::size_t c = 0; c < copies; ++c)
      for (std::size_t r = 0; r < rows; ++r)
        if ((r + c) % 2 == 1) ns.push_back(product_index(r, c, rows));
    return detail::finish(std::move(inst), g, ns);
  }
  const bool rows_inner = rows % 2 == 1 && (copies % 2 == 0 || rows <= copies);
  const auto inner = rows_inner ? rows : copies;
  const auto outer = rows_inner ? copies : rows;
  const auto starts = detail::cycle_starts(inner, outer, true);
  for (std::size_t j = 0; j < outer; ++j)
    for (auto i : detail::odd_cycle_pattern(inner, starts[j]))
      ns.push_back(rows_inner ? product_index(i, j, rows) : product_index(j, i, rows));
  return detail::finish(std::move(inst), g, ns);
}

/// K_m x K_n: at most one non-singleton vertex per copy of K_m, on distinct
/// rows since corresponding vertices of all copies are pairwise adjacent.
/// Copies beyond the m-th stay 1-uniform.
inline ConstructionOutcome label_complete_product(std::int64_t m, std::int64_t n) {
  FamilyInstance inst(Family::complete_x_complete, {{"m", m}, {"n", n}});
  const auto g = build_graph(inst);
  std::vector<Vertex> ns;
  const auto used = static_cast<std::size_t>(std::min(m, n));
  for (std::size_t c = 0; c < used; ++c) ns.push_back(product_index(c, c, static_cast<std::size_t>(m)));
  return detail::finish(std::move(inst), g, ns);
}

/// K_n x P with path_edges + 1 copies of K_n; the non-singleton vertex
/// alternates between rows 0 and 1 along the path.
inline ConstructionOutcome label_complete_path(std::int64_t n, std::int64_t path_edges) {
  FamilyInstance inst(Family::complete_x_path, {{"n", n}, {"m", path_edges}});
  const auto g = build_graph(inst);
  std::vector<Vertex> ns;
  for (std::size_t c = 0; c <= static_cast<std::size_t>(path_edges); ++c)
    ns.push_back(product_index(c % 2, c, static_cast<std::size_t>(n)));
  return detail::finish(std::move(inst), g, ns);
}

/// K_n x C_m: alternating rows 0/1 around the cycle; for odd m the last copy
/// is 1-uniform.
inline ConstructionOutcome label_complete_cycle(std::int64_t n, std::int64_t m) {
  FamilyInstance inst(Family::complete_x_cycle, {{"n", n}, {"m", m}});
  const auto g = build_graph(inst);
  const auto labeled = static_cast<std::size_t>(m % 2 == 0 ? m : m - 1);
  std::vector<Vertex> ns;
  for (std::size_t c = 0; c < labeled; ++c)
    ns.push_back(product_index(c % 2, c, static_cast<std::size_t>(n)));
  return detail::finish(std::move(inst), g, ns);
}

/// K_{m1,m2} x C_n, n odd: copies alternate Y / X as the non-singleton side,
/// the last copy is 1-uniform. Even n is bipartite; use
/// label_bipartite_checkerboard.
inline ConstructionOutcome label_bipartite_cycle(std::int64_t m1, std::int64_t m2, std::int64_t n) {
  if (n % 2 == 0)
    throw std::invalid_argument("label_bipartite_cycle needs an odd cycle; K_{m1,m2} x C_n is "
                                "bipartite for even n");
  FamilyInstance inst(Family::bipartite_x_cycle, {{"m1", m1}, {"m2", m2}, {"n", n}});
  const auto g = build_graph(inst);
  const auto sides = complete_bipartite_sides(static_cast<std::size_t>(m1), static_cast<std::size_t>(m2));
  const auto rows = static_cast<std::size_t>(m1 + m2);
  std::vector<Vertex> ns;
  for (std::size_t c = 0; c + 1 < static_cast<std::size_t>(n); ++c)
    for (auto r : (c % 2 == 0 ? sides.y : sides.x)) ns.push_back(product_index(r, c, rows));
  return detail::finish(std::move(inst), g, ns);
}

/// K_{m1,m2} x K_n: only the first copy's Y side is non-singleton. For n = 2
/// the product is bipartite and the checkerboard labeling is used instead.
inline ConstructionOutcome label_bipartite_complete(std::int64_t m1, std::int64_t m2, std::int64_t n) {
  FamilyInstance inst(Family::bipartite_x_complete, {{"m1", m1}, {"m2", m2}, {"n", n}});
  if (n == 2) return label_bipartite_checkerboard(inst);
  const auto g = build_graph(inst);
  std::vector<Vertex> ns;
  for (auto r : complete_bipartite_sides(static_cast<std::size_t>(m1), static_cast<std::size_t>(m2)).y)
    ns.push_back(product_index(r, 0, static_cast<std::size_t>(m1 + m2)));
  return detail::finish(std::move(inst), g, ns);
}

/// K_n: a single non-singleton vertex.
inline ConstructionOutcome label_complete(std::int64_t n) {
  FamilyInstance inst(Family::complete, {{"n", n}});
  const auto g = build_graph(inst);
  return detail::finish(std::move(inst), g, {0});
}

/// C_n: alternating, with one mono edge when n is odd.
inline ConstructionOutcome label_cycle(std::int64_t n) {
  FamilyInstance inst(Family::cycle, {{"n", n}});
  const auto g = build_graph(inst);
  std::vector<Vertex> ns;
  for (Vertex v = 1; v + (n % 2) < static_cast<std::size_t>(n); v += 2) ns.push_back(v);
  return detail::finish(std::move(inst), g, ns);
}

/// Runs the family's labeler. Bipartite instances of bipartite_x_cycle go to
/// the checkerboard labeler.
inline ConstructionOutcome construct(const FamilyInstance& inst) {
  auto p = [&](const char* name) { return inst.at(name); };
  switch (inst.family()) {
    case Family::grid: return label_grid(p("rows"), p("cols"));
    case Family::prism: return label_prism(p("m"), p("n"));
    case Family::torus: return label_torus(p("m"), p("n"));
    case Family::complete_x_complete: return label_complete_product(p("m"), p("n"));
    case Family::complete_x_path: return label_complete_path(p("n"), p("m"));
    case Family::complete_x_cycle: return label_complete_cycle(p("n"), p("m"));
    case Family::bipartite_x_cycle:
      if (p("n") % 2 == 0) return label_bipartite_checkerboard(inst);
      return label_bipartite_cycle(p("m1"), p("m2"), p("n"));
    case Family::bipartite_x_complete: return label_bipartite_complete(p("m1"), p("m2"), p("n"));
    case Family::complete: return label_complete(p("n"));
    case Family::cycle: return label_cycle(p("n"));
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace sparing
