#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sparing/graph.hpp"
#include "sparing/set_labels.hpp"

// Exact sparing numbers.
//
// A labeling is a weak IASI iff its non-singleton vertices form an independent
// set I (two non-singleton sets always sum to more than the larger of them).
// Edges leaving I are exactly the non-mono edges, and there are sum(deg, I) of
// them since I is independent. realize_labeling always succeeds for any
// independent I, so
//
//     phi(G) = |E| - max { sum(deg v, v in I) : I independent }.

namespace sparing {

enum class Engine { automatic, exhaustive, branch_and_bound };

inline constexpr std::size_t kExhaustiveLimit = 25;
inline constexpr std::size_t kBranchAndBoundLimit = 64;
inline constexpr std::uint64_t kDefaultNodeBudget = 500'000'000;
inline constexpr const char* kNodeBudgetEnv = "SPARING_NODE_BUDGET";

inline std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::exhaustive: return "exhaustive";
    case Engine::branch_and_bound: return "branch_and_bound";
    case Engine::automatic: break;
  }
  return "automatic";
}

class InstanceTooLarge : public std::runtime_error {
 public:
  InstanceTooLarge(std::size_t vertices, std::size_t limit, Engine engine)
      : std::runtime_error(std::string(engine_name(engine)) + " engine handles at most " +
                           std::to_string(limit) + " vertices, got " + std::to_string(vertices)),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class NodeBudgetExceeded : public std::runtime_error {
 public:
  explicit NodeBudgetExceeded(std::uint64_t budget)
      : std::runtime_error("search exceeded node budget of " + std::to_string(budget)) {}
};

/// Node budget from SPARING_NODE_BUDGET, or the default when unset/unparsable.
inline std::uint64_t node_budget_from_env() {
  if (const char* raw = std::getenv(kNodeBudgetEnv)) {
    char* end = nullptr;
    const auto value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) return value;
  }
  return kDefaultNodeBudget;
}

struct SolveOptions {
  Engine engine = Engine::automatic;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct IndependentSetResult {
  std::uint64_t weight = 0;
  std::vector<Vertex> vertices;  // ascending; lexicographically least among optima
  Engine engine = Engine::exhaustive;
  std::uint64_t nodes = 0;
};

struct SparingResult {
  std::uint64_t phi = 0;
  std::vector<Vertex> witness_independent_set;
  Labeling realized_labeling;
  Engine engine = Engine::exhaustive;
  std::uint64_t nodes_explored = 0;
};

namespace detail {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) noexcept { return Mask{1} << v; }

struct BitGraph {
  std::size_t n = 0;
  std::vector<Mask> adj;
  std::vector<std::uint64_t> deg;

  explicit BitGraph(const Graph& g) : n(g.vertex_count()), adj(n, 0), deg(n, 0) {
    for (const auto& e : g.edges()) {
      adj[e.u] |= bit(e.v);
      adj[e.v] |= bit(e.u);
    }
    for (Vertex v = 0; v < n; ++v) deg[v] = static_cast<std::uint64_t>(std::popcount(adj[v]));
  }

  // Edges with at least one end in `cand`: an upper bound on the weight any
  // independent subset of `cand` can add.
  std::uint64_t edges_touching(Mask cand) const {
    std::uint64_t degree_sum = 0, inner = 0;
    for (Mask rest = cand; rest; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      degree_sum += deg[v];
      inner += static_cast<std::uint64_t>(std::popcount(adj[v] & cand));
    }
    return degree_sum - inner / 2;
  }

  std::uint64_t weight(Mask set) const {
    std::uint64_t w = 0;
    for (Mask rest = set; rest; rest &= rest - 1) w += deg[std::countr_zero(rest)];
    return w;
  }
};

inline std::vector<Vertex> to_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++count_ > budget_) throw NodeBudgetExceeded(budget_);
  }
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t budget_;
  std::uint64_t count_ = 0;
};

// Visits every independent set once, in lexicographic order of the ascending
// vertex sequence (a set precedes its extensions). The first set attaining the
// maximum is therefore the lexicographically least optimum.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const BitGraph& g, NodeCounter& counter) : g_(g), counter_(counter) {}

  void run() {
    const Mask all = g_.n == 64 ? ~Mask{0} : bit(g_.n) - 1;
    visit(0, 0, all);
  }

  std::uint64_t best_weight = 0;
  Mask best_set = 0;

 private:
  void visit(Mask chosen, std::uint64_t w, Mask cand) {
    counter_.tick();
    if (w > best_weight) {
      best_weight = w;
      best_set = chosen;
    }
    for (Mask rest = cand; rest; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      const Mask later = rest & (rest - 1);  // candidates above v
      visit(chosen | bit(v), w + g_.deg[v], later & ~g_.adj[v]);
    }
  }

  const BitGraph& g_;
  NodeCounter& counter_;
};

// Finds the optimum weight. Branches on the highest-degree candidate first
// (ties by index), include before exclude; prunes when the bound cannot beat
// the incumbent.
class BranchAndBound {
 public:
  BranchAndBound(const BitGraph& g, NodeCounter& counter) : g_(g), counter_(counter) {
    order_.resize(g.n);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.deg[a] > g.deg[b]; });
  }

  std::uint64_t run() {
    const Mask all = g_.n == 64 ? ~Mask{0} : bit(g_.n) - 1;
    search(all, 0, 0);
    return best_;
  }

 private:
  void search(Mask cand, std::uint64_t w, std::size_t pos) {
    counter_.tick();
    if (w > best_) best_ = w;
    if (!cand) return;
    if (w + g_.edges_touching(cand) <= best_) return;
    while (!(cand & bit(order_[pos]))) ++pos;
    const auto v = order_[pos];
    search(cand & ~g_.adj[v] & ~bit(v), w + g_.deg[v], pos + 1);
    search(cand & ~bit(v), w, pos + 1);
  }

  const BitGraph& g_;
  NodeCounter& counter_;
  std::vector<Vertex> order_;
  std::uint64_t best_ = 0;
};

// Given the optimum weight, recovers the lexicographically least optimal set:
// include-first search in index order, which meets sets in lexicographic
// order, stopping at the first one reaching the target.
class LeastWitness {
 public:
  LeastWitness(const BitGraph& g, NodeCounter& counter, std::uint64_t target)
      : g_(g), counter_(counter), target_(target) {}

  Mask run() {
    const Mask all = g_.n == 64 ? ~Mask{0} : bit(g_.n) - 1;
    if (!search(all, 0, 0)) throw std::logic_error("no independent set reaches the optimum");
    return found_;
  }

 private:
  bool search(Mask cand, Mask chosen, std::uint64_t w) {
    counter_.tick();
    if (w == target_) {
      found_ = chosen;
      return true;
    }
    if (!cand || w + g_.edges_touching(cand) < target_) return false;
    const auto v = static_cast<Vertex>(std::countr_zero(cand));
    return search(cand & ~g_.adj[v] & ~bit(v), chosen | bit(v), w + g_.deg[v]) ||
           search(cand & ~bit(v), chosen, w);
  }

  const BitGraph& g_;
  NodeCounter& counter_;
  std::uint64_t target_;
  Mask found_ = 0;
};

inline Engine resolve_engine(Engine requested, std::size_t n) {
  if (requested == Engine::automatic)
    requested = n <= kExhaustiveLimit ? Engine::exhaustive : Engine::branch_and_bound;
  const auto limit =
      requested == Engine::exhaustive ? kExhaustiveLimit : kBranchAndBoundLimit;
  if (n > limit) throw InstanceTooLarge(n, limit, requested);
  return requested;
}

}  // namespace detail

/// Independent set maximizing the sum of vertex degrees. Ties go to the
/// lexicographically smallest ascending vertex sequence, for every engine.
inline IndependentSetResult max_degree_weight_independent_set(const Graph& g,
                                                              const SolveOptions& options = {}) {
  const auto engine = detail::resolve_engine(options.engine, g.vertex_count());
  const detail::BitGraph bg(g);
  detail::NodeCounter counter(options.node_budget);

  IndependentSetResult out;
  out.engine = engine;
  if (engine == Engine::exhaustive) {
    detail::ExhaustiveSearch search(bg, counter);
    search.run();
    out.weight = search.best_weight;
    out.vertices = detail::to_vertices(search.best_set);
  } else {
    detail::BranchAndBound search(bg, counter);
    out.weight = search.run();
    out.vertices = detail::to_vertices(detail::LeastWitness(bg, counter, out.weight).run());
  }
  out.nodes = counter.count();
  return out;
}

inline SparingResult sparing_number_exact(const Graph& g, const SolveOptions& options = {}) {
  auto mwis = max_degree_weight_independent_set(g, options);
  auto labeling = realize_labeling(g, mwis.vertices);
  const auto phi = static_cast<std::uint64_t>(g.edge_count()) - mwis.weight;

  // Certificate check on every solve.
  if (auto report = is_weak_iasi(labeling); !report)
    throw std::logic_error("realized labeling is not a weak IASI: " + report.message);
  if (mono_edge_count(labeling) != phi)
    throw std::logic_error("realized labeling disagrees with the computed sparing number");

  return SparingResult{phi, std::move(mwis.vertices), std::move(labeling), mwis.engine,
                       mwis.nodes};
}

struct CycleParityReport {
  std::size_t cycle_length = 0;
  std::size_t mono_edges = 0;
  bool consistent = false;  // mono-edge parity equals cycle-length parity
};

/// Checks that a weak IASI of a cycle has as many mono edges, mod 2, as the
/// cycle has vertices.
inline CycleParityReport parity_of_cycle_mono_edges(const Labeling& l) {
  const auto& g = l.graph();
  const auto n = g.vertex_count();
  bool is_cycle = n >= 3 && g.edge_count() == n;
  for (Vertex v = 0; is_cycle && v < n; ++v) is_cycle = g.degree(v) == 2;
  if (is_cycle) {
    // 2-regular: a cycle iff walking from 0 visits all n vertices.
    Vertex prev = 0, cur = 0;
    std::size_t steps = 0;
    do {
      const auto& nb = g.neighbors(cur);
      const auto next = (nb[0] != prev || steps == 0) ? nb[0] : nb[1];
      prev = cur;
      cur = next;
      ++steps;
    } while (cur != 0 && steps <= n);
    is_cycle = steps == n;
  }
  if (!is_cycle) throw std::invalid_argument("parity check needs a labeling of a cycle");
  if (auto report = is_weak_iasi(l); !report)
    throw std::invalid_argument("parity check needs a weak IASI: " + report.message);

  CycleParityReport out;
  out.cycle_length = n;
  out.mono_edges = mono_edge_count(l);
  out.consistent = (out.mono_edges % 2) == (n % 2);
  return out;
}

}  // namespace sparing
