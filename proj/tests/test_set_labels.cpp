#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "sparing/graph.hpp"
#include "sparing/set_labels.hpp"
#include "test_support.hpp"

namespace sparing {
namespace {

// Test-side sumset: std::set of every pairwise sum.
std::set<std::uint64_t> pairwise_sums(const SetLabel& a, const SetLabel& b) {
  std::set<std::uint64_t> out;
  for (auto x : a.elements())
    for (auto y : b.elements()) out.insert(x + y);
  return out;
}

SetLabel random_label(std::mt19937_64& rng, std::size_t max_size, std::uint64_t max_element) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<std::uint64_t> elem(0, max_element);
  std::vector<std::uint64_t> v;
  const auto want = size(rng);
  while (std::set<std::uint64_t>(v.begin(), v.end()).size() < want) v.push_back(elem(rng));
  return SetLabel(v);
}

TEST(SetLabel, NormalizesAndRejectsEmpty) {
  const SetLabel s{5, 1, 5, 3};
  EXPECT_EQ(s.elements(), (std::vector<std::uint64_t>{1, 3, 5}));
  EXPECT_THROW(SetLabel(std::vector<std::uint64_t>{}), std::invalid_argument);
}

TEST(Sumset, Examples) {
  EXPECT_EQ(sumset({3}, {1, 5}), (SetLabel{4, 8}));
  EXPECT_EQ(sumset({0, 1}, {0, 1}), (SetLabel{0, 1, 2}));
  const SetLabel a{0, 1}, b{0, 2};
  const auto expected = pairwise_sums(a, b);
  EXPECT_EQ(sumset(a, b).elements(), std::vector<std::uint64_t>(expected.begin(), expected.end()));
  EXPECT_EQ(sumset(a, b).size(), 4u);
}

TEST(Sumset, BoundsAndSingletonLawOnRandomPairs) {
  // Sizes <= 6, elements <= 20.
  std::mt19937_64 rng(20240101);
  for (int trial = 0; trial < 300000; ++trial) {
    const auto a = random_label(rng, 6, 20);
    const auto b = random_label(rng, 6, 20);
    const auto s = sumset(a, b).size();
    const auto hi = std::max(a.size(), b.size());
    ASSERT_LE(hi, s);
    ASSERT_LE(s, a.size() * b.size());
    if (std::min(a.size(), b.size()) == 1) {
      ASSERT_EQ(s, hi);
    } else {
      ASSERT_GE(s, a.size() + b.size() - 1);
      ASSERT_GT(s, hi);
    }
  }
}

TEST(SetIndexingNumber, Examples) {
  const Labeling single(path_graph(2), {SetLabel{5}, SetLabel{1, 2}});
  EXPECT_EQ(set_indexing_number(single, Vertex{0}), 1u);
  EXPECT_EQ(set_indexing_number(single, Edge{0, 1}), 2u);

  const Labeling wide(path_graph(2), {SetLabel{0, 1}, SetLabel{0, 2}});
  EXPECT_EQ(set_indexing_number(wide, Edge{0, 1}), pairwise_sums({0, 1}, {0, 2}).size());
  EXPECT_THROW(set_indexing_number(wide, Vertex{2}), std::out_of_range);
  EXPECT_THROW(set_indexing_number(Labeling(path_graph(3), {SetLabel{1}, SetLabel{2}, SetLabel{3}}),
                                   Edge{0, 2}),
               std::out_of_range);
}

TEST(Labeling, RequiresLabelPerVertex) {
  EXPECT_THROW(Labeling(path_graph(3), {SetLabel{1}}), std::invalid_argument);
}

TEST(IsIasi, Examples) {
  EXPECT_TRUE(is_iasi(Labeling(path_graph(3), {SetLabel{1}, SetLabel{2}, SetLabel{3}})));

  const auto dup = is_iasi(Labeling(path_graph(2), {SetLabel{1}, SetLabel{1}}));
  EXPECT_EQ(dup.violation, IasiReport::Violation::vertex_collision);

  // C_4 edge sums: 0-1 {1}, 0-3 {3}, 1-2 {3}, 2-3 {5}.
  const auto c4 = is_iasi(Labeling(cycle_graph(4), {SetLabel{0}, SetLabel{1}, SetLabel{2}, SetLabel{3}}));
  EXPECT_EQ(c4.violation, IasiReport::Violation::edge_collision);
  EXPECT_EQ(c4.where.first, (Edge{0, 3}));
  EXPECT_EQ(c4.where.second, (Edge{1, 2}));
}

TEST(IsWeakIasi, Examples) {
  EXPECT_TRUE(is_weak_iasi(Labeling(path_graph(2), {SetLabel{5}, SetLabel{1, 2}})));
  const auto bad = is_weak_iasi(Labeling(path_graph(2), {SetLabel{0, 1}, SetLabel{0, 2}}));
  EXPECT_EQ(bad.violation, IasiReport::Violation::not_weak);
  EXPECT_EQ(bad.where.first, (Edge{0, 1}));
}

TEST(IsWeakIasi, ReportsFirstViolationInEdgeOrder) {
  const Labeling l(path_graph(4), {SetLabel{1}, SetLabel{10, 11}, SetLabel{20, 22}, SetLabel{30, 35}});
  const auto r = is_weak_iasi(l);
  EXPECT_EQ(r.violation, IasiReport::Violation::not_weak);
  EXPECT_EQ(r.where.first, (Edge{1, 2}));
}

TEST(IsWeakIasi, AgreesWithSingletonEndCondition) {
  std::mt19937_64 rng(7);
  int iasi_seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto g = testing::random_graph(rng, 6, 0.4);
    std::vector<SetLabel> labels;
    std::bernoulli_distribution wide(0.3);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const std::uint64_t base = 1000 * (v + 1) + 37 * v * v;
      labels.push_back(wide(rng) ? SetLabel{base, base + 1 + v} : SetLabel{base});
    }
    const Labeling l(g, std::move(labels));
    if (!is_iasi(l)) continue;
    ++iasi_seen;
    EXPECT_EQ(bool(is_weak_iasi(l)), every_edge_has_singleton_end(l));
  }
  EXPECT_GT(iasi_seen, 1000);
}

TEST(MonoIndexedEdges, Examples) {
  const Labeling tri(cycle_graph(3), {SetLabel{1}, SetLabel{2}, SetLabel{3, 4}});
  EXPECT_EQ(mono_indexed_edges(tri), (std::vector<Edge>{{0, 1}}));

  const Labeling c4(cycle_graph(4), {SetLabel{1}, SetLabel{2, 3}, SetLabel{4}, SetLabel{5, 6}});
  EXPECT_TRUE(mono_indexed_edges(c4).empty());

  const auto k4 = realize_labeling(complete_graph(4), {0});
  EXPECT_EQ(mono_edge_count(k4), 3u);  // (n-1)(n-2)/2 with n = 4
}

TEST(RealizeLabeling, Examples) {
  const auto c4 = realize_labeling(cycle_graph(4), {0, 2});
  EXPECT_TRUE(is_weak_iasi(c4));
  EXPECT_EQ(mono_edge_count(c4), 0u);

  const auto c3 = realize_labeling(cycle_graph(3), {0});
  EXPECT_TRUE(is_weak_iasi(c3));
  EXPECT_EQ(mono_edge_count(c3), 1u);

  const auto g = cartesian_product(complete_graph(3), path_graph(3));
  const auto uniform = realize_labeling(g, {});
  EXPECT_TRUE(is_weak_iasi(uniform));
  EXPECT_EQ(mono_edge_count(uniform), g.edge_count());
  for (const auto& s : uniform.labels()) EXPECT_TRUE(s.singleton());
}

TEST(RealizeLabeling, RejectsAdjacentNonSingletons) {
  EXPECT_THROW(realize_labeling(cycle_graph(4), {0, 1}), std::invalid_argument);
  EXPECT_THROW(realize_labeling(cycle_graph(4), {7}), std::out_of_range);
}

TEST(RealizeLabeling, NonSingletonLabelsHaveTwoElements) {
  const auto l = realize_labeling(cycle_graph(6), {1, 3, 5});
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(l.labels()[v].size(), v % 2 == 1 ? 2u : 1u);
  EXPECT_EQ(nonsingleton_vertices(l), (std::vector<Vertex>{1, 3, 5}));
}

TEST(RealizeLabeling, RandomGraphsAreWeakWithPredictedMonoCount) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 20);
    std::uniform_real_distribution<double> density(0.05, 0.8);
    const auto g = testing::random_graph(rng, size(rng), density(rng));
    const auto ind = testing::random_independent_set(rng, g);
    const auto l = realize_labeling(g, ind);
    ASSERT_TRUE(is_weak_iasi(l)) << is_weak_iasi(l).message;
    std::size_t degree_sum = 0;
    for (auto v : ind) degree_sum += g.degree(v);
    EXPECT_EQ(mono_edge_count(l), g.edge_count() - degree_sum);
  }
}

TEST(RealizeLabeling, LargeGraphsUseSidonBases) {
  for (std::size_t n = 31; n <= 64; ++n) {
    const auto bases = injective_bases(n);
    std::set<std::uint64_t> sums;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) EXPECT_TRUE(sums.insert(bases[i] + bases[j]).second);
  }
  std::mt19937_64 rng(99);
  for (std::size_t n : {31u, 40u, 64u}) {
    const auto g = testing::random_graph(rng, n, 0.3);
    const auto l = realize_labeling(g, testing::random_independent_set(rng, g));
    EXPECT_TRUE(is_weak_iasi(l)) << n;
  }
}

TEST(RealizeLabeling, PowerOfFourBasesUpToThirty) {
  const auto bases = injective_bases(30);
  EXPECT_EQ(bases.front(), 4u);
  for (std::size_t i = 1; i < bases.size(); ++i) EXPECT_EQ(bases[i], 4 * bases[i - 1]);
}

// Deleting a vertex or an edge keeps a weak IASI weak.
TEST(RealizeLabeling, RestrictionToSubgraphsStaysWeak) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_graph(rng, 9, 0.45);
    const auto l = realize_labeling(g, testing::random_independent_set(rng, g));

    for (std::size_t drop = 0; drop < g.edge_count(); ++drop) {
      std::vector<Edge> edges = g.edges();
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
      const Labeling sub(Graph(g.vertex_count(), edges), l.labels());
      ASSERT_TRUE(is_weak_iasi(sub));
    }
    for (Vertex gone = 0; gone < g.vertex_count(); ++gone) {
      auto index = [&](Vertex v) { return v < gone ? v : v - 1; };
      std::vector<Edge> edges;
      for (const auto& e : g.edges())
        if (e.u != gone && e.v != gone) edges.push_back({index(e.u), index(e.v)});
      std::vector<SetLabel> labels;
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (v != gone) labels.push_back(l.labels()[v]);
      ASSERT_TRUE(is_weak_iasi(Labeling(Graph(g.vertex_count() - 1, edges), labels)));
    }
  }
}

}  // namespace
}  // namespace sparing
