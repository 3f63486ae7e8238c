#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "activity/errors.hpp"
#include "activity/gain_graph.hpp"

using namespace activity;

namespace {

// Edge subsets forming one circle of the multigraph with gain zero, found by
// checking every subset.
std::set<EdgeSet> brute_balanced_circles(const GainGraph& g) {
  std::set<EdgeSet> out;
  const std::size_t m = g.edge_count();
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    EdgeSet s;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1ul << i)) s.push_back(i);
    }
    if (s.size() < 2) continue;
    std::map<int, std::vector<std::size_t>> incident;
    for (std::size_t e : s) {
      incident[g.edge(e).tail].push_back(e);
      incident[g.edge(e).head].push_back(e);
    }
    bool two_regular = true;
    for (const auto& [v, list] : incident) two_regular = two_regular && list.size() == 2;
    if (!two_regular || incident.size() != s.size()) continue;
    // Walk the circle from the first vertex, summing signed gains.
    const int start = incident.begin()->first;
    int at = start;
    std::size_t prev = static_cast<std::size_t>(-1);
    long gain = 0;
    std::size_t steps = 0;
    do {
      const auto& list = incident[at];
      const std::size_t e = list[0] != prev ? list[0] : list[1];
      const GainEdge& ed = g.edge(e);
      if (ed.tail == at) {
        gain += ed.gain;
        at = ed.head;
      } else {
        gain -= ed.gain;
        at = ed.tail;
      }
      prev = e;
      ++steps;
    } while (at != start);
    if (steps == s.size() && gain == 0) out.insert(s);
  }
  return out;
}

}  // namespace

TEST(GainGraph, NormalizesOrientation) {
  const GainGraph g(3, {{2, 1, 5}, {1, 3, -2}});
  EXPECT_EQ(g.edge(0), (GainEdge{1, 2, -5}));
  EXPECT_EQ(g.edge(1), (GainEdge{1, 3, -2}));
  EXPECT_EQ(g.edge(0).to_string(), "-5(1,2)");
}

TEST(GainGraph, RejectsBadEdges) {
  EXPECT_THROW(GainGraph(3, {{1, 1, 0}}), DomainError);
  EXPECT_THROW(GainGraph(3, {{0, 1, 0}}), DomainError);
  EXPECT_THROW(GainGraph(3, {{1, 4, 0}}), DomainError);
  EXPECT_THROW(GainGraph(3, {{1, 2, 1}, {2, 1, -1}}), DomainError);
}

TEST(GainGraph, CompleteInterval) {
  const GainGraph g = complete_interval(3, 0, 1);
  ASSERT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g.edge(0), (GainEdge{1, 2, 0}));
  EXPECT_EQ(g.edge(1), (GainEdge{1, 2, 1}));
  EXPECT_EQ(g.edge(5), (GainEdge{2, 3, 1}));
  EXPECT_EQ(complete_interval(4, -1, 2).edge_count(), 24u);
  EXPECT_EQ(complete_interval(1, 0, 3).edge_count(), 0u);
  EXPECT_EQ(g.edges_between(3, 1), (std::vector<std::size_t>{2, 3}));
  EXPECT_TRUE(g.underlying_connected());
  EXPECT_FALSE(GainGraph(3, {{1, 2, 0}}).underlying_connected());
}

TEST(GainGraph, LexicographicAndReorder) {
  const GainGraph g = GainGraph::lexicographic(3, {{2, 3, 0}, {1, 2, 4}, {1, 2, -1}});
  EXPECT_EQ(g.edge(0), (GainEdge{1, 2, -1}));
  EXPECT_EQ(g.edge(2), (GainEdge{2, 3, 0}));
  const GainGraph r = g.reordered({2, 0, 1});
  EXPECT_EQ(r.edge(0), (GainEdge{2, 3, 0}));
  EXPECT_EQ(r.index_of({1, 2, 4}), 2u);
  EXPECT_THROW(r.index_of({1, 3, 0}), DomainError);
  EXPECT_THROW(g.reordered({0, 0, 1}), DomainError);
  EXPECT_THROW(g.reordered({0, 1}), DomainError);
}

TEST(Circles, GainAndValidation) {
  const GainGraph g = complete_interval(3, 0, 1);
  // 0(1,2) forward, 1(2,3) forward, then 1(1,3) backwards: 0 + 1 - 1 = 0.
  const Circle c{{{0, true}, {5, true}, {3, false}}};
  EXPECT_NO_THROW(validate_circle(g, c));
  EXPECT_EQ(circle_gain(g, c), 0);
  EXPECT_EQ(c.edge_set(), (EdgeSet{0, 3, 5}));
  const Circle broken{{{0, true}, {5, false}}};
  EXPECT_THROW(validate_circle(g, broken), DomainError);
  const Circle parallel{{{0, true}, {1, false}}};
  EXPECT_NO_THROW(validate_circle(g, parallel));
  EXPECT_EQ(circle_gain(g, parallel), -1);
}

TEST(Circles, MatchBruteForce) {
  std::vector<GainGraph> graphs{complete_interval(3, 1, 1), complete_interval(3, 0, 0), complete_interval(3, -1, 1),
                                complete_interval(4, 0, 1), complete_interval(4, 1, 2), complete_interval(5, 0, 0)};
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<GainEdge> edges;
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        for (long gain = -1; gain <= 1; ++gain) {
          if (rng() % 2) edges.push_back({i, j, gain});
        }
      }
    }
    if (edges.size() > 14) edges.resize(14);
    std::shuffle(edges.begin(), edges.end(), rng);
    graphs.emplace_back(4, edges);
  }
  for (const auto& g : graphs) {
    std::set<EdgeSet> found;
    for (const auto& c : balanced_circles(g)) {
      EXPECT_NO_THROW(validate_circle(g, c));
      EXPECT_EQ(circle_gain(g, c), 0);
      EXPECT_TRUE(found.insert(c.edge_set()).second) << "duplicate circle";
    }
    EXPECT_EQ(found, brute_balanced_circles(g));
    std::set<EdgeSet> expected_broken;
    for (const auto& c : found) expected_broken.insert(EdgeSet(c.begin() + 1, c.end()));
    const auto broken = broken_circuits(g);
    EXPECT_EQ(std::set<EdgeSet>(broken.begin(), broken.end()), expected_broken);
    EXPECT_TRUE(std::is_sorted(broken.begin(), broken.end()));
  }
}

TEST(Circles, Examples) {
  EXPECT_TRUE(balanced_circles(complete_interval(3, 1, 1)).empty());
  const auto braid = balanced_circles(complete_interval(3, 0, 0));
  ASSERT_EQ(braid.size(), 1u);
  EXPECT_EQ(braid[0].edge_set(), (EdgeSet{0, 1, 2}));
  EXPECT_EQ(broken_circuits(complete_interval(3, 0, 0)), (std::vector<EdgeSet>{{1, 2}}));
}
