// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "activity/codec.hpp"
#include "activity/covering.hpp"
#include "activity/forest.hpp"
#include "activity/gain_graph.hpp"
#include "activity/lbs.hpp"
#include "activity/nbc.hpp"
#include "activity/polycount.hpp"
#include "activity/verify.hpp"

using namespace activity;

namespace {

class Check {
 public:
  void that(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& computed, const B& expected, const std::string& what) {
    if (!(computed == expected)) {
      std::ostringstream os;
      os << what << ": got " << computed << ", expected " << expected;
      failures_.push_back(os.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

BigInt power(BigInt b, int e) {
  BigInt out = 1;
  while (e-- > 0) out *= b;
  return out;
}

std::string label(int n) { return "n=" + std::to_string(n); }

std::string label(int n, long a, long b) {
  return "K_" + std::to_string(n) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

const ForestClass kNonIncreasing{ForestMode::kNonIncreasing, 1, 0};
const ForestClass kDecreasing{ForestMode::kDecreasing, 1, 0};
const ForestClass kAllTrees{ForestMode::kUnrestricted, 0, 1};

void worked_example(Check& c) {
  const CoveringSystem sys({1, 2, 3, 4, 5},
                           {{1, 2, 3, 4}, {1, 2, 4}, {2, 3, 4}, {2, 4}, {1, 2, 3, 5}, {1, 2, 3}, {2, 3, 5}, {2, 3},
                            {1, 3, 4, 5}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {1, 3}, {1, 4}, {1, 5}, {1}, {2, 3, 4, 5}},
                           4);
  const ActivityAssignment act{
      {{1, 2, 3, 4}, {1, 3}}, {{1, 2, 3, 5}, {1, 5}}, {{1, 3, 4, 5}, {3, 4, 5}}, {{2, 3, 4, 5}, {}}};
  const ActivityVector card = cardinality_vector(sys);
  c.equal(card, ActivityVector{0, 1, 5, 7, 4}, "cardinality vector");
  const auto inverted = activity_vector_from_cardinality(card, 4);
  c.that(inverted.feasible, "inversion feasible");
  c.equal(inverted.vector, ActivityVector{1, 0, 2, 1, 0}, "activity from cardinality");
  c.equal(activity_poly_from_vector(inverted.vector), IntPolynomial({1, 0, 2, 1}), "alpha");
  c.that(verify_activity(sys, act).ok(), "printed assignment verifies");
  c.equal(activity_vector(sys, act), inverted.vector, "assignment activity vector");
  c.that(check_cardinality_identity(sys, act).ok, "cardinality identity");
}

void pure_counterexample(Check& c) {
  const CoveringSystem sys({1, 2, 3, 4}, {{}, {1}, {2}, {3}, {4}, {1, 2}, {3, 4}}, 2);
  const auto inverted = activity_vector_from_cardinality(cardinality_vector(sys), 2);
  c.equal(inverted.vector, ActivityVector{-1, 2, 1}, "activity from cardinality");
  c.that(!inverted.feasible, "inversion reported infeasible");
  const std::vector<Subset> choices_a{{}, {1}, {2}, {1, 2}}, choices_b{{}, {3}, {4}, {3, 4}};
  int passing = 0;
  for (const auto& x : choices_a) {
    for (const auto& y : choices_b) passing += verify_activity(sys, {{{1, 2}, x}, {{3, 4}, y}}).ok() ? 1 : 0;
  }
  c.equal(passing, 0, "assignments passing");
  c.that(enumerate_activities(sys).empty(), "activity search finds nothing");
}

void linial_anchors(Check& c) {
  const GainGraph g3 = complete_interval(3, 1, 1);
  c.equal(enumerate_nbc_sets(g3).size(), 7u, "K_3 NBC sets");
  c.equal(nbc_activity_vector(g3), ActivityVector{1, 1, 1}, "K_3 activity vector");
  const IntPolynomial a3 = activity_poly_from_vector(nbc_activity_vector(g3));
  c.equal(a3.evaluate(0), 1, "K_3 alpha(0)");
  c.equal(a3.evaluate(2), 7, "K_3 alpha(2)");
  const GainGraph g4 = complete_interval(4, 1, 1);
  const IntPolynomial a4 = activity_poly_from_vector(nbc_activity_vector(g4));
  c.equal(a4, IntPolynomial({4, 6, 3, 1}), "K_4 alpha");
  c.equal(nbc_bases(g4).size(), 14u, "K_4 NBC bases");
  c.equal(a4.evaluate(0), 4, "K_4 alpha(0)");
  c.equal(region_counts(g4).bounded, 4, "K_4 bounded");
}

void bounded_formula(Check& c) {
  for (int n = 3; n <= 6; ++n) {
    const BigInt closed = athanasiadis_bounded(n);
    const ActivityVector trees = tree_statistic_vector(n, 1, kNonIncreasing, TreeStatistic::kChildrenOfTopColorOne);
    c.equal(trees.entries.front(), closed, "trees with no children of n, " + label(n));
    if (n <= 5) c.equal(region_counts(complete_interval(n, 1, 1)).bounded, closed, "NBC alpha(0), " + label(n));
  }
  c.equal(athanasiadis_bounded(5), 26, "bounded regions at n=5");
}

void shi_closed_forms(Check& c) {
  for (int n = 1; n <= 6; ++n) {
    const ActivityVector d = tree_statistic_vector(n, 1, kAllTrees, TreeStatistic::kChildrenOfTopColorOne);
    c.equal(d.entries.size(), static_cast<std::size_t>(n), "distribution length, " + label(n));
    for (int k = 0; k < n && static_cast<std::size_t>(k) < d.entries.size(); ++k) {
      const BigInt expected = binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k)) * power(n - 1, n - 1 - k);
      c.equal(d.entries[static_cast<std::size_t>(k)], expected, "term " + std::to_string(k) + ", " + label(n));
    }
    c.equal(d.sum(), power(n, n - 1), "row sum, " + label(n));
    c.equal(activity_poly_from_vector(d).evaluate(2), power(n + 1, n - 1), "alpha(2), " + label(n));
    if (n <= 5) c.equal(nbc_activity_vector(complete_interval(n, 0, 1)), d, "NBC cross-check, " + label(n));
  }
}

void braid_suite(Check& c) {
  for (int n = 1; n <= 7; ++n) {
    IntPolynomial product({1});
    if (n >= 2) {
      for (int j = 0; j <= n - 2; ++j) product = product * IntPolynomial({j, 1});
    }
    const ActivityVector d = tree_statistic_vector(n, 1, kDecreasing, TreeStatistic::kChildrenOfTopColorOne);
    c.equal(activity_poly_from_vector(d), product, "distribution, " + label(n));
    if (n >= 2) c.equal(d.entries.front(), 0, "a_0, " + label(n));
    bool involution = true;
    for_each_forest(n, 1, kDecreasing, true, [&](const ColoredForest& t) {
      const ColoredForest s = decreasing_involution(t);
      involution = involution && decreasing_involution(s) == t && classify(s, kDecreasing) &&
                   tree_activity(t).count == losing_activity(s) && losing_activity(t) == tree_activity(s).count;
    });
    c.that(involution, "involution swaps statistics, " + label(n));
  }
}

void codec_suite(Check& c) {
  const ColoredForest tree(7, 1, {{2, 1, 1}, {5, 2, 1}, {6, 3, 1}, {5, 4, 1}, {6, 5, 1}, {2, 7, 1}});
  c.equal(pruefer_encode(tree).to_string(), std::string("2,6,5,2,5,6"), "Pruefer word");
  c.equal(blue_encode(tree).to_string(), std::string("b,5,b,2,4,b"), "Blue word");
  c.that(pruefer_decode(CodeWord::parse("2,6,5,2,5,6", Alphabet::kPruefer, 7)) == tree, "Pruefer decode");
  c.that(blue_decode(CodeWord::parse("b,5,b,2,4,b", Alphabet::kBlue, 7)) == tree, "Blue decode");
  for (int n = 2; n <= 6; ++n) {
    const auto trees = enumerate_forests(n, 1, kAllTrees, true);
    std::set<ColoredForest> from_pruefer, swapped;
    for (const auto& w : all_words(Alphabet::kPruefer, n)) {
      const ColoredForest t = pruefer_decode(w);
      c.that(pruefer_encode(t) == w, "Pruefer word roundtrip " + w.to_string());
      from_pruefer.insert(t);
    }
    c.equal(from_pruefer.size(), trees.size(), "Pruefer decode is onto, " + label(n));
    for (const auto& t : trees) {
      c.that(pruefer_decode(pruefer_encode(t)) == t, "Pruefer tree roundtrip " + t.to_string());
      if (n <= 5) c.that(blue_decode(blue_encode(t)) == t, "Blue tree roundtrip " + t.to_string());
      const ColoredForest s = swap_bijection(t);
      c.equal(losing_activity(s), t.children(n).size(), "statistic transport " + t.to_string());
      swapped.insert(s);
    }
    c.equal(swapped.size(), trees.size(), "transport is a bijection, " + label(n));
    if (n <= 5) {
      for (const auto& w : all_words(Alphabet::kBlue, n)) {
        c.that(blue_encode(blue_decode(w)) == w, "Blue word roundtrip " + w.to_string());
      }
    }
  }
}

void equinumerosity(Check& c) {
  const std::vector<std::pair<int, int>> params{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}};
  for (int n = 1; n <= 4; ++n) {
    for (const auto& [k1, k2] : params) {
      const long kk1 = k1, kk2 = k2;
      // Decreasing: [-k2, k1+k2] with (k1+1, k2) colors.
      const auto dec = enumerate_nbc_sets(complete_interval(n, -kk2, kk1 + kk2)).size();
      c.equal(count_forests(n, k1 + 1 + k2, {ForestMode::kDecreasing, k1 + 1, k2}, false), dec,
              "decreasing " + label(n, -kk2, kk1 + kk2));
      // Non-increasing: [1-k2, k1+1+k2] with (k1+1, k2) colors.
      const auto ni = enumerate_nbc_sets(complete_interval(n, 1 - kk2, kk1 + 1 + kk2)).size();
      c.equal(count_forests(n, k1 + 1 + k2, {ForestMode::kNonIncreasing, k1 + 1, k2}, false), ni,
              "non-increasing " + label(n, 1 - kk2, kk1 + 1 + kk2));
      // Unrestricted: [-k2, 1+k2] with k2+1 colors.
      const auto un = enumerate_nbc_sets(complete_interval(n, -kk2, 1 + kk2)).size();
      c.equal(count_forests(n, k2 + 1, {ForestMode::kUnrestricted, 0, k2 + 1}, false), un,
              "unrestricted " + label(n, -kk2, 1 + kk2));
    }
  }
  const BigInt nbc = enumerate_nbc_sets(complete_interval(4, 0, 2)).size();
  c.equal(count_forests(4, 3, {ForestMode::kDecreasing, 3, 0}, false), nbc, "K_4[0,2] against (3,0)-decreasing");
  c.equal(count_forests(4, 2, {ForestMode::kNonIncreasing, 1, 1}, false), nbc,
          "K_4[0,2] against (1,1)-non-increasing");
}

void partitions(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {0, 1}}) {
      const auto sys = nbc_covering_system(complete_interval(n, a, b));
      c.that(verify_covering(sys.system).ok(), "NBC covering " + label(n, a, b));
      c.that(verify_activity(sys.system, sys.activity).ok(), "NBC activity " + label(n, a, b));
    }
    for (const auto& cls : {kNonIncreasing, kAllTrees}) {
      const auto sys = forest_covering_system(n, 1, cls);
      c.that(verify_covering(sys.system).ok(), "forest covering " + to_string(cls.mode) + ", " + label(n));
      c.that(verify_activity(sys.system, sys.activity).ok(), "forest activity " + to_string(cls.mode) + ", " + label(n));
    }
  }
  for (int n = 2; n <= 4; ++n) {
    for (const auto& [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {0, 1}, {0, 0}}) {
      const GainGraph g = complete_interval(n, a, b);
      for (const auto& rec : nbc_bases(g)) c.that(check_exterior_inactive(g, rec.basis).ok, "exterior " + label(n, a, b));
    }
  }
}

std::vector<int> slots(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> out(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [v, child] : pairs) out[static_cast<std::size_t>(v)] = child;
  return out;
}

void lbs_suite(Check& c, std::string& detail) {
  const LbsTree reference(10, 7, slots(10, {{7, 2}, {9, 1}, {5, 4}, {4, 3}}),
                       slots(10, {{2, 5}, {5, 9}, {1, 8}, {4, 6}, {6, 10}}));
  const ColoredForest rotated = rotate_to_nonincreasing(reference);
  for (const auto& [child, parent] : std::vector<std::pair<int, int>>{{5, 7}, {9, 7}, {8, 9}, {6, 5}, {10, 5}}) {
    c.equal(rotated.parent(child), parent, "rewired parent of " + std::to_string(child));
  }
  for (int n = 1; n <= 6; ++n) {
    const auto left = enumerate_lbs(n, true);
    std::set<ColoredForest> images;
    for (const auto& t : left) images.insert(rotate_to_nonincreasing(t));
    const BigInt target = count_forests(n, 1, kNonIncreasing, true);
    c.equal(BigInt(left.size()), target, "left LBS count, " + label(n));
    c.equal(BigInt(images.size()), target, "rotation images, " + label(n));
  }
  const auto restricted = conjecture_report(3, ConjectureVariant::kRestrictedNonIncreasing);
  c.equal(restricted.dist_consecutive, ActivityVector{1, 1, 1}, "restricted consecutive at n=3");
  c.equal(restricted.dist_top, ActivityVector{1, 1, 1}, "restricted top at n=3");
  c.that(restricted.equal, "restricted equality at n=3");
  const auto literal = conjecture_report(3, ConjectureVariant::kLiteralLbs);
  c.equal(literal.dist_consecutive, ActivityVector{1, 1, 1}, "literal consecutive at n=3");
  c.equal(literal.dist_top, ActivityVector{1, 2, 0}, "literal top at n=3");
  c.that(!literal.equal, "literal inequality at n=3");
  c.that(verify_conjecture(3, ConjectureVariant::kLiteralLbs).verdict() == Verdict::kFlaggedDiscrepancy,
         "literal reported as flagged-discrepancy");
  detail = "restricted equality by n:";
  for (int n = 1; n <= 6; ++n) {
    detail += " " + std::to_string(n) + (conjecture_report(n, ConjectureVariant::kRestrictedNonIncreasing).equal ? "=" : "!=");
  }
}

void order_invariance(Check& c) {
  std::mt19937 rng(20261019);
  const std::vector<std::pair<long, long>> intervals{{0, 0}, {1, 1}, {0, 1}, {-1, 1}, {1, 2},
                                                     {0, 2}, {-1, 2}, {1, 3}, {0, 3}};
  for (int n = 2; n <= 4; ++n) {
    for (const auto& [a, b] : intervals) {
      const GainGraph g = complete_interval(n, a, b);
      const auto count = enumerate_nbc_sets(g).size();
      const ActivityVector vec = nbc_activity_vector(g);
      const IntPolynomial chi = characteristic_poly(g).full;
      for (int t = 0; t < 5; ++t) {
        std::vector<std::size_t> perm(g.edge_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const GainGraph h = g.reordered(perm);
        c.equal(enumerate_nbc_sets(h).size(), count, "NBC count " + label(n, a, b));
        c.equal(nbc_activity_vector(h), vec, "activity vector " + label(n, a, b));
        c.equal(characteristic_poly(h).full, chi, "chi " + label(n, a, b));
      }
    }
  }
}

struct Criterion {
  int number;
  std::string title;
  double seconds_limit;
  std::function<void(Check&, std::string&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked covering example", 1, [](Check& c, std::string&) { worked_example(c); }},
      {2, "2-pure counterexample", 1, [](Check& c, std::string&) { pure_counterexample(c); }},
      {3, "Linial anchors", 5, [](Check& c, std::string&) { linial_anchors(c); }},
      {4, "bounded-region formula three ways", 120, [](Check& c, std::string&) { bounded_formula(c); }},
      {5, "Shi closed forms", 120, [](Check& c, std::string&) { shi_closed_forms(c); }},
      {6, "braid suite", 60, [](Check& c, std::string&) { braid_suite(c); }},
      {7, "Pruefer and Blue codes", 120, [](Check& c, std::string&) { codec_suite(c); }},
      {8, "NBC and colored forest equinumerosity", 120, [](Check& c, std::string&) { equinumerosity(c); }},
      {9, "partition and exterior checks", 120, [](Check& c, std::string&) { partitions(c); }},
      {10, "LBS rotation and conjecture", 120, [](Check& c, std::string& d) { lbs_suite(c, d); }},
      {11, "edge order invariance", 60, [](Check& c, std::string&) { order_invariance(c); }},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check, detail);
    } catch (const std::exception& e) {
      check.that(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.that(seconds <= crit.seconds_limit, "runtime over " + std::to_string(crit.seconds_limit) + " s");
    const bool ok = check.failures().empty();
    failed += ok ? 0 : 1;
    std::printf("criterion %2d: %s  %s (%.2f s)\n", crit.number, ok ? "PASS" : "FAIL", crit.title.c_str(), seconds);
    if (!detail.empty()) std::printf("              %s\n", detail.c_str());
    for (const auto& f : check.failures()) std::printf("              %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
