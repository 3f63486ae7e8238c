#pragma once

#include <string>
#include <utility>
#include <vector>

#include "activity/forest.hpp"
#include "activity/lbs.hpp"
#include "activity/serialize.hpp"

namespace activity {

enum class Provenance { kPaper, kDerivedOracle };
enum class Verdict { kPass, kFail, kFlaggedDiscrepancy };

std::string to_string(Provenance p);  // "paper" | "derived-oracle"
std::string to_string(Verdict v);     // "pass" | "fail" | "flagged-discrepancy"

struct Expectation {
  std::string quantity;
  std::string value;
  Provenance provenance;
  // A mismatch here is a documented discrepancy, reported as flagged.
  bool known_discrepancy = false;
  std::string note;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string target);

  void set_parameter(const std::string& name, const std::string& value);
  // Throws InternalError if the quantity was already recorded.
  void record(const std::string& quantity, const std::string& computed);
  // Records `computed` and the expectation it is held to.
  void expect(const std::string& quantity, const std::string& computed, const std::string& expected,
              Provenance provenance, bool known_discrepancy = false, const std::string& note = "");

  const std::string& target() const { return target_; }
  const std::vector<std::pair<std::string, std::string>>& parameters() const { return parameters_; }
  const std::vector<std::pair<std::string, std::string>>& computed() const { return computed_; }
  const std::vector<Expectation>& expectations() const { return expected_; }
  // Empty when the quantity was never recorded.
  std::string computed_value(const std::string& quantity) const;

  /// pass iff every expectation matches; flagged-discrepancy iff only
  /// known discrepancies mismatch; fail otherwise.
  Verdict verdict() const;
  // Quantities whose computed value differs from the expectation.
  std::vector<std::string> mismatches() const;

  Json to_json() const;

 private:
  std::string target_;
  std::vector<std::pair<std::string, std::string>> parameters_;
  std::vector<std::pair<std::string, std::string>> computed_;
  std::vector<Expectation> expected_;
};

/// A colored tree class whose forests match the NBC sets of K_n^{[a,b]}.
struct MatchedClass {
  std::string part;  // "unrestricted" | "decreasing" | "non-increasing"
  int colors = 1;
  ForestClass cls;
};

/// Every class matched to the interval [a, b]:
///   [-k2, 1+k2]       unrestricted forests with k2+1 colors,
///   [-k2, k1+k2]      (k1+1, k2)-decreasing,
///   [1-k2, k1+k2]     (k1, k2)-non-increasing.
std::vector<MatchedClass> matched_classes(long a, long b);

// Single verification targets. Every one throws DomainError on parameters
// outside its supported range.
VerificationReport verify_covering_example();
VerificationReport verify_pure_counterexample();
VerificationReport verify_linial(int n);
VerificationReport verify_bounded_formula(int n);
VerificationReport verify_shi(int n);
VerificationReport verify_braid(int n);
VerificationReport verify_codec_golden();
VerificationReport verify_codec_roundtrip(int n);
// NBC set count against matched forest counts.
VerificationReport verify_forest_count(int n, long a, long b);
// NBC activity vector against the matched classes' tree statistic.
VerificationReport verify_tree_activity(int n, long a, long b);
// Partition checks for the NBC and tree covering systems of the Linial, Shi
// and braid intervals, plus exterior inactivity of NBC bases.
VerificationReport verify_partition(int n);
VerificationReport verify_lbs_example();
VerificationReport verify_lbs_rotation(int n);
VerificationReport verify_conjecture(int n, ConjectureVariant variant);
VerificationReport verify_order_invariance(int n, long a, long b, int orders = 5);
VerificationReport verify_activity_identity(int n, long a, long b);

struct SuiteReport {
  int scale = 0;
  std::vector<VerificationReport> reports;
  Verdict verdict() const;
  Json to_json() const;
};

/// Runs every target up to n = scale, each capped at its desk-scale limit.
/// Throws DomainError when scale < 2.
SuiteReport verify_suite(int scale);

/// Canonical target names, aliases excluded.
std::vector<std::string> target_names();
// Maps the two short aliases to canonical names; other names pass through.
std::string canonical_target(const std::string& name);

}  // namespace activity
