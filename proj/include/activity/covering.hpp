#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "activity/polycount.hpp"

namespace activity {

using ElementId = std::int64_t;
// Strictly increasing list of element ids.
using Subset = std::vector<ElementId>;

Subset make_subset(std::vector<ElementId> elements);
bool is_subset(const Subset& small, const Subset& large);
Subset set_difference(const Subset& a, const Subset& b);
Subset set_union(const Subset& a, const Subset& b);
// "1,2,3" -- also the basis key of the JSON wire format.
std::string subset_key(const Subset& s);

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept;
};

/// An r-covering system (E, I): every member of I has at most r elements
/// and extends to an r-set B in I with the whole interval [I, B] in I.
/// Members of I of size r are the bases.
class CoveringSystem {
 public:
  CoveringSystem() = default;
  // Throws DomainError if a member uses an element outside `ground`.
  CoveringSystem(std::vector<ElementId> ground, std::vector<Subset> family, int rank);

  const std::vector<ElementId>& ground() const { return ground_; }
  // Sorted lexicographically, no duplicates.
  const std::vector<Subset>& family() const { return family_; }
  int rank() const { return rank_; }
  const std::vector<Subset>& bases() const { return bases_; }

  bool contains(const Subset& s) const;
  bool is_basis(const Subset& s) const;

  friend bool operator==(const CoveringSystem& a, const CoveringSystem& b) {
    return a.rank_ == b.rank_ && a.ground_ == b.ground_ && a.family_ == b.family_;
  }

 private:
  std::vector<ElementId> ground_;
  std::vector<Subset> family_;
  std::vector<Subset> bases_;
  int rank_ = 0;
};

/// Map from each basis B to its set of active elements a(B).
using ActivityAssignment = std::map<Subset, Subset>;

enum class CoveringFailure { kNone, kOversized, kUncoverable };

struct CoveringVerdict {
  CoveringFailure failure = CoveringFailure::kNone;
  Subset witness;
  bool ok() const { return failure == CoveringFailure::kNone; }
  std::string describe() const;
};

CoveringVerdict verify_covering(const CoveringSystem& sys);

enum class ActivityFailure { kNone, kMissingBasis, kNotSubsetOfBasis, kBadInterval, kDoublyCovered, kUncovered };

struct ActivityVerdict {
  ActivityFailure failure = ActivityFailure::kNone;
  Subset witness;
  // The basis whose interval produced the witness, when there is one.
  Subset basis;
  bool ok() const { return failure == ActivityFailure::kNone; }
  std::string describe() const;
};

/// Checks that the intervals [B \ a(B), B] partition the family.
/// Throws DomainError if the assignment has a key that is not a basis.
/// Witnesses are reported in lexicographic order of bases and family members.
ActivityVerdict verify_activity(const CoveringSystem& sys, const ActivityAssignment& act);

ActivityVector cardinality_vector(const CoveringSystem& sys);
// a_i = number of bases with |a(B)| = i.
ActivityVector activity_vector(const CoveringSystem& sys, const ActivityAssignment& act);

struct ActivityFromCardinality {
  ActivityVector vector;
  bool feasible = true;  // false iff some entry is negative
};

/// Inverts the cardinality/activity relation: a_r = c_0 and
/// a_{r-i} = c_i - sum_{j=r-i+1}^{r} a_j C(j, r-i).
ActivityFromCardinality activity_vector_from_cardinality(const ActivityVector& c, int rank);

// x^r alpha(1/x + 1) with denominators cleared.
IntPolynomial cardinality_poly_from_activity(const ActivityVector& a, int rank);

struct IdentityVerdict {
  bool ok = false;
  IntPolynomial cardinality;
  IntPolynomial from_activity;
};

/// card(x) == x^r alpha(1/x + 1), compared coefficientwise.
IdentityVerdict check_cardinality_identity(const CoveringSystem& sys, const ActivityAssignment& act);

struct SystemWithActivity {
  CoveringSystem system;
  ActivityAssignment activity;
};

/// Keep the intervals of the chosen bases.
SystemWithActivity restrict_to_bases(const CoveringSystem& sys, const ActivityAssignment& act,
                                     const std::vector<Subset>& chosen);

/// Union of two systems with disjoint families over the same ground set and rank.
/// Throws PreconditionError if the families intersect or the ground/rank differ.
SystemWithActivity disjoint_union(const CoveringSystem& s1, const ActivityAssignment& a1, const CoveringSystem& s2,
                                  const ActivityAssignment& a2);

/// I_X = {I : X subset of I}, a_X(B) = a(B) \ X. Throws DomainError if X is not in the family.
SystemWithActivity filter_above(const CoveringSystem& sys, const ActivityAssignment& act, const Subset& x);

/// Every activity of `sys`, in lexicographic order of choices. Stops after
/// `limit` results when a limit is given. Intended for small systems.
std::vector<ActivityAssignment> enumerate_activities(const CoveringSystem& sys,
                                                     std::optional<std::size_t> limit = std::nullopt);

}  // namespace activity
