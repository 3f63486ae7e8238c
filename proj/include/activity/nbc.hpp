#pragma once

#include <optional>
#include <vector>

#include "activity/covering.hpp"
#include "activity/gain_graph.hpp"
#include "activity/polycount.hpp"

namespace activity {

struct NbcBasisRecord {
  EdgeSet basis;
  EdgeSet interior_active;
  // Non-basis edges that are the smallest edge of their balanced fundamental circle.
  EdgeSet exterior_active;
};

/// True iff `s` is acyclic in the multigraph and contains no broken circuit.
bool is_nbc_set(const GainGraph& g, const EdgeSet& s);

/// All NBC sets, including the empty set, in lexicographic order of index lists.
std::vector<EdgeSet> enumerate_nbc_sets(const GainGraph& g);

/// Edges e of the spanning tree `basis` that are the smallest edge reconnecting
/// the two components of basis - e. Throws DomainError if `basis` is not a spanning tree.
EdgeSet interior_activity(const GainGraph& g, const EdgeSet& basis);

/// NBC sets of size n-1 with their activities. Throws DomainError when the
/// underlying graph is disconnected.
std::vector<NbcBasisRecord> nbc_bases(const GainGraph& g);

ActivityVector nbc_activity_vector(const GainGraph& g);

struct CharacteristicPolynomials {
  IntPolynomial full;     // sum over NBC sets A of (-1)^{|A|} t^{n-|A|}
  IntPolynomial reduced;  // full / t
};

CharacteristicPolynomials characteristic_poly(const GainGraph& g);

/// (-1)^{n-1} reduced(1 - x).
IntPolynomial activity_poly_from_characteristic(const IntPolynomial& reduced, int n);

struct RegionCounts {
  BigInt regions;  // alpha(2)
  BigInt bounded;  // alpha(0)
};

RegionCounts region_counts(const GainGraph& g);

struct ExteriorVerdict {
  bool ok = true;
  std::optional<std::size_t> witness;
};

/// Fails with the first non-basis edge (in edge order) that closes a balanced
/// circle in which it is the smallest edge.
ExteriorVerdict check_exterior_inactive(const GainGraph& g, const EdgeSet& basis);

/// The NBC sets as a covering system of rank n-1 over edge indices, with
/// interior activity as the activity map.
SystemWithActivity nbc_covering_system(const GainGraph& g);

}  // namespace activity
