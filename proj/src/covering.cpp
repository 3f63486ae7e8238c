#include "activity/covering.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "activity/errors.hpp"

namespace activity {

Subset make_subset(std::vector<ElementId> elements) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw DomainError("subset lists an element twice");
  }
  return elements;
}

bool is_subset(const Subset& small, const Subset& large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

Subset set_difference(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset set_union(const Subset& a, const Subset& b) {
  Subset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string subset_key(const Subset& s) {
  std::string key;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(s[i]);
  }
  return key;
}

std::size_t SubsetHash::operator()(const Subset& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (ElementId e : s) {
    h ^= std::hash<ElementId>{}(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

std::string braces(const Subset& s) { return "{" + subset_key(s) + "}"; }

// Calls `visit` on every Z with lower <= Z <= upper (lower must be a subset of upper).
template <typename Visit>
bool for_each_in_interval(const Subset& lower, const Subset& upper, Visit&& visit) {
  const Subset free = set_difference(upper, lower);
  const std::size_t count = std::size_t{1} << free.size();
  Subset z;
  for (std::size_t mask = 0; mask < count; ++mask) {
    Subset extra;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (mask & (std::size_t{1} << i)) extra.push_back(free[i]);
    }
    z = set_union(lower, extra);
    if (!visit(z)) return false;
  }
  return true;
}

}  // namespace

CoveringSystem::CoveringSystem(std::vector<ElementId> ground, std::vector<Subset> family, int rank)
    : ground_(std::move(ground)), rank_(rank) {
  if (rank_ < 0) throw DomainError("covering system rank must be nonnegative");
  std::sort(ground_.begin(), ground_.end());
  ground_.erase(std::unique(ground_.begin(), ground_.end()), ground_.end());
  for (auto& s : family) {
    Subset member = make_subset(std::move(s));
    if (!is_subset(member, ground_)) {
      throw DomainError("family member " + braces(member) + " is not contained in the ground set");
    }
    family_.push_back(std::move(member));
  }
  std::sort(family_.begin(), family_.end());
  family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
  for (const auto& s : family_) {
    if (static_cast<int>(s.size()) == rank_) bases_.push_back(s);
  }
}

bool CoveringSystem::contains(const Subset& s) const { return std::binary_search(family_.begin(), family_.end(), s); }

bool CoveringSystem::is_basis(const Subset& s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

std::string CoveringVerdict::describe() const {
  switch (failure) {
    case CoveringFailure::kNone:
      return "ok";
    case CoveringFailure::kOversized:
      return "member " + braces(witness) + " exceeds the rank";
    case CoveringFailure::kUncoverable:
      return "member " + braces(witness) + " has no basis B with [I,B] inside the family";
  }
  return "unknown";
}

CoveringVerdict verify_covering(const CoveringSystem& sys) {
  for (const auto& s : sys.family()) {
    if (static_cast<int>(s.size()) > sys.rank()) return {CoveringFailure::kOversized, s};
  }
  std::unordered_set<Subset, SubsetHash> members(sys.family().begin(), sys.family().end());
  // Bases indexed by element, so only bases containing I are tried.
  std::unordered_map<ElementId, std::vector<const Subset*>> by_element;
  for (const auto& b : sys.bases()) {
    for (ElementId e : b) by_element[e].push_back(&b);
  }
  std::vector<const Subset*> all_bases;
  for (const auto& b : sys.bases()) all_bases.push_back(&b);

  for (const auto& member : sys.family()) {
    const std::vector<const Subset*>* candidates = &all_bases;
    for (ElementId e : member) {
      auto it = by_element.find(e);
      if (it == by_element.end()) {
        static const std::vector<const Subset*> kNone;
        candidates = &kNone;
        break;
      }
      if (it->second.size() < candidates->size()) candidates = &it->second;
    }
    bool covered = false;
    for (const Subset* b : *candidates) {
      if (!is_subset(member, *b)) continue;
      if (for_each_in_interval(member, *b, [&](const Subset& z) { return members.count(z) > 0; })) {
        covered = true;
        break;
      }
    }
    if (!covered) return {CoveringFailure::kUncoverable, member};
  }
  return {};
}

std::string ActivityVerdict::describe() const {
  switch (failure) {
    case ActivityFailure::kNone:
      return "ok";
    case ActivityFailure::kMissingBasis:
      return "basis " + braces(basis) + " has no assigned activity";
    case ActivityFailure::kNotSubsetOfBasis:
      return "active set " + braces(witness) + " is not contained in basis " + braces(basis);
    case ActivityFailure::kBadInterval:
      return "interval of basis " + braces(basis) + " contains " + braces(witness) + " outside the family";
    case ActivityFailure::kDoublyCovered:
      return "member " + braces(witness) + " lies in more than one interval";
    case ActivityFailure::kUncovered:
      return "member " + braces(witness) + " lies in no interval";
  }
  return "unknown";
}

ActivityVerdict verify_activity(const CoveringSystem& sys, const ActivityAssignment& act) {
  for (const auto& [basis, active] : act) {
    if (!sys.is_basis(basis)) throw DomainError("activity key " + braces(basis) + " is not a basis");
  }
  std::unordered_map<Subset, int, SubsetHash> hits;
  hits.reserve(sys.family().size());
  for (const auto& s : sys.family()) hits.emplace(s, 0);

  for (const auto& basis : sys.bases()) {
    auto it = act.find(basis);
    if (it == act.end()) return {ActivityFailure::kMissingBasis, {}, basis};
    const Subset& active = it->second;
    if (!is_subset(active, basis)) return {ActivityFailure::kNotSubsetOfBasis, active, basis};
    Subset outside;
    const bool inside = for_each_in_interval(set_difference(basis, active), basis, [&](const Subset& z) {
      auto h = hits.find(z);
      if (h == hits.end()) {
        outside = z;
        return false;
      }
      ++h->second;
      return true;
    });
    if (!inside) return {ActivityFailure::kBadInterval, outside, basis};
  }
  for (const auto& s : sys.family()) {
    const int count = hits.at(s);
    if (count > 1) return {ActivityFailure::kDoublyCovered, s, {}};
    if (count == 0) return {ActivityFailure::kUncovered, s, {}};
  }
  return {};
}

ActivityVector cardinality_vector(const CoveringSystem& sys) {
  std::vector<BigInt> c(static_cast<std::size_t>(sys.rank()) + 1);
  for (const auto& s : sys.family()) {
    if (s.size() < c.size()) c[s.size()] += 1;
  }
  return ActivityVector(std::move(c));
}

ActivityVector activity_vector(const CoveringSystem& sys, const ActivityAssignment& act) {
  std::vector<BigInt> a(static_cast<std::size_t>(sys.rank()) + 1);
  for (const auto& basis : sys.bases()) {
    auto it = act.find(basis);
    if (it == act.end()) throw DomainError("basis " + braces(basis) + " has no assigned activity");
    a[it->second.size()] += 1;
  }
  return ActivityVector(std::move(a));
}

ActivityFromCardinality activity_vector_from_cardinality(const ActivityVector& c, int rank) {
  if (rank < 0 || c.size() != static_cast<std::size_t>(rank) + 1) {
    throw DomainError("cardinality vector " + c.to_string() + " does not have rank+1 entries");
  }
  const auto r = static_cast<unsigned>(rank);
  std::vector<BigInt> a(r + 1);
  a[r] = c[0];
  for (unsigned i = 1; i <= r; ++i) {
    const unsigned target = r - i;
    BigInt value = c[i];
    for (unsigned j = target + 1; j <= r; ++j) value -= a[j] * binomial(j, target);
    a[target] = value;
  }
  ActivityFromCardinality out;
  out.vector = ActivityVector(std::move(a));
  out.feasible = out.vector.all_nonnegative();
  return out;
}

IntPolynomial cardinality_poly_from_activity(const ActivityVector& a, int rank) {
  // x^r (1/x + 1)^j = x^{r-j} (1+x)^j
  IntPolynomial total;
  const IntPolynomial one_plus_x = IntPolynomial::linear(1);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    if (static_cast<int>(j) > rank) throw DomainError("activity vector longer than rank+1");
    total += IntPolynomial::monomial(a[j], static_cast<std::size_t>(rank) - j) * one_plus_x.pow(static_cast<unsigned>(j));
  }
  return total;
}

IdentityVerdict check_cardinality_identity(const CoveringSystem& sys, const ActivityAssignment& act) {
  IdentityVerdict v;
  v.cardinality = IntPolynomial(cardinality_vector(sys).entries);
  v.from_activity = cardinality_poly_from_activity(activity_vector(sys, act), sys.rank());
  v.ok = v.cardinality == v.from_activity;
  return v;
}

SystemWithActivity restrict_to_bases(const CoveringSystem& sys, const ActivityAssignment& act,
                                     const std::vector<Subset>& chosen) {
  if (chosen.empty()) throw DomainError("restriction needs at least one basis");
  std::vector<Subset> family;
  ActivityAssignment restricted;
  for (const auto& b : chosen) {
    if (!sys.is_basis(b)) throw DomainError("restriction member " + braces(b) + " is not a basis");
    auto it = act.find(b);
    if (it == act.end()) throw DomainError("basis " + braces(b) + " has no assigned activity");
    restricted[b] = it->second;
    for_each_in_interval(set_difference(b, it->second), b, [&](const Subset& z) {
      family.push_back(z);
      return true;
    });
  }
  return {CoveringSystem(sys.ground(), std::move(family), sys.rank()), std::move(restricted)};
}

SystemWithActivity disjoint_union(const CoveringSystem& s1, const ActivityAssignment& a1, const CoveringSystem& s2,
                                  const ActivityAssignment& a2) {
  if (s1.ground() != s2.ground()) throw PreconditionError("disjoint union needs a common ground set");
  if (s1.rank() != s2.rank()) throw PreconditionError("disjoint union needs a common rank");
  std::vector<Subset> common;
  std::set_intersection(s1.family().begin(), s1.family().end(), s2.family().begin(), s2.family().end(),
                        std::back_inserter(common));
  if (!common.empty()) throw PreconditionError("families intersect at " + braces(common.front()));

  std::vector<Subset> family = s1.family();
  family.insert(family.end(), s2.family().begin(), s2.family().end());
  ActivityAssignment act;
  for (const auto& b : s1.bases()) {
    auto it = a1.find(b);
    if (it == a1.end()) throw DomainError("basis " + braces(b) + " has no assigned activity");
    act[b] = it->second;
  }
  for (const auto& b : s2.bases()) {
    auto it = a2.find(b);
    if (it == a2.end()) throw DomainError("basis " + braces(b) + " has no assigned activity");
    act[b] = it->second;
  }
  return {CoveringSystem(s1.ground(), std::move(family), s1.rank()), std::move(act)};
}

SystemWithActivity filter_above(const CoveringSystem& sys, const ActivityAssignment& act, const Subset& x) {
  if (!sys.contains(x)) throw DomainError("filter set " + braces(x) + " is not in the family");
  std::vector<Subset> family;
  for (const auto& s : sys.family()) {
    if (is_subset(x, s)) family.push_back(s);
  }
  ActivityAssignment filtered;
  for (const auto& b : sys.bases()) {
    if (!is_subset(x, b)) continue;
    auto it = act.find(b);
    if (it == act.end()) throw DomainError("basis " + braces(b) + " has no assigned activity");
    filtered[b] = set_difference(it->second, x);
  }
  return {CoveringSystem(sys.ground(), std::move(family), sys.rank()), std::move(filtered)};
}

std::vector<ActivityAssignment> enumerate_activities(const CoveringSystem& sys, std::optional<std::size_t> limit) {
  // Candidate active sets per basis: those whose interval stays inside the family.
  std::vector<std::vector<Subset>> options;
  for (const auto& b : sys.bases()) {
    std::vector<Subset> opts;
    for_each_in_interval(Subset{}, b, [&](const Subset& active) {
      const bool inside = for_each_in_interval(set_difference(b, active), b,
                                               [&](const Subset& z) { return sys.contains(z); });
      if (inside) opts.push_back(active);
      return true;
    });
    std::sort(opts.begin(), opts.end());
    options.push_back(std::move(opts));
  }

  std::vector<ActivityAssignment> found;
  ActivityAssignment current;
  std::function<bool(std::size_t)> recurse = [&](std::size_t i) -> bool {
    if (i == options.size()) {
      if (verify_activity(sys, current).ok()) {
        found.push_back(current);
        if (limit && found.size() >= *limit) return false;
      }
      return true;
    }
    for (const auto& active : options[i]) {
      current[sys.bases()[i]] = active;
      if (!recurse(i + 1)) return false;
    }
    current.erase(sys.bases()[i]);
    return true;
  };
  recurse(0);
  return found;
}

}  // namespace activity
