#include "activity/nbc.hpp"

#include <algorithm>
#include <limits>

#include "activity/errors.hpp"

namespace activity {
namespace {

constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();

// Adjacency view of an edge subset of a gain graph.
class Forest {
 public:
  Forest(const GainGraph& g, const EdgeSet& s) : g_(g), adj_(static_cast<std::size_t>(g.vertex_count()) + 1) {
    for (std::size_t e : s) {
      adj_[static_cast<std::size_t>(g.edge(e).tail)].push_back(e);
      adj_[static_cast<std::size_t>(g.edge(e).head)].push_back(e);
    }
  }

  struct Reach {
    std::vector<bool> seen;
    std::vector<long> potential;        // gain of the path from the source
    std::vector<std::size_t> min_edge;  // smallest edge index on that path
    std::vector<std::size_t> via;       // edge used to enter each vertex
  };

  // Walks the component of `source`, skipping edge `skip`. Returns false if a
  // cycle is met.
  bool walk(int source, Reach& r, std::size_t skip = kNoEdge) const {
    const std::size_t n = adj_.size();
    r.seen.assign(n, false);
    r.potential.assign(n, 0);
    r.min_edge.assign(n, kNoEdge);
    r.via.assign(n, kNoEdge);
    std::vector<int> stack{source};
    r.seen[static_cast<std::size_t>(source)] = true;
    bool acyclic = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (std::size_t e : adj_[static_cast<std::size_t>(u)]) {
        if (e == skip || e == r.via[static_cast<std::size_t>(u)]) continue;
        const GainEdge& ge = g_.edge(e);
        const int v = ge.tail == u ? ge.head : ge.tail;
        const auto vi = static_cast<std::size_t>(v);
        if (r.seen[vi]) {
          acyclic = false;
          continue;
        }
        r.seen[vi] = true;
        r.via[vi] = e;
        const auto ui = static_cast<std::size_t>(u);
        r.potential[vi] = r.potential[ui] + (ge.tail == u ? ge.gain : -ge.gain);
        r.min_edge[vi] = std::min(r.min_edge[ui], e);
        stack.push_back(v);
      }
    }
    return acyclic;
  }

 private:
  const GainGraph& g_;
  std::vector<std::vector<std::size_t>> adj_;
};

bool is_spanning_tree(const GainGraph& g, const EdgeSet& s) {
  if (s.size() != static_cast<std::size_t>(g.vertex_count() - 1)) return false;
  Forest f(g, s);
  Forest::Reach r;
  if (!f.walk(1, r)) return false;
  return std::all_of(r.seen.begin() + 1, r.seen.end(), [](bool b) { return b; });
}

EdgeSet canonical(EdgeSet s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw DomainError("edge set repeats an edge");
  return s;
}

}  // namespace

bool is_nbc_set(const GainGraph& g, const EdgeSet& set) {
  const EdgeSet s = canonical(set);
  for (std::size_t e : s) {
    if (e >= g.edge_count()) throw DomainError("edge index out of range");
  }
  Forest f(g, s);
  Forest::Reach r;
  const int n = g.vertex_count();
  std::vector<bool> done(static_cast<std::size_t>(n) + 1);
  for (int u = 1; u <= n; ++u) {
    if (!f.walk(u, r)) return false;
    // A broken circuit inside s is the tree path between u and v closed by a
    // smaller edge u-v of matching gain.
    for (int v = u + 1; v <= n; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (!r.seen[vi]) continue;
      for (std::size_t e : g.edges_between(u, v)) {
        if (e >= r.min_edge[vi]) break;
        const GainEdge& ge = g.edge(e);
        const long path_gain = ge.tail == u ? r.potential[vi] : -r.potential[vi];
        if (ge.gain == path_gain) return false;
      }
    }
  }
  return true;
}

std::vector<EdgeSet> enumerate_nbc_sets(const GainGraph& g) {
  std::vector<EdgeSet> out;
  EdgeSet current;
  // Subsets of NBC sets are NBC, so a failed extension prunes its whole subtree.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    out.push_back(current);
    if (current.size() + 1 >= static_cast<std::size_t>(g.vertex_count())) return;
    for (std::size_t e = from; e < g.edge_count(); ++e) {
      current.push_back(e);
      if (is_nbc_set(g, current)) self(self, e + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet interior_activity(const GainGraph& g, const EdgeSet& set) {
  const EdgeSet basis = canonical(set);
  if (!is_spanning_tree(g, basis)) throw DomainError("edge set " + g.describe(basis) + " is not a spanning tree");
  Forest f(g, basis);
  Forest::Reach r;
  EdgeSet active;
  for (std::size_t e : basis) {
    f.walk(g.edge(e).tail, r, e);
    // Fundamental cocircuit: edges with exactly one endpoint on the tail side.
    std::size_t smallest = kNoEdge;
    for (std::size_t c = 0; c < g.edge_count() && smallest == kNoEdge; ++c) {
      const GainEdge& ge = g.edge(c);
      if (r.seen[static_cast<std::size_t>(ge.tail)] != r.seen[static_cast<std::size_t>(ge.head)]) smallest = c;
    }
    if (smallest == e) active.push_back(e);
  }
  return active;
}

ExteriorVerdict check_exterior_inactive(const GainGraph& g, const EdgeSet& set) {
  const EdgeSet basis = canonical(set);
  if (!is_spanning_tree(g, basis)) throw DomainError("edge set " + g.describe(basis) + " is not a spanning tree");
  Forest f(g, basis);
  Forest::Reach r;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (std::binary_search(basis.begin(), basis.end(), e)) continue;
    const GainEdge& ge = g.edge(e);
    f.walk(ge.tail, r);
    const auto hi = static_cast<std::size_t>(ge.head);
    if (r.potential[hi] == ge.gain && e < r.min_edge[hi]) return {false, e};
  }
  return {};
}

std::vector<NbcBasisRecord> nbc_bases(const GainGraph& g) {
  if (!g.underlying_connected()) throw DomainError("NBC bases need a connected underlying graph");
  std::vector<NbcBasisRecord> out;
  const auto rank = static_cast<std::size_t>(g.vertex_count() - 1);
  for (auto& s : enumerate_nbc_sets(g)) {
    if (s.size() != rank) continue;
    NbcBasisRecord rec;
    rec.interior_active = interior_activity(g, s);
    Forest f(g, s);
    Forest::Reach r;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (std::binary_search(s.begin(), s.end(), e)) continue;
      const GainEdge& ge = g.edge(e);
      f.walk(ge.tail, r);
      const auto hi = static_cast<std::size_t>(ge.head);
      if (r.potential[hi] == ge.gain && e < r.min_edge[hi]) rec.exterior_active.push_back(e);
    }
    rec.basis = std::move(s);
    out.push_back(std::move(rec));
  }
  return out;
}

ActivityVector nbc_activity_vector(const GainGraph& g) {
  std::vector<BigInt> a(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& rec : nbc_bases(g)) a[rec.interior_active.size()] += 1;
  return ActivityVector(std::move(a));
}

CharacteristicPolynomials characteristic_poly(const GainGraph& g) {
  const int n = g.vertex_count();
  std::vector<BigInt> by_size(static_cast<std::size_t>(n) + 1);
  for (const auto& s : enumerate_nbc_sets(g)) by_size[s.size()] += 1;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    coeffs[static_cast<std::size_t>(n) - k] = (k % 2 == 0) ? by_size[k] : BigInt(-by_size[k]);
  }
  CharacteristicPolynomials out;
  out.full = IntPolynomial(std::move(coeffs));
  out.reduced = out.full.divide_by_x_power(1);
  return out;
}

IntPolynomial activity_poly_from_characteristic(const IntPolynomial& reduced, int n) {
  IntPolynomial p = reduced.compose(IntPolynomial{1, -1});
  if ((n - 1) % 2 != 0) p = -p;
  return p;
}

RegionCounts region_counts(const GainGraph& g) {
  const IntPolynomial alpha = activity_poly_from_vector(nbc_activity_vector(g));
  return {alpha.evaluate(2), alpha.evaluate(0)};
}

SystemWithActivity nbc_covering_system(const GainGraph& g) {
  std::vector<ElementId> ground(g.edge_count());
  for (std::size_t i = 0; i < ground.size(); ++i) ground[i] = static_cast<ElementId>(i);
  const auto to_subset = [](const EdgeSet& s) { return Subset(s.begin(), s.end()); };
  std::vector<Subset> family;
  for (const auto& s : enumerate_nbc_sets(g)) family.push_back(to_subset(s));
  ActivityAssignment act;
  for (const auto& rec : nbc_bases(g)) act[to_subset(rec.basis)] = to_subset(rec.interior_active);
  return {CoveringSystem(std::move(ground), std::move(family), g.vertex_count() - 1), std::move(act)};
}

}  // namespace activity
