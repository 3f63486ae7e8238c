#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace activity {

/// Edge g(tail, head) of an integral gain graph; stands for the hyperplane
/// x_head - x_tail = gain. Traversing it from head to tail contributes -gain.
struct GainEdge {
  int tail = 0;
  int head = 0;
  long gain = 0;

  friend auto operator<=>(const GainEdge&, const GainEdge&) = default;
  std::string to_string() const;  // "g(t,h)"
};

// Indices into GainGraph::edges(). Lower index = smaller in the edge order.
using EdgeSet = std::vector<std::size_t>;

/// Integral gain graph on vertices 1..n with a total order on its edges.
///
/// Edges are stored sorted by the order, so an edge's index is its rank and
/// "minimum in the order" is "smallest index".
class GainGraph {
 public:
  // Edges listed in the desired order. Throws DomainError on loops,
  // out-of-range vertices or duplicate edges. tail > head is normalized by
  // swapping endpoints and negating the gain.
  GainGraph(int n, std::vector<GainEdge> ordered_edges);

  // Edges ordered lexicographically by (tail, head, gain).
  static GainGraph lexicographic(int n, std::vector<GainEdge> edges);

  int vertex_count() const { return n_; }
  const std::vector<GainEdge>& edges() const { return edges_; }
  const GainEdge& edge(std::size_t i) const { return edges_[i]; }
  std::size_t edge_count() const { return edges_.size(); }

  // Same edges, new order given as a permutation: position k of the new
  // order holds old edge `permutation[k]`.
  GainGraph reordered(const std::vector<std::size_t>& permutation) const;
  // Index of an edge by value; throws DomainError if absent.
  std::size_t index_of(const GainEdge& e) const;

  // Indices of edges joining u and v (either orientation), ascending.
  const std::vector<std::size_t>& edges_between(int u, int v) const;
  bool underlying_connected() const;

  std::string describe(const EdgeSet& s) const;

 private:
  int n_;
  std::vector<GainEdge> edges_;
  std::vector<std::vector<std::size_t>> pair_edges_;  // (u-1)*n + (v-1), u < v
};

/// K_n^{[a,b]}: every edge k(i,j) with a <= k <= b and 1 <= i < j <= n,
/// in lexicographic order.
GainGraph complete_interval(int n, long a, long b);

struct CircleStep {
  std::size_t edge = 0;
  bool forward = true;  // tail -> head
};

/// A closed walk visiting distinct vertices; stored as a cyclic sequence of steps.
struct Circle {
  std::vector<CircleStep> steps;
  // Edge indices ascending; identifies the circle.
  EdgeSet edge_set() const;
};

// Throws DomainError if `c` is not a circle of `g`.
void validate_circle(const GainGraph& g, const Circle& c);
long circle_gain(const GainGraph& g, const Circle& c);

/// Every circle of the underlying multigraph with gain zero, each once,
/// sorted by edge set.
std::vector<Circle> balanced_circles(const GainGraph& g);

/// Each balanced circle minus its smallest edge, deduplicated and sorted.
std::vector<EdgeSet> broken_circuits(const GainGraph& g);

}  // namespace activity
