#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "activity/covering.hpp"
#include "activity/polycount.hpp"

namespace activity {

struct ForestEdge {
  int parent = 0;
  int child = 0;
  int color = 1;
  friend auto operator<=>(const ForestEdge&, const ForestEdge&) = default;
};

/// Rooted forest on vertices 1..n whose edges carry colors in 1..k.
/// Components are unordered; roots are the vertices without a parent.
class ColoredForest {
 public:
  ColoredForest() = default;
  // Isolated vertices 1..n.
  ColoredForest(int n, int colors);
  // Throws DomainError on a cycle, a vertex with two parents, bad labels or colors.
  ColoredForest(int n, int colors, const std::vector<ForestEdge>& edges);

  int vertex_count() const { return n_; }
  int colors() const { return k_; }
  // 0 for roots.
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  // Color of the edge into v; 0 for roots.
  int color(int v) const { return color_[static_cast<std::size_t>(v)]; }
  std::vector<int> roots() const;
  std::vector<int> children(int v) const;
  // Ordered by child label.
  std::vector<ForestEdge> edges() const;
  std::size_t edge_count() const;
  bool is_tree() const { return edge_count() + 1 == static_cast<std::size_t>(n_); }
  // Root of the component containing v.
  int root_of(int v) const;

  // Throws DomainError if v already has a parent or the edge closes a cycle.
  void add_edge(const ForestEdge& e);
  void remove_edge(int child);

  std::string to_string() const;  // "[(3,1,1),(3,2,1)]"

  friend bool operator==(const ColoredForest&, const ColoredForest&) = default;
  friend auto operator<=>(const ColoredForest&, const ColoredForest&) = default;

 private:
  int n_ = 0;
  int k_ = 1;
  std::vector<int> parent_;  // index 0 unused
  std::vector<int> color_;
};

enum class ForestMode { kUnrestricted, kDecreasing, kIncreasing, kNonDecreasing, kNonIncreasing };

std::string to_string(ForestMode mode);
// Accepts "unrestricted", "decreasing", "increasing", "non-decreasing", "non-increasing".
ForestMode parse_forest_mode(const std::string& name);

/// (k1, k2)-colored class: colors 1..k1 are checked, the top k2 colors are free.
struct ForestClass {
  ForestMode mode = ForestMode::kUnrestricted;
  int k1 = 1;
  int k2 = 0;
  int colors() const { return k1 + k2; }
};

/// Checks every internal vertex v whose smallest child-edge color c_v is at
/// most k1, against the children joined to v by color c_v:
///   decreasing: all are smaller than v;   increasing: all are larger;
///   non-increasing: one is smaller;       non-decreasing: one is larger.
bool classify(const ColoredForest& f, const ForestClass& cls);

/// Visits the forests (or spanning trees) on [n] with `colors` colors that
/// belong to `cls`, in parent-array then color lexicographic order.
void for_each_forest(int n, int colors, const ForestClass& cls, bool spanning_only,
                     const std::function<void(const ColoredForest&)>& visit);

std::vector<ColoredForest> enumerate_forests(int n, int colors, const ForestClass& cls, bool spanning_only);
BigInt count_forests(int n, int colors, const ForestClass& cls, bool spanning_only);

struct TreeActivity {
  std::vector<ForestEdge> edges;
  std::size_t count = 0;
};

/// Edges (n, i) of color 1. Throws DomainError unless `t` is a spanning tree.
TreeActivity tree_activity(const ColoredForest& t);

/// Number of edges (i+1, i).
std::size_t losing_activity(const ColoredForest& f);

/// Number of vertices v whose smallest child is v-1.
std::size_t consecutive_smallest_child(const ColoredForest& f);

/// Hooks the root of every component not containing n onto n with color 1.
ColoredForest cover_tree(const ColoredForest& f);

/// Swaps edges (n, i) and (i+1, i) on a one-color decreasing spanning tree;
/// edges (n, n-1) stay put. Throws DomainError on other inputs.
ColoredForest decreasing_involution(const ColoredForest& t);

enum class TreeStatistic { kChildrenOfTopColorOne, kConsecutive, kConsecutiveSmallestChild };

std::string to_string(TreeStatistic s);
// Accepts "children-of-n", "consecutive", "consecutive-smallest-child".
TreeStatistic parse_tree_statistic(const std::string& name);
std::size_t evaluate_statistic(const ColoredForest& t, TreeStatistic s);

/// Distribution (d_0, ..., d_{n-1}) of a statistic over the class's spanning trees.
ActivityVector tree_statistic_vector(int n, int colors, const ForestClass& cls, TreeStatistic statistic);

/// Element id of a colored edge inside a forest covering system.
ElementId forest_edge_id(const ForestEdge& e, int n, int colors);
ForestEdge forest_edge_from_id(ElementId id, int n, int colors);

/// Class forests as a covering system of rank n-1 over colored edges, with the
/// color-1 children of n as the activity of each spanning tree.
SystemWithActivity forest_covering_system(int n, int colors, const ForestClass& cls);

}  // namespace activity
