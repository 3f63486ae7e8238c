#pragma once

#include <string>
#include <vector>

#include "activity/forest.hpp"
#include "activity/polycount.hpp"

namespace activity {

/// Local binary search tree on [n]: every left child is smaller than its
/// parent and every right child is larger. 0 means "no child".
class LbsTree {
 public:
  LbsTree() = default;
  // Throws DomainError unless the arrays describe an LBS tree rooted at `root`.
  LbsTree(int n, int root, std::vector<int> left, std::vector<int> right);

  int vertex_count() const { return n_; }
  int root() const { return root_; }
  int left(int v) const { return left_[static_cast<std::size_t>(v)]; }
  int right(int v) const { return right_[static_cast<std::size_t>(v)]; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  bool is_left_variant() const { return right(root_) == 0; }

  // Parent-child pairs, left and right alike, ordered by child.
  std::vector<ForestEdge> edges() const;

  friend bool operator==(const LbsTree& a, const LbsTree& b) {
    return a.n_ == b.n_ && a.root_ == b.root_ && a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  int n_ = 0;
  int root_ = 0;
  std::vector<int> left_, right_, parent_;  // index 0 unused
};

/// All LBS trees (or only left LBS trees, whose root has no right child).
std::vector<LbsTree> enumerate_lbs(int n, bool left_only);

/// Keeps left edges and replaces each right edge (v, r) by (x, r), where x is
/// reached from v by climbing right edges and then one left edge (or is the
/// root when no left edge is met). Throws DomainError on a non-left tree.
ColoredForest rotate_to_nonincreasing(const LbsTree& tree);

enum class ConjectureVariant { kLiteralLbs, kRestrictedNonIncreasing };

std::string to_string(ConjectureVariant v);
// Accepts "literal" and "restricted".
ConjectureVariant parse_conjecture_variant(const std::string& name);

struct ConjectureReport {
  int n = 0;
  ConjectureVariant variant = ConjectureVariant::kLiteralLbs;
  ActivityVector dist_consecutive;  // edges (i+1, i), restricted: i smallest child
  ActivityVector dist_top;          // edges (n, i)
  bool equal = false;
};

/// Literal: both statistics over left LBS trees. Restricted: over
/// non-increasing trees, children of n against vertices whose smallest child
/// is one below them.
ConjectureReport conjecture_report(int n, ConjectureVariant variant);

}  // namespace activity
