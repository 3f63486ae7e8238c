#include "activity/lbs.hpp"

#include <algorithm>

#include "activity/errors.hpp"

namespace activity {

LbsTree::LbsTree(int n, int root, std::vector<int> left, std::vector<int> right)
    : n_(n), root_(root), left_(std::move(left)), right_(std::move(right)) {
  const auto size = static_cast<std::size_t>(n) + 1;
  if (n < 1 || left_.size() != size || right_.size() != size) throw DomainError("LBS arrays must have n+1 entries");
  if (root < 1 || root > n) throw DomainError("LBS root out of range");
  parent_.assign(size, 0);
  std::size_t edges = 0;
  for (int v = 1; v <= n; ++v) {
    const int l = this->left(v), r = this->right(v);
    if (l != 0) {
      if (l < 1 || l >= v) throw DomainError("left child must be smaller than its parent");
      if (parent_[static_cast<std::size_t>(l)] != 0) throw DomainError("vertex with two parents");
      parent_[static_cast<std::size_t>(l)] = v;
      ++edges;
    }
    if (r != 0) {
      if (r <= v || r > n) throw DomainError("right child must be larger than its parent");
      if (parent_[static_cast<std::size_t>(r)] != 0) throw DomainError("vertex with two parents");
      parent_[static_cast<std::size_t>(r)] = v;
      ++edges;
    }
  }
  if (parent_[static_cast<std::size_t>(root)] != 0 || edges + 1 != static_cast<std::size_t>(n)) {
    throw DomainError("LBS arrays do not form a tree rooted at " + std::to_string(root));
  }
  for (int v = 1; v <= n; ++v) {
    int u = v;
    for (int steps = 0; u != root; ++steps) {
      if (u == 0 || steps > n) throw DomainError("LBS arrays do not form a tree rooted at " + std::to_string(root));
      u = parent(u);
    }
  }
}

std::vector<ForestEdge> LbsTree::edges() const {
  std::vector<ForestEdge> out;
  for (int c = 1; c <= n_; ++c) {
    if (parent(c) != 0) out.push_back({parent(c), c, 1});
  }
  return out;
}

namespace {

// Subtree shapes over a vertex mask, as (root, child arrays).
struct Fragment {
  int root;
  std::vector<int> left, right;
};

std::vector<Fragment> build(unsigned mask, int n) {
  std::vector<Fragment> out;
  const auto size = static_cast<std::size_t>(n) + 1;
  for (int r = 1; r <= n; ++r) {
    const unsigned bit = 1u << (r - 1);
    if (!(mask & bit)) continue;
    const unsigned rest = mask & ~bit;
    // Split the remaining vertices between the left and right subtrees.
    for (unsigned sub = rest;; sub = (sub - 1) & rest) {
      const unsigned left_mask = sub, right_mask = rest & ~sub;
      std::vector<Fragment> lefts, rights;
      if (left_mask) {
        for (auto& f : build(left_mask, n)) {
          if (f.root < r) lefts.push_back(std::move(f));
        }
      } else {
        lefts.push_back({0, std::vector<int>(size, 0), std::vector<int>(size, 0)});
      }
      if (right_mask) {
        for (auto& f : build(right_mask, n)) {
          if (f.root > r) rights.push_back(std::move(f));
        }
      } else {
        rights.push_back({0, std::vector<int>(size, 0), std::vector<int>(size, 0)});
      }
      for (const auto& l : lefts) {
        for (const auto& rt : rights) {
          Fragment f{r, l.left, l.right};
          for (std::size_t v = 1; v < size; ++v) {
            f.left[v] += rt.left[v];
            f.right[v] += rt.right[v];
          }
          f.left[static_cast<std::size_t>(r)] = l.root;
          f.right[static_cast<std::size_t>(r)] = rt.root;
          out.push_back(std::move(f));
        }
      }
      if (sub == 0) break;
    }
  }
  return out;
}

}  // namespace

std::vector<LbsTree> enumerate_lbs(int n, bool left_only) {
  if (n < 1) throw DomainError("LBS enumeration requires n >= 1");
  if (n > 16) throw DomainError("LBS enumeration is limited to n <= 16");
  std::vector<LbsTree> out;
  for (auto& f : build((1u << n) - 1, n)) {
    if (left_only && f.right[static_cast<std::size_t>(f.root)] != 0) continue;
    out.emplace_back(n, f.root, std::move(f.left), std::move(f.right));
  }
  std::sort(out.begin(), out.end(), [](const LbsTree& a, const LbsTree& b) {
    auto key = [](const LbsTree& t) {
      std::vector<int> k{t.root()};
      for (int v = 1; v <= t.vertex_count(); ++v) k.push_back(t.parent(v));
      for (int v = 1; v <= t.vertex_count(); ++v) k.push_back(t.left(v));
      return k;
    };
    return key(a) < key(b);
  });
  return out;
}

ColoredForest rotate_to_nonincreasing(const LbsTree& tree) {
  if (!tree.is_left_variant()) throw DomainError("rotation needs a left LBS tree");
  const int n = tree.vertex_count();
  ColoredForest out(n, 1);
  for (int v = 1; v <= n; ++v) {
    if (tree.left(v) != 0) out.add_edge({v, tree.left(v), 1});
    const int r = tree.right(v);
    if (r == 0) continue;
    int u = v;
    int x = tree.root();
    while (u != tree.root()) {
      const int p = tree.parent(u);
      if (tree.left(p) == u) {
        x = p;
        break;
      }
      u = p;
    }
    out.add_edge({x, r, 1});
  }
  return out;
}

std::string to_string(ConjectureVariant v) {
  return v == ConjectureVariant::kLiteralLbs ? "literal" : "restricted";
}

ConjectureVariant parse_conjecture_variant(const std::string& name) {
  if (name == "literal") return ConjectureVariant::kLiteralLbs;
  if (name == "restricted") return ConjectureVariant::kRestrictedNonIncreasing;
  throw DomainError("unknown conjecture variant '" + name + "'");
}

ConjectureReport conjecture_report(int n, ConjectureVariant variant) {
  if (n < 1) throw DomainError("conjecture report requires n >= 1");
  ConjectureReport rep;
  rep.n = n;
  rep.variant = variant;
  std::vector<BigInt> consecutive(static_cast<std::size_t>(n)), top(static_cast<std::size_t>(n));
  if (variant == ConjectureVariant::kLiteralLbs) {
    for (const auto& t : enumerate_lbs(n, true)) {
      std::size_t c = 0, k = 0;
      for (const auto& e : t.edges()) {
        c += e.parent == e.child + 1;
        k += e.parent == n;
      }
      consecutive[c] += 1;
      top[k] += 1;
    }
  } else {
    for_each_forest(n, 1, {ForestMode::kNonIncreasing, 1, 0}, true, [&](const ColoredForest& t) {
      consecutive[consecutive_smallest_child(t)] += 1;
      top[tree_activity(t).count] += 1;
    });
  }
  rep.dist_consecutive = ActivityVector(std::move(consecutive));
  rep.dist_top = ActivityVector(std::move(top));
  rep.equal = rep.dist_consecutive == rep.dist_top;
  return rep;
}

}  // namespace activity
