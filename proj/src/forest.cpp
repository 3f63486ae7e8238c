#include "activity/forest.hpp"

#include <algorithm>
#include <sstream>

#include "activity/errors.hpp"

namespace activity {

ColoredForest::ColoredForest(int n, int colors)
    : n_(n), k_(colors), parent_(static_cast<std::size_t>(n) + 1, 0), color_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 1) throw DomainError("a forest needs at least one vertex");
  if (colors < 1) throw DomainError("a forest needs at least one color");
}

ColoredForest::ColoredForest(int n, int colors, const std::vector<ForestEdge>& edges) : ColoredForest(n, colors) {
  for (const auto& e : edges) add_edge(e);
}

std::vector<int> ColoredForest::roots() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if (parent(v) == 0) out.push_back(v);
  }
  return out;
}

std::vector<int> ColoredForest::children(int v) const {
  std::vector<int> out;
  for (int c = 1; c <= n_; ++c) {
    if (parent(c) == v) out.push_back(c);
  }
  return out;
}

std::vector<ForestEdge> ColoredForest::edges() const {
  std::vector<ForestEdge> out;
  for (int c = 1; c <= n_; ++c) {
    if (parent(c) != 0) out.push_back({parent(c), c, color(c)});
  }
  return out;
}

std::size_t ColoredForest::edge_count() const {
  return static_cast<std::size_t>(std::count_if(parent_.begin() + 1, parent_.end(), [](int p) { return p != 0; }));
}

int ColoredForest::root_of(int v) const {
  while (parent(v) != 0) v = parent(v);
  return v;
}

void ColoredForest::add_edge(const ForestEdge& e) {
  if (e.parent < 1 || e.parent > n_ || e.child < 1 || e.child > n_) {
    throw DomainError("edge vertex outside 1.." + std::to_string(n_));
  }
  if (e.color < 1 || e.color > k_) throw DomainError("edge color " + std::to_string(e.color) + " outside 1.." + std::to_string(k_));
  if (e.parent == e.child) throw DomainError("a forest has no loops");
  if (parent(e.child) != 0) throw DomainError("vertex " + std::to_string(e.child) + " already has a parent");
  if (root_of(e.parent) == e.child) throw DomainError("edge closes a cycle");
  parent_[static_cast<std::size_t>(e.child)] = e.parent;
  color_[static_cast<std::size_t>(e.child)] = e.color;
}

void ColoredForest::remove_edge(int child) {
  parent_[static_cast<std::size_t>(child)] = 0;
  color_[static_cast<std::size_t>(child)] = 0;
}

std::string ColoredForest::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& e : edges()) {
    if (!first) os << ',';
    first = false;
    os << '(' << e.parent << ',' << e.child << ',' << e.color << ')';
  }
  os << ']';
  return os.str();
}

std::string to_string(ForestMode mode) {
  switch (mode) {
    case ForestMode::kUnrestricted:
      return "unrestricted";
    case ForestMode::kDecreasing:
      return "decreasing";
    case ForestMode::kIncreasing:
      return "increasing";
    case ForestMode::kNonDecreasing:
      return "non-decreasing";
    case ForestMode::kNonIncreasing:
      return "non-increasing";
  }
  return "unknown";
}

ForestMode parse_forest_mode(const std::string& name) {
  for (auto m : {ForestMode::kUnrestricted, ForestMode::kDecreasing, ForestMode::kIncreasing, ForestMode::kNonDecreasing,
                 ForestMode::kNonIncreasing}) {
    if (to_string(m) == name) return m;
  }
  throw DomainError("unknown forest class '" + name + "'");
}

bool classify(const ColoredForest& f, const ForestClass& cls) {
  if (cls.k1 < 0 || cls.k2 < 0) throw DomainError("class color counts must be nonnegative");
  if (cls.colors() != f.colors()) {
    throw DomainError("class uses " + std::to_string(cls.colors()) + " colors but the forest has " +
                      std::to_string(f.colors()));
  }
  const int n = f.vertex_count();
  for (int c = 1; c <= n; ++c) {
    if (f.parent(c) != 0 && (f.color(c) < 1 || f.color(c) > f.colors())) throw DomainError("edge color out of range");
  }
  if (cls.mode == ForestMode::kUnrestricted) return true;

  std::vector<int> min_color(static_cast<std::size_t>(n) + 1, 0);
  for (int c = 1; c <= n; ++c) {
    const int p = f.parent(c);
    if (p == 0) continue;
    auto& m = min_color[static_cast<std::size_t>(p)];
    if (m == 0 || f.color(c) < m) m = f.color(c);
  }
  // Per vertex: how many minimal-color children are smaller / larger.
  std::vector<int> smaller(static_cast<std::size_t>(n) + 1, 0), larger(static_cast<std::size_t>(n) + 1, 0);
  for (int c = 1; c <= n; ++c) {
    const int p = f.parent(c);
    if (p == 0 || f.color(c) != min_color[static_cast<std::size_t>(p)]) continue;
    (c < p ? smaller : larger)[static_cast<std::size_t>(p)] += 1;
  }
  for (int v = 1; v <= n; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    const int cv = min_color[vi];
    if (cv == 0 || cv > cls.k1) continue;
    bool ok = true;
    switch (cls.mode) {
      case ForestMode::kDecreasing:
        ok = larger[vi] == 0;
        break;
      case ForestMode::kIncreasing:
        ok = smaller[vi] == 0;
        break;
      case ForestMode::kNonIncreasing:
        ok = smaller[vi] > 0;
        break;
      case ForestMode::kNonDecreasing:
        ok = larger[vi] > 0;
        break;
      case ForestMode::kUnrestricted:
        break;
    }
    if (!ok) return false;
  }
  return true;
}

void for_each_forest(int n, int colors, const ForestClass& cls, bool spanning_only,
                     const std::function<void(const ColoredForest&)>& visit) {
  if (n < 1) throw DomainError("forest enumeration requires n >= 1");
  if (colors < 1) throw DomainError("forest enumeration requires at least one color");
  if (cls.colors() != colors) throw DomainError("class color counts do not add up to the palette size");

  const auto un = static_cast<std::size_t>(n);
  std::vector<int> parent(un + 1, 0);  // odometer over {0..n}^n, 0 = root
  std::vector<int> state(un + 1, 0);   // cycle detection marks
  auto acyclic = [&]() {
    std::fill(state.begin(), state.end(), 0);
    for (int v = 1; v <= n; ++v) {
      // 0 unvisited, v-stamp on the current walk, -1 known good
      int u = v;
      while (u != 0 && state[static_cast<std::size_t>(u)] == 0) {
        state[static_cast<std::size_t>(u)] = v;
        u = parent[static_cast<std::size_t>(u)];
      }
      if (u != 0 && state[static_cast<std::size_t>(u)] == v) return false;
      u = v;
      while (u != 0 && state[static_cast<std::size_t>(u)] == v) {
        state[static_cast<std::size_t>(u)] = -1;
        u = parent[static_cast<std::size_t>(u)];
      }
    }
    return true;
  };

  while (true) {
    int roots = 0;
    bool loop = false;
    for (int v = 1; v <= n; ++v) {
      roots += parent[static_cast<std::size_t>(v)] == 0;
      loop = loop || parent[static_cast<std::size_t>(v)] == v;
    }
    if (!loop && (!spanning_only || roots == 1) && acyclic()) {
      std::vector<int> edge_children;
      for (int v = 1; v <= n; ++v) {
        if (parent[static_cast<std::size_t>(v)] != 0) edge_children.push_back(v);
      }
      std::vector<int> color(edge_children.size(), 1);
      while (true) {
        ColoredForest f(n, colors);
        for (std::size_t i = 0; i < edge_children.size(); ++i) {
          f.add_edge({parent[static_cast<std::size_t>(edge_children[i])], edge_children[i], color[i]});
        }
        if (classify(f, cls)) visit(f);
        // Last edge varies fastest.
        std::size_t k = color.size();
        while (k > 0 && color[k - 1] == colors) color[--k] = 1;
        if (k == 0) break;
        ++color[k - 1];
      }
    }
    std::size_t k = un;
    while (k > 0 && parent[k] == n) parent[k--] = 0;
    if (k == 0) break;
    ++parent[k];
  }
}

std::vector<ColoredForest> enumerate_forests(int n, int colors, const ForestClass& cls, bool spanning_only) {
  std::vector<ColoredForest> out;
  for_each_forest(n, colors, cls, spanning_only, [&](const ColoredForest& f) { out.push_back(f); });
  return out;
}

BigInt count_forests(int n, int colors, const ForestClass& cls, bool spanning_only) {
  BigInt count = 0;
  for_each_forest(n, colors, cls, spanning_only, [&](const ColoredForest&) { count += 1; });
  return count;
}

TreeActivity tree_activity(const ColoredForest& t) {
  if (!t.is_tree()) throw DomainError("tree activity needs a spanning tree");
  TreeActivity out;
  const int n = t.vertex_count();
  for (const auto& e : t.edges()) {
    if (e.parent == n && e.color == 1) out.edges.push_back(e);
  }
  out.count = out.edges.size();
  return out;
}

std::size_t losing_activity(const ColoredForest& f) {
  std::size_t count = 0;
  for (const auto& e : f.edges()) count += e.parent == e.child + 1;
  return count;
}

std::size_t consecutive_smallest_child(const ColoredForest& f) {
  std::size_t count = 0;
  for (int v = 2; v <= f.vertex_count(); ++v) {
    const auto kids = f.children(v);
    count += !kids.empty() && kids.front() == v - 1;
  }
  return count;
}

ColoredForest cover_tree(const ColoredForest& f) {
  ColoredForest t = f;
  const int n = f.vertex_count();
  const int top_root = f.root_of(n);
  for (int r : f.roots()) {
    if (r != top_root) t.add_edge({n, r, 1});
  }
  return t;
}

ColoredForest decreasing_involution(const ColoredForest& t) {
  if (t.colors() != 1) throw DomainError("the involution is defined on one-color trees");
  if (!t.is_tree()) throw DomainError("the involution needs a spanning tree");
  if (!classify(t, {ForestMode::kDecreasing, 1, 0})) throw DomainError("the involution needs a decreasing tree");
  const int n = t.vertex_count();
  ColoredForest out(n, 1);
  for (const auto& e : t.edges()) {
    int p = e.parent;
    if (p == n && e.child + 1 != n) {
      p = e.child + 1;
    } else if (p == e.child + 1 && p != n) {
      p = n;
    }
    out.add_edge({p, e.child, 1});
  }
  return out;
}

std::string to_string(TreeStatistic s) {
  switch (s) {
    case TreeStatistic::kChildrenOfTopColorOne:
      return "children-of-n";
    case TreeStatistic::kConsecutive:
      return "consecutive";
    case TreeStatistic::kConsecutiveSmallestChild:
      return "consecutive-smallest-child";
  }
  return "unknown";
}

TreeStatistic parse_tree_statistic(const std::string& name) {
  for (auto s : {TreeStatistic::kChildrenOfTopColorOne, TreeStatistic::kConsecutive,
                 TreeStatistic::kConsecutiveSmallestChild}) {
    if (to_string(s) == name) return s;
  }
  throw DomainError("unknown statistic '" + name + "'");
}

std::size_t evaluate_statistic(const ColoredForest& t, TreeStatistic s) {
  switch (s) {
    case TreeStatistic::kChildrenOfTopColorOne:
      return tree_activity(t).count;
    case TreeStatistic::kConsecutive:
      return losing_activity(t);
    case TreeStatistic::kConsecutiveSmallestChild:
      return consecutive_smallest_child(t);
  }
  return 0;
}

ActivityVector tree_statistic_vector(int n, int colors, const ForestClass& cls, TreeStatistic statistic) {
  std::vector<BigInt> dist(static_cast<std::size_t>(n));
  for_each_forest(n, colors, cls, true, [&](const ColoredForest& t) { dist[evaluate_statistic(t, statistic)] += 1; });
  return ActivityVector(std::move(dist));
}

ElementId forest_edge_id(const ForestEdge& e, int n, int colors) {
  return (static_cast<ElementId>(e.parent) * (n + 1) + e.child) * (colors + 1) + e.color;
}

ForestEdge forest_edge_from_id(ElementId id, int n, int colors) {
  ForestEdge e;
  e.color = static_cast<int>(id % (colors + 1));
  id /= (colors + 1);
  e.child = static_cast<int>(id % (n + 1));
  e.parent = static_cast<int>(id / (n + 1));
  return e;
}

SystemWithActivity forest_covering_system(int n, int colors, const ForestClass& cls) {
  std::vector<ElementId> ground;
  for (int p = 1; p <= n; ++p) {
    for (int c = 1; c <= n; ++c) {
      if (p == c) continue;
      for (int col = 1; col <= colors; ++col) ground.push_back(forest_edge_id({p, c, col}, n, colors));
    }
  }
  const auto to_subset = [&](const std::vector<ForestEdge>& edges) {
    Subset s;
    for (const auto& e : edges) s.push_back(forest_edge_id(e, n, colors));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<Subset> family;
  ActivityAssignment act;
  for_each_forest(n, colors, cls, false, [&](const ColoredForest& f) {
    Subset s = to_subset(f.edges());
    if (f.is_tree()) act[s] = to_subset(tree_activity(f).edges);
    family.push_back(std::move(s));
  });
  return {CoveringSystem(std::move(ground), std::move(family), n - 1), std::move(act)};
}

}  // namespace activity
