#include "activity/gain_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "activity/errors.hpp"

namespace activity {

std::string GainEdge::to_string() const {
  return std::to_string(gain) + "(" + std::to_string(tail) + "," + std::to_string(head) + ")";
}

GainGraph::GainGraph(int n, std::vector<GainEdge> ordered_edges) : n_(n), edges_(std::move(ordered_edges)) {
  if (n_ < 1) throw DomainError("gain graph needs at least one vertex");
  for (auto& e : edges_) {
    if (e.tail == e.head) throw DomainError("loop " + e.to_string() + " is not allowed");
    if (e.tail < 1 || e.head < 1 || e.tail > n_ || e.head > n_) {
      throw DomainError("edge " + e.to_string() + " has a vertex outside 1.." + std::to_string(n_));
    }
    if (e.tail > e.head) e = {e.head, e.tail, -e.gain};
  }
  std::vector<GainEdge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("gain graph lists an edge twice");
  }
  pair_edges_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    pair_edges_[static_cast<std::size_t>((edges_[i].tail - 1) * n_ + (edges_[i].head - 1))].push_back(i);
  }
}

GainGraph GainGraph::lexicographic(int n, std::vector<GainEdge> edges) {
  for (auto& e : edges) {
    if (e.tail > e.head) e = {e.head, e.tail, -e.gain};
  }
  std::sort(edges.begin(), edges.end());
  return GainGraph(n, std::move(edges));
}

GainGraph GainGraph::reordered(const std::vector<std::size_t>& permutation) const {
  if (permutation.size() != edges_.size()) throw DomainError("edge order has the wrong length");
  std::vector<bool> seen(edges_.size());
  std::vector<GainEdge> out;
  out.reserve(edges_.size());
  for (std::size_t old : permutation) {
    if (old >= edges_.size() || seen[old]) throw DomainError("edge order is not a permutation");
    seen[old] = true;
    out.push_back(edges_[old]);
  }
  return GainGraph(n_, std::move(out));
}

std::size_t GainGraph::index_of(const GainEdge& e) const {
  GainEdge canon = e.tail > e.head ? GainEdge{e.head, e.tail, -e.gain} : e;
  auto it = std::find(edges_.begin(), edges_.end(), canon);
  if (it == edges_.end()) throw DomainError("edge " + canon.to_string() + " is not in the graph");
  return static_cast<std::size_t>(it - edges_.begin());
}

const std::vector<std::size_t>& GainGraph::edges_between(int u, int v) const {
  if (u > v) std::swap(u, v);
  return pair_edges_[static_cast<std::size_t>((u - 1) * n_ + (v - 1))];
}

bool GainGraph::underlying_connected() const {
  std::vector<int> parent(static_cast<std::size_t>(n_) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n_;
  for (const auto& e : edges_) {
    int a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::string GainGraph::describe(const EdgeSet& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += edges_[s[i]].to_string();
  }
  return out + "}";
}

GainGraph complete_interval(int n, long a, long b) {
  if (n < 1) throw DomainError("complete_interval requires n >= 1");
  if (a > b) throw DomainError("complete_interval requires a <= b");
  std::vector<GainEdge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (long g = a; g <= b; ++g) edges.push_back({i, j, g});
    }
  }
  return GainGraph::lexicographic(n, std::move(edges));
}

EdgeSet Circle::edge_set() const {
  EdgeSet s;
  for (const auto& st : steps) s.push_back(st.edge);
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

int step_start(const GainGraph& g, const CircleStep& s) { return s.forward ? g.edge(s.edge).tail : g.edge(s.edge).head; }
int step_end(const GainGraph& g, const CircleStep& s) { return s.forward ? g.edge(s.edge).head : g.edge(s.edge).tail; }

}  // namespace

void validate_circle(const GainGraph& g, const Circle& c) {
  if (c.steps.size() < 2) throw DomainError("a circle needs at least two edges");
  std::set<int> visited;
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& s = c.steps[i];
    if (s.edge >= g.edge_count()) throw DomainError("circle uses an unknown edge");
    if (!used.insert(s.edge).second) throw DomainError("circle repeats an edge");
    const auto& next = c.steps[(i + 1) % c.steps.size()];
    if (step_end(g, s) != step_start(g, next)) throw DomainError("circle steps do not connect");
    if (!visited.insert(step_start(g, s)).second) throw DomainError("circle repeats a vertex");
  }
}

long circle_gain(const GainGraph& g, const Circle& c) {
  validate_circle(g, c);
  long total = 0;
  for (const auto& s : c.steps) total += s.forward ? g.edge(s.edge).gain : -g.edge(s.edge).gain;
  return total;
}

namespace {

// Enumerates every circle once: vertex cycles start at their smallest vertex
// and the second vertex is below the last, which fixes rotation and direction.
// Each vertex cycle expands into one circle per choice of parallel edges.
template <typename Visit>
void for_each_circle(const GainGraph& g, Visit&& visit) {
  const int n = g.vertex_count();
  // 2-circles from parallel edges.
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const auto& par = g.edges_between(u, v);
      for (std::size_t i = 0; i < par.size(); ++i) {
        for (std::size_t j = i + 1; j < par.size(); ++j) {
          visit(Circle{{{par[i], true}, {par[j], false}}});
        }
      }
    }
  }
  std::vector<int> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n) + 1);
  auto expand = [&](const std::vector<int>& cycle) {
    const std::size_t len = cycle.size();
    std::vector<const std::vector<std::size_t>*> choices(len);
    for (std::size_t i = 0; i < len; ++i) {
      choices[i] = &g.edges_between(cycle[i], cycle[(i + 1) % len]);
      if (choices[i]->empty()) return;
    }
    std::vector<std::size_t> pick(len, 0);
    while (true) {
      Circle c;
      for (std::size_t i = 0; i < len; ++i) {
        const std::size_t e = (*choices[i])[pick[i]];
        c.steps.push_back({e, g.edge(e).tail == cycle[i]});
      }
      visit(std::move(c));
      std::size_t k = 0;
      while (k < len && ++pick[k] == choices[k]->size()) pick[k++] = 0;
      if (k == len) break;
    }
  };
  auto extend = [&](auto&& self, int start) -> void {
    const int last = path.back();
    if (path.size() >= 3 && path[1] < last && !g.edges_between(last, start).empty()) expand(path);
    for (int v = start + 1; v <= n; ++v) {
      if (on_path[static_cast<std::size_t>(v)] || g.edges_between(last, v).empty()) continue;
      on_path[static_cast<std::size_t>(v)] = true;
      path.push_back(v);
      self(self, start);
      path.pop_back();
      on_path[static_cast<std::size_t>(v)] = false;
    }
  };
  for (int s = 1; s <= n; ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = true;
    extend(extend, s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
}

}  // namespace

std::vector<Circle> balanced_circles(const GainGraph& g) {
  std::vector<Circle> out;
  for_each_circle(g, [&](Circle c) {
    long total = 0;
    for (const auto& s : c.steps) total += s.forward ? g.edge(s.edge).gain : -g.edge(s.edge).gain;
    if (total == 0) out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end(), [](const Circle& a, const Circle& b) { return a.edge_set() < b.edge_set(); });
  return out;
}

std::vector<EdgeSet> broken_circuits(const GainGraph& g) {
  std::vector<EdgeSet> out;
  for (const auto& c : balanced_circles(g)) {
    EdgeSet s = c.edge_set();
    s.erase(s.begin());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace activity
