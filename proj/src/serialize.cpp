#include "activity/serialize.hpp"

#include <string>

#include "activity/errors.hpp"

namespace activity {

namespace {

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw DomainError(std::string("expected an integer for ") + what);
  return j.get<int>();
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw DomainError(std::string("missing field '") + name + "'");
  return j.at(name);
}

Subset subset_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of element ids");
  std::vector<ElementId> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DomainError("element ids must be integers");
    v.push_back(x.get<ElementId>());
  }
  return make_subset(std::move(v));
}

Subset subset_from_key(const std::string& key) {
  std::vector<ElementId> v;
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t end = key.find(',', pos);
    if (end == std::string::npos) end = key.size();
    try {
      std::size_t used = 0;
      const std::string token = key.substr(pos, end - pos);
      v.push_back(std::stoll(token, &used));
      if (used != token.size()) throw DomainError("malformed basis key '" + key + "'");
    } catch (const std::logic_error&) {
      throw DomainError("malformed basis key '" + key + "'");
    }
    pos = end + 1;
  }
  return make_subset(std::move(v));
}

}  // namespace

Json to_json(const BigInt& v) { return v.str(); }

Json to_json(const ActivityVector& v) {
  Json a = Json::array();
  for (const auto& e : v.entries) a.push_back(e.str());
  return a;
}

Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

Json forest_to_json(const ColoredForest& f) {
  Json edges = Json::array();
  for (const auto& e : f.edges()) edges.push_back(Json::array({e.parent, e.child, e.color}));
  return Json{{"n", f.vertex_count()}, {"colors", f.colors()}, {"edges", edges}};
}

ColoredForest forest_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const int colors = j.contains("colors") ? as_int(j.at("colors"), "colors") : 1;
  ColoredForest f(n, colors);
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw DomainError("'edges' must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || (e.size() != 2 && e.size() != 3)) throw DomainError("edges are [parent, child, color]");
    f.add_edge({as_int(e[0], "parent"), as_int(e[1], "child"), e.size() == 3 ? as_int(e[2], "color") : 1});
  }
  return f;
}

Json lbs_to_json(const LbsTree& t) {
  Json nodes = Json::object();
  for (int v = 1; v <= t.vertex_count(); ++v) {
    Json node = Json::object();
    node["left"] = t.left(v) ? Json(t.left(v)) : Json(nullptr);
    node["right"] = t.right(v) ? Json(t.right(v)) : Json(nullptr);
    nodes[std::to_string(v)] = node;
  }
  return Json{{"n", t.vertex_count()}, {"nodes", nodes}, {"root", t.root()}};
}

LbsTree lbs_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 1) throw DomainError("LBS tree needs n >= 1");
  std::vector<int> left(static_cast<std::size_t>(n) + 1, 0), right(static_cast<std::size_t>(n) + 1, 0);
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_object()) throw DomainError("'nodes' must be an object");
  for (const auto& [key, node] : nodes.items()) {
    int v = 0;
    try {
      v = std::stoi(key);
    } catch (const std::logic_error&) {
      throw DomainError("bad node key '" + key + "'");
    }
    if (v < 1 || v > n) throw DomainError("node " + key + " out of range");
    if (node.contains("left") && !node.at("left").is_null()) left[static_cast<std::size_t>(v)] = as_int(node.at("left"), "left");
    if (node.contains("right") && !node.at("right").is_null()) {
      right[static_cast<std::size_t>(v)] = as_int(node.at("right"), "right");
    }
  }
  return LbsTree(n, as_int(field(j, "root"), "root"), std::move(left), std::move(right));
}

Json covering_to_json(const CoveringSystem& sys, const ActivityAssignment* act) {
  Json family = Json::array();
  for (const auto& s : sys.family()) family.push_back(s);
  Json out{{"rank", sys.rank()}, {"ground", sys.ground()}, {"family", family}};
  if (act) {
    Json a = Json::object();
    for (const auto& [basis, active] : *act) a[subset_key(basis)] = active;
    out["activity"] = a;
  }
  return out;
}

ParsedCovering covering_from_json(const Json& j) {
  const int rank = as_int(field(j, "rank"), "rank");
  const Json& ground_j = field(j, "ground");
  if (!ground_j.is_array()) throw DomainError("'ground' must be an array");
  std::vector<ElementId> ground;
  for (const auto& x : ground_j) {
    if (!x.is_number_integer()) throw DomainError("element ids must be integers");
    ground.push_back(x.get<ElementId>());
  }
  std::vector<Subset> family;
  const Json& family_j = field(j, "family");
  if (!family_j.is_array()) throw DomainError("'family' must be an array");
  for (const auto& s : family_j) family.push_back(subset_from_json(s));
  ParsedCovering out{CoveringSystem(std::move(ground), std::move(family), rank), std::nullopt};
  if (j.contains("activity")) {
    const Json& a = j.at("activity");
    if (!a.is_object()) throw DomainError("'activity' must be an object");
    ActivityAssignment act;
    for (const auto& [key, active] : a.items()) act[subset_from_key(key)] = subset_from_json(active);
    out.activity = std::move(act);
  }
  return out;
}

GainGraph gain_graph_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (j.contains("interval")) {
    const Json& iv = j.at("interval");
    if (!iv.is_array() || iv.size() != 2) throw DomainError("'interval' must be [a, b]");
    return complete_interval(n, iv[0].get<long>(), iv[1].get<long>());
  }
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw DomainError("'edges' must be an array");
  std::vector<GainEdge> list;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3) throw DomainError("gain edges are [tail, head, gain]");
    list.push_back({as_int(e[0], "tail"), as_int(e[1], "head"), e[2].get<long>()});
  }
  return GainGraph(n, std::move(list));
}

Json gain_graph_to_json(const GainGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.tail, e.head, e.gain}));
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

GainGraph apply_edge_order(const GainGraph& g, const Json& order) {
  if (!order.is_array()) throw DomainError("an edge order is a JSON array of [tail, head, gain]");
  std::vector<std::size_t> perm;
  for (const auto& e : order) {
    if (!e.is_array() || e.size() != 3) throw DomainError("gain edges are [tail, head, gain]");
    perm.push_back(g.index_of({as_int(e[0], "tail"), as_int(e[1], "head"), e[2].get<long>()}));
  }
  return g.reordered(perm);
}

}  // namespace activity
