#pragma once

#include <optional>

#include <json.hpp>

#include "activity/covering.hpp"
#include "activity/forest.hpp"
#include "activity/gain_graph.hpp"
#include "activity/lbs.hpp"
#include "activity/polycount.hpp"

namespace activity {

// Insertion-ordered so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Exact decimal strings, never JSON numbers.
Json to_json(const BigInt& v);
Json to_json(const ActivityVector& v);
// Coefficients lowest degree first.
Json to_json(const IntPolynomial& p);

/// {"n": n, "colors": k, "edges": [[parent, child, color], ...]}
Json forest_to_json(const ColoredForest& f);
ColoredForest forest_from_json(const Json& j);

/// {"n": n, "nodes": {"v": {"left": l|null, "right": r|null}, ...}, "root": r}
Json lbs_to_json(const LbsTree& t);
LbsTree lbs_from_json(const Json& j);

/// {"rank": r, "ground": [...], "family": [[...], ...], "activity": {"1,2": [1], ...}}
/// The activity block is optional on input.
Json covering_to_json(const CoveringSystem& sys, const ActivityAssignment* act = nullptr);
struct ParsedCovering {
  CoveringSystem system;
  std::optional<ActivityAssignment> activity;
};
ParsedCovering covering_from_json(const Json& j);

/// {"n": n, "interval": [a, b]} or {"n": n, "edges": [[tail, head, gain], ...]};
/// explicit edge lists keep their listed order.
GainGraph gain_graph_from_json(const Json& j);
Json gain_graph_to_json(const GainGraph& g);

/// Reorders `g` by a JSON list of [tail, head, gain] triples naming every edge once.
GainGraph apply_edge_order(const GainGraph& g, const Json& order);

}  // namespace activity
