#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gaplab/errors.hpp"
#include "gaplab/interval.hpp"

namespace gaplab {

// One derived quantity: its enclosure, the defining expression, and the
// names of the quantities it was computed from. `asymptotic` marks values
// where a main-term evaluation stands in for an asymptotic statement
// (every o(1) factor treated as exactly 1).
struct TraceNode {
  std::string name;
  std::string formula;
  hp::Interval value;
  bool asymptotic = false;
  std::vector<std::string> inputs;
};

// An ordered audit log of a derivation. Node names are unique; inputs refer
// to earlier nodes by name.
class DerivationTrace {
 public:
  const TraceNode& add(TraceNode node);
  const TraceNode* find(std::string_view name) const;
  const std::vector<TraceNode>& nodes() const { return nodes_; }

  // Largest relative interval width over all nodes (0 when empty).
  double max_relative_width() const;

  // Nested rendering: each node's children are the fully expanded subtrees
  // of its inputs. Endpoints are printed with outward rounding so the JSON
  // itself carries valid enclosures. `digits` counts digits after the
  // leading digit.
  nlohmann::ordered_json to_json(int digits = 40) const;

  // Flat rendering, one row per node in insertion order:
  // name,midpoint,radius,formula
  std::string to_csv(int digits = 16) const;

 private:
  nlohmann::ordered_json node_json(const TraceNode& n, int digits) const;

  std::vector<TraceNode> nodes_;
};

}  // namespace gaplab
