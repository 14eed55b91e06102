#include "gaplab/trace.hpp"

#include <algorithm>
#include <sstream>

namespace gaplab {

const TraceNode& DerivationTrace::add(TraceNode node) {
  if (find(node.name) != nullptr)
    throw DomainError("duplicate trace node '" + node.name + "'");
  for (const auto& in : node.inputs) {
    if (find(in) == nullptr)
      throw DomainError("trace node '" + node.name + "' references unknown input '" + in + "'");
  }
  nodes_.push_back(std::move(node));
  return nodes_.back();
}

const TraceNode* DerivationTrace::find(std::string_view name) const {
  for (const auto& n : nodes_)
    if (n.name == name) return &n;
  return nullptr;
}

double DerivationTrace::max_relative_width() const {
  double w = 0.0;
  for (const auto& n : nodes_) w = std::max(w, n.value.relative_width());
  return w;
}

nlohmann::ordered_json DerivationTrace::node_json(const TraceNode& n, int digits) const {
  nlohmann::ordered_json j;
  j["name"] = n.name;
  j["value_lo"] = n.value.lo_string(digits);
  j["value_hi"] = n.value.hi_string(digits);
  j["formula"] = n.formula;
  j["asymptotic"] = n.asymptotic;
  auto children = nlohmann::ordered_json::array();
  for (const auto& in : n.inputs) children.push_back(node_json(*find(in), digits));
  j["children"] = std::move(children);
  return j;
}

nlohmann::ordered_json DerivationTrace::to_json(int digits) const {
  auto arr = nlohmann::ordered_json::array();
  // Roots: nodes nothing later refers to. Everything else appears nested.
  for (size_t i = 0; i < nodes_.size(); ++i) {
    bool referenced = false;
    for (size_t k = i + 1; k < nodes_.size() && !referenced; ++k)
      referenced = std::find(nodes_[k].inputs.begin(), nodes_[k].inputs.end(),
                             nodes_[i].name) != nodes_[k].inputs.end();
    if (!referenced) arr.push_back(node_json(nodes_[i], digits));
  }
  return arr;
}

std::string DerivationTrace::to_csv(int digits) const {
  std::ostringstream out;
  out << "name,midpoint,radius,formula\n";
  for (const auto& n : nodes_) {
    std::string formula = n.formula;
    std::replace(formula.begin(), formula.end(), ',', ';');
    out << n.name << ',' << n.value.mid_string(digits) << ','
        << n.value.radius_string() << ',' << '"' << formula << '"' << '\n';
  }
  return out.str();
}

}  // namespace gaplab
