#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gds/error.hpp"
#include "gds/extension.hpp"
#include "gds/extremality.hpp"
#include "gds/family.hpp"
#include "gds/graph.hpp"
#include "gds/oracle.hpp"
#include "gds/rational.hpp"

namespace gds::io {

using Json = nlohmann::ordered_json;

struct Instance {
  SetFamily family;
  std::optional<WeightFunction> weights;
};

namespace detail {

inline ElementId parse_label(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw InvalidInput(where + ": labels must be non-negative integers");
  return v.get<ElementId>();
}

inline ElementId parse_label_text(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidInput("weight key '" + s + "' is not an element label");
  return std::stoull(s);
}

inline Rational parse_value(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InvalidInput(where + ": weights must be integers or \"p/q\" strings");
}

}  // namespace detail

/// Parses {"ground": [...]?, "blocks": [[...], ...], "weights": {"label": "p/q", ...}?}.
inline Instance parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed instance: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_array())
    throw InvalidInput("instance needs a \"blocks\" list");
  std::vector<std::vector<ElementId>> blocks;
  for (const auto& b : doc["blocks"]) {
    if (!b.is_array()) throw InvalidInput("each block must be a list of labels");
    std::vector<ElementId> members;
    for (const auto& g : b) members.push_back(detail::parse_label(g, "blocks"));
    blocks.push_back(std::move(members));
  }
  Instance inst{build_family(blocks), std::nullopt};
  if (doc.contains("ground")) {
    if (!doc["ground"].is_array()) throw InvalidInput("\"ground\" must be a list of labels");
    std::set<ElementId> ground;
    for (const auto& g : doc["ground"]) ground.insert(detail::parse_label(g, "ground"));
    const auto& actual = inst.family.ground();
    if (ground != std::set<ElementId>(actual.begin(), actual.end()))
      throw InvalidInput("\"ground\" differs from the union of the blocks");
  }
  if (doc.contains("weights")) {
    if (!doc["weights"].is_object()) throw InvalidInput("\"weights\" must map labels to values");
    WeightFunction w;
    for (const auto& [key, value] : doc["weights"].items()) {
      const ElementId g = detail::parse_label_text(key);
      if (!inst.family.contains(g))
        throw UnknownElement("weight given for element " + std::to_string(g) + " outside the ground set");
      w.set(g, detail::parse_value(value, "weights"));
    }
    inst.weights = std::move(w);
  }
  return inst;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

/// Parses "1=1/2,3=1" into a weight function.
inline WeightFunction parse_weight_list(const std::string& text) {
  WeightFunction w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("expected label=value, got '" + item + "'");
    w.set(detail::parse_label_text(item.substr(0, eq)), parse_rational(item.substr(eq + 1)));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Report documents

inline Json to_json(const WeightFunction& w) {
  Json out = Json::object();
  for (const auto& [g, v] : w.values()) out[std::to_string(g)] = to_string(v);
  return out;
}

inline Json to_json(const SetFamily& f) {
  Json blocks = Json::array();
  for (const auto& b : f.blocks()) blocks.push_back(b.members);
  return Json{{"ground", f.ground()}, {"blocks", blocks}};
}

inline Json instance_json(const SetFamily& f, const std::optional<WeightFunction>& w) {
  Json out = to_json(f);
  if (w) out["weights"] = to_json(*w);
  return out;
}

inline Json to_json(const MembershipReport& r) {
  Json sums = Json::object();
  for (const auto& [k, s] : r.block_sums) sums[std::to_string(k)] = to_string(s);
  return Json{{"block_sums", sums}, {"in_S", r.in_S}, {"in_S0", r.in_S0},
              {"in_P", r.in_P}, {"in_P0", r.in_P0}};
}

inline Json to_json(const A2Report& r) {
  return Json{{"m", r.m}, {"a21", r.a21}, {"a22_violations", r.a22_violations}, {"ok", r.ok},
              {"horizon_limited", r.horizon_limited}, {"horizon", r.horizon}};
}

inline Json to_json(const CountingIdentity& c) {
  return Json{{"blocks", c.lhs.str()}, {"weighted_multiplicity", to_string(c.rhs)},
              {"bound", to_string(c.bound)}, {"holds", Rational(c.lhs) == c.rhs}};
}

inline Json to_json(const Path& p) {
  return Json{{"vertices", p.vertices}, {"is_cycle", p.is_cycle}};
}

inline Json to_json(const Witness& w) {
  return Json{{"construction", to_string(w.construction)},
              {"epsilon", to_string(w.epsilon)},
              {"slack", to_string(w.slack)},
              {"w_plus", to_json(w.w_plus)},
              {"w_minus", to_json(w.w_minus)}};
}

inline Json to_json(const ExtremalityVerdict& v) {
  Json out{{"verdict", to_string(v.kind)}};
  if (v.kind == ExtremalityVerdict::Kind::Extreme) {
    Json comps = Json::array();
    for (const auto& c : v.components)
      comps.push_back(Json{{"vertices", c.vertices}, {"kind", to_string(c.kind)}});
    out["components"] = comps;
  } else if (v.kind == ExtremalityVerdict::Kind::NotExtreme) {
    out["failing_component"] = v.failing_component;
    out["witness"] = to_json(*v.witness);
  } else {
    out["reason"] = v.reason;
  }
  return out;
}

inline Json to_json(const VertexSet& vs) {
  Json list = Json::array();
  for (const auto& v : vs.vertices) list.push_back(to_json(v));
  return Json{{"count", vs.vertices.size()}, {"infeasible", vs.infeasible}, {"vertices", list}};
}

inline Json to_json(const Decomposition& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms)
    terms.push_back(Json{{"coefficient", to_string(t.coefficient)}, {"vertex", to_json(t.vertex)}});
  return Json{{"terms", terms}};
}

inline Json to_json(const CrossValidationReport& r) {
  return Json{{"vertices", r.vertex_count},        {"vertices_confirmed", r.vertices_confirmed},
              {"samples", r.samples},              {"samples_confirmed", r.samples_confirmed},
              {"discrepancies", r.discrepancies}, {"ok", r.ok()}};
}

inline Json to_json(const ExtensionResult& r) {
  Json chosen = Json::array();
  for (const auto& c : r.chosen)
    chosen.push_back(Json{{"element", c.element}, {"block", c.block}, {"value", to_string(c.value)}});
  return Json{{"horizon", r.horizon},
              {"complete", r.complete},
              {"extended", to_json(r.extended)},
              {"chosen", chosen},
              {"chi_prime", r.chi_prime.support()},
              {"chi_double_prime", r.chi_double_prime.support()}};
}

inline Json to_json(const ExtensionReport& r) {
  return Json{{"ok", r.ok()}, {"violations", r.violations}, {"vertex_shadow_checked", r.shadow_checked}};
}

inline Json to_json(const ApproximationReport& r) {
  Json blocks = Json::object();
  for (const auto& [k, d] : r.block_discrepancy) blocks[std::to_string(k)] = to_string(d);
  Json elems = Json::object();
  for (const auto& [g, d] : r.element_discrepancy) elems[std::to_string(g)] = to_string(d);
  return Json{{"n", r.n},
              {"horizon", r.horizon},
              {"truncated", to_json(r.truncated)},
              {"combined", to_json(r.combined)},
              {"block_discrepancy", blocks},
              {"element_discrepancy", elems}};
}

}  // namespace gds::io
