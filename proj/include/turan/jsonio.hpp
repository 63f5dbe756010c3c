#pragma once

#include <json.hpp>

#include "turan/harness.hpp"
#include "turan/packing.hpp"

namespace turan {

// JSON views of the library types. Part ids are 1-based everywhere here;
// vertex ids stay 0-based to match the graph text format.

inline nlohmann::json partition_json(const BlockPartition& p) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : p.blocks) {
    nlohmann::json ids = nlohmann::json::array();
    for (int part : b) ids.push_back(part + 1);
    blocks.push_back(ids);
  }
  return blocks;
}

inline nlohmann::json formula_json(const FormulaResult& r,
                                   const std::string& witness_term) {
  nlohmann::json j;
  j["value"] = r.value;
  j["partition"] = r.partition ? partition_json(*r.partition)
                               : nlohmann::json(nullptr);
  j["surplus"] =
      r.partition ? nlohmann::json(r.partition->surplus) : nlohmann::json(nullptr);
  j["witness_term"] = witness_term;
  if (r.partition && !r.partition->blocks.empty()) {
    nlohmann::json sb = nlohmann::json::array();
    for (int part : r.partition->blocks[r.partition->surplus_block])
      sb.push_back(part + 1);
    j["surplus_block"] = sb;
  }
  if (!r.sort_perm.empty()) {
    nlohmann::json perm = nlohmann::json::array();
    for (int i : r.sort_perm) perm.push_back(i + 1);
    j["sort_permutation"] = perm;
  }
  return j;
}

inline nlohmann::json record_json(const ExtremalRecord& r) {
  nlohmann::json j;
  j["ns"] = r.ns.sizes();
  j["t"] = r.t;
  j["k"] = r.k;
  j["exact"] = r.exact ? nlohmann::json(*r.exact) : nlohmann::json(nullptr);
  j["lower_bound"] = r.best_bound;
  auto opt = [](const std::optional<std::uint64_t>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  j["formulas"] = {{"g", opt(r.formula_g)},
                   {"bet", opt(r.formula_bet)},
                   {"conj", opt(r.formula_conj)},
                   {"matching", opt(r.formula_matching)}};
  j["status"] = status_token(r);
  j["nodes"] = r.nodes_explored;
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

inline nlohmann::json rich_report_json(const MultipartiteGraph& g,
                                       const RichEdgeReport& rep) {
  nlohmann::json j;
  j["k"] = rep.k;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : rep.rich_edges) {
    nlohmann::json je;
    je["edge"] = {e.x, e.y};
    je["common_per_part"] = e.per_part_common;
    edges.push_back(je);
  }
  j["rich_edges"] = edges;
  j["z_set"] = rep.z_set.to_vector();
  j["max_same_class_rich_degree"] = rep.max_same_class_rich_degree;
  j["cover_size"] = rep.cover_size;

  // pair classification relative to the rich-edge Z
  nlohmann::json pairs = nlohmann::json::array();
  for (int i = 0; i < g.part_count(); ++i)
    for (int jx = i + 1; jx < g.part_count(); ++jx) {
      nlohmann::json p;
      p["parts"] = {i + 1, jx + 1};
      p["class"] = to_string(classify_pair(g, rep.z_set, i, jx));
      pairs.push_back(p);
    }
  j["pair_classes"] = pairs;
  return j;
}

inline nlohmann::json audit_json(const InductionAudit& a) {
  nlohmann::json j;
  j["delta"] = a.delta;
  nlohmann::json th = nlohmann::json::array();
  for (const auto& c : a.thresholds) {
    th.push_back({{"vertex", c.vertex},
                  {"part", c.part + 1},
                  {"degree", c.degree},
                  {"rule", c.rule},
                  {"required", c.required},
                  {"ok", c.ok}});
  }
  j["thresholds"] = th;
  nlohmann::json ch = nlohmann::json::array();
  for (const auto& c : a.checks) {
    nlohmann::json e = {{"removed", c.removed},
                        {"e_incident", c.e_incident},
                        {"applicable", c.applicable}};
    if (c.applicable) {
      e["gap"] = c.gap;
      e["holds"] = c.holds;
    }
    ch.push_back(e);
  }
  j["checks"] = ch;
  return j;
}

inline nlohmann::json census_json(const ShapeCensus& census) {
  nlohmann::json shapes = nlohmann::json::array();
  for (const auto& [shape, entry] : census) {
    shapes.push_back({{"shape", shape},
                      {"witness_sizes", entry.witness_sizes},
                      {"count", entry.count}});
  }
  return nlohmann::json{{"shapes", shapes}};
}

}  // namespace turan
