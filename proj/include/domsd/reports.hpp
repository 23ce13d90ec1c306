#pragma once

#include <json.hpp>
#include <map>

#include "domsd/sat_reduction.hpp"
#include "domsd/subdivision.hpp"
#include "domsd/tree_class.hpp"

namespace domsd {

using Json = nlohmann::json;

inline Json edge_to_json(const Edge& e) { return Json::array({e.a, e.b}); }

inline Edge edge_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("edge must be a two-element array");
  return Edge(j[0].get<int>(), j[1].get<int>());
}

struct GammaReport {
  int gamma = 0;
  std::vector<VertexId> witness;
};

inline Json to_json(const GammaReport& r) {
  return Json{{"gamma", r.gamma}, {"witness", r.witness}};
}

inline GammaReport gamma_report_from_json(const Json& j) {
  GammaReport r;
  r.gamma = j.at("gamma").get<int>();
  r.witness = j.at("witness").get<std::vector<VertexId>>();
  return r;
}

inline Json labeling_to_json(const TreeStatusLabeling& l) {
  Json out = Json::object();
  for (std::size_t v = 0; v < l.statuses.size(); ++v)
    out[std::to_string(v)] = std::string(1, status_letter(l.statuses[v]));
  return out;
}

inline TreeStatusLabeling labeling_from_json(const Json& j) {
  TreeStatusLabeling l;
  std::size_t n = 0;
  for (auto it = j.begin(); it != j.end(); ++it)
    n = std::max(n, static_cast<std::size_t>(std::stoul(it.key())) + 1);
  l.statuses.assign(n, Status::B);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string v = it.value().get<std::string>();
    if (v != "A" && v != "B") throw ParseError("status must be \"A\" or \"B\"");
    l.statuses[std::stoul(it.key())] = v == "A" ? Status::A : Status::B;
  }
  return l;
}

// Full per-graph result: gamma, sd (or the exceeds-budget marker), msd,
// per-edge msd values, and the witnesses behind each number.
struct ClassificationReport {
  int gamma = 0;
  int msd = 0;
  std::optional<int> sd;  // nullopt serializes as "exceeds-budget"
  int budget = 0;
  std::vector<std::pair<Edge, int>> per_edge_msd;
  std::vector<VertexId> gamma_witness;
  std::optional<Edge> msd_witness_edge;  // absent in tree mode without --verify
  std::vector<Edge> sd_witness_edges;
  std::map<std::string, double> timings_ms;
  std::optional<std::string> tree_reason;             // tree mode only
  std::optional<TreeStatusLabeling> tree_labeling;    // tree mode, msd == 3
  std::optional<bool> verified;                       // --verify cross-check outcome
};

inline Json to_json(const ClassificationReport& r) {
  Json j;
  j["gamma"] = r.gamma;
  j["msd"] = r.msd;
  if (r.sd)
    j["sd"] = *r.sd;
  else
    j["sd"] = "exceeds-budget";
  if (r.budget >= 1) j["budget"] = r.budget;
  Json per = Json::array();
  for (const auto& [e, t] : r.per_edge_msd)
    per.push_back(Json{{"edge", edge_to_json(e)}, {"msd", t}});
  j["per_edge_msd"] = per;
  Json w;
  w["gamma_set"] = r.gamma_witness;
  if (r.msd_witness_edge) w["msd_edge"] = edge_to_json(*r.msd_witness_edge);
  Json sd_edges = Json::array();
  for (const Edge& e : r.sd_witness_edges) sd_edges.push_back(edge_to_json(e));
  w["sd_edges"] = sd_edges;
  j["witnesses"] = w;
  j["timings"] = r.timings_ms;
  if (r.tree_reason) {
    Json tree;
    tree["reason"] = *r.tree_reason;
    if (r.tree_labeling) tree["labeling"] = labeling_to_json(*r.tree_labeling);
    j["tree"] = tree;
  }
  if (r.verified) j["verified"] = *r.verified;
  return j;
}

inline ClassificationReport classification_report_from_json(const Json& j) {
  ClassificationReport r;
  r.gamma = j.at("gamma").get<int>();
  r.msd = j.at("msd").get<int>();
  if (j.at("sd").is_string()) {
    if (j.at("sd").get<std::string>() != "exceeds-budget")
      throw ParseError("sd must be an integer or \"exceeds-budget\"");
    r.sd = std::nullopt;
  } else {
    r.sd = j.at("sd").get<int>();
  }
  r.budget = j.contains("budget") ? j.at("budget").get<int>() : 0;
  for (const Json& item : j.at("per_edge_msd"))
    r.per_edge_msd.emplace_back(edge_from_json(item.at("edge")), item.at("msd").get<int>());
  const Json& w = j.at("witnesses");
  r.gamma_witness = w.at("gamma_set").get<std::vector<VertexId>>();
  if (w.contains("msd_edge")) r.msd_witness_edge = edge_from_json(w.at("msd_edge"));
  if (w.contains("sd_edges"))
    for (const Json& e : w.at("sd_edges")) r.sd_witness_edges.push_back(edge_from_json(e));
  r.timings_ms = j.at("timings").get<std::map<std::string, double>>();
  if (j.contains("tree")) {
    r.tree_reason = j.at("tree").at("reason").get<std::string>();
    if (j.at("tree").contains("labeling"))
      r.tree_labeling = labeling_from_json(j.at("tree").at("labeling"));
  }
  if (j.contains("verified")) r.verified = j.at("verified").get<bool>();
  return r;
}

inline Json to_json(const ReductionReport& r) {
  return Json{{"n", r.num_vars},
              {"m", r.num_clauses},
              {"vertices", r.vertices},
              {"edges", r.edges},
              {"gamma", r.gamma},
              {"gamma_x0x1_subdivided", r.gamma_x0x1_subdivided},
              {"satisfiable", r.satisfiable},
              {"sd_gt_1", r.sd_gt_1},
              {"pass", r.pass}};
}

inline ReductionReport reduction_report_from_json(const Json& j) {
  ReductionReport r;
  r.num_vars = j.at("n").get<int>();
  r.num_clauses = j.at("m").get<int>();
  r.vertices = j.at("vertices").get<int>();
  r.edges = j.at("edges").get<int>();
  r.gamma = j.at("gamma").get<int>();
  r.gamma_x0x1_subdivided = j.at("gamma_x0x1_subdivided").get<int>();
  r.satisfiable = j.at("satisfiable").get<bool>();
  r.sd_gt_1 = j.at("sd_gt_1").get<bool>();
  r.pass = j.at("pass").get<bool>();
  return r;
}

}  // namespace domsd
