#include "idcode/report_json.hpp"

namespace idcode {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json scenario_json(const sim::Scenario& sc) { return sc.fault ? json(*sc.fault) : json("none"); }

}  // namespace

json to_json(const FamilySpec& spec) {
  return {{"kind", to_string(spec.kind)},
          {"r", spec.r},
          {"p", spec.budget()},
          {"radii", spec.identification_radii()}};
}

json to_json(const Witness& w) {
  json j{{"type", to_string(w.kind)}, {"vertices", w.vertices}, {"radii_tried", w.radii_tried}};
  if (!w.blocking.empty()) {
    json blocking = json::array();
    for (const auto& [y, radii] : w.blocking) blocking.push_back({{"vertex", y}, {"separating_radii", radii}});
    j["blocking"] = std::move(blocking);
  }
  return j;
}

json to_json(const RadiusCertificate& cert) {
  json per_vertex = json::object();
  for (std::size_t x = 0; x < cert.per_vertex.size(); ++x) {
    per_vertex[std::to_string(x)] = cert.per_vertex[x];
  }
  json j{{"per_vertex", std::move(per_vertex)}};
  if (cert.per_pair) {
    json pairs = json::array();
    const std::size_t n = cert.per_pair->order();
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) pairs.push_back({x, y, cert.per_pair->at(x, y)});
    }
    j["per_pair"] = std::move(pairs);
  }
  return j;
}

json to_json(const VerificationReport& report) {
  return {{"valid", report.valid},
          {"family", to_json(report.family)},
          {"certificate", report.certificate ? to_json(*report.certificate) : json(nullptr)},
          {"witness", report.witness ? to_json(*report.witness) : json(nullptr)}};
}

json to_json(const SolveResult& result) {
  const char* status = result.status == SolveStatus::kOptimal      ? "optimal"
                       : result.status == SolveStatus::kInfeasible ? "infeasible"
                                                                   : "above_cap";
  json j{{"status", status},
         {"optimum", result.optimum ? json(*result.optimum) : json("INFEASIBLE")},
         {"witness_code", result.witness_code},
         {"stats",
          {{"examined", result.stats.examined},
           {"pruned", result.stats.pruned},
           {"wall_seconds", result.stats.wall.count()}}}};
  if (result.status == SolveStatus::kAboveCap) j["optimum"] = nullptr;
  if (!result.all_optima.empty()) j["all_optima"] = result.all_optima;
  return j;
}

json to_json(const TheoremRow& row) {
  return {{"n", row.n},
          {"r", row.r},
          {"formula", optional_json(row.formula)},
          {"lower_bound", optional_json(row.lower_bound)},
          {"constructed", optional_json(row.constructed)},
          {"oracle", optional_json(row.oracle)},
          {"agree", row.formula ? json(row.agree) : json(nullptr)}};
}

json to_json(const sim::DetectionOutcome& outcome) {
  json rounds = json::array();
  for (std::size_t i = 0; i < outcome.history.rounds.size(); ++i) {
    rounds.push_back({{"round", i}, {"alarms", outcome.history.rounds[i]}});
  }
  return {{"mode", sim::to_string(outcome.mode)},
          {"fault", scenario_json(outcome.scenario)},
          {"located_at_round", outcome.located_at_round ? json(*outcome.located_at_round)
                                                        : json("NOT_LOCATED")},
          {"history", std::move(rounds)}};
}

json to_json(const ExtremalInstance& inst) {
  json layers = json::array();
  for (const auto& layer : inst.layers) {
    json l = json::array();
    for (const auto& lv : layer) {
      std::vector<unsigned> subset;
      for (unsigned c = 0; c < inst.k; ++c) {
        if ((lv.subset >> c) & 1U) subset.push_back(c + 1);
      }
      l.push_back({{"vertex", lv.vertex}, {"subset", subset}});
    }
    layers.push_back(std::move(l));
  }
  return {{"r", inst.r},
          {"k", inst.k},
          {"order", inst.graph.order()},
          {"code", inst.code},
          {"layers", std::move(layers)},
          {"edge_list", serialize_graph(inst.graph)}};
}

}  // namespace idcode
