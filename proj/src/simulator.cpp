#include "idcode/simulator.hpp"

#include <algorithm>

namespace idcode::sim {

namespace {

AlarmHistory history_of(const DistanceMatrix& dm, std::span<const Vertex> code, const Scenario& sc,
                        Radius r) {
  AlarmHistory h;
  for (Radius i = 0; i <= r; ++i) h.rounds.push_back(alarm_set(dm, code, sc, i));
  return h;
}

std::vector<Scenario> opponents_of(const Scenario& sc, std::size_t n, Opponents which) {
  std::vector<Scenario> out;
  for (Vertex v = 0; v < n; ++v) {
    if (sc.fault != v) out.push_back(Scenario::at(v));
  }
  if (which == Opponents::kFaultsAndNoFault && sc.fault) out.push_back(Scenario::none());
  return out;
}

std::optional<Radius> locate(const AlarmHistory& own, const std::vector<const AlarmHistory*>& others,
                             Mode mode) {
  const auto rounds = static_cast<Radius>(own.rounds.size());
  std::vector<bool> told_apart(others.size(), false);
  for (Radius i = 0; i < rounds; ++i) {
    bool all = true;
    for (std::size_t o = 0; o < others.size(); ++o) {
      const bool differs = others[o]->rounds[i] != own.rounds[i];
      if (mode == Mode::kWithMemory) {
        told_apart[o] = told_apart[o] || differs;
        all = all && told_apart[o];
      } else {
        all = all && differs;
      }
    }
    if (all) return i;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(Mode mode) {
  return mode == Mode::kMemoryless ? "memoryless" : "with-memory";
}

Code alarm_set(const DistanceMatrix& dm, std::span<const Vertex> code, const Scenario& sc,
               Radius round) {
  Code alarms;
  if (!sc.fault) return alarms;
  if (*sc.fault >= dm.order()) throw std::out_of_range("fault vertex out of range");
  for (Vertex c : code) {
    const auto d = dm.at(c, *sc.fault);
    if (d != DistanceMatrix::kInfinite && d <= round) alarms.push_back(c);
  }
  std::sort(alarms.begin(), alarms.end());
  return alarms;
}

DetectionOutcome run_detection(const DistanceMatrix& dm, std::span<const Vertex> code, Radius r,
                               const Scenario& sc, Mode mode, Opponents opponents) {
  (void)VertexSet::from_code(dm.order(), code);
  DetectionOutcome out;
  out.mode = mode;
  out.scenario = sc;
  out.history = history_of(dm, code, sc, r);
  std::vector<AlarmHistory> histories;
  for (const auto& o : opponents_of(sc, dm.order(), opponents)) {
    histories.push_back(history_of(dm, code, o, r));
  }
  std::vector<const AlarmHistory*> others;
  for (const auto& h : histories) others.push_back(&h);
  out.located_at_round = locate(out.history, others, mode);
  return out;
}

DetectionOutcome run_detection(const Graph& g, std::span<const Vertex> code, Radius r,
                               const Scenario& sc, Mode mode, Opponents opponents) {
  return run_detection(DistanceMatrix(g), code, r, sc, mode, opponents);
}

UniversalResult detection_universal(const DistanceMatrix& dm, std::span<const Vertex> code, Radius r,
                                    Mode mode, Opponents opponents) {
  (void)VertexSet::from_code(dm.order(), code);
  const std::size_t n = dm.order();
  std::vector<AlarmHistory> histories;
  for (Vertex v = 0; v < n; ++v) histories.push_back(history_of(dm, code, Scenario::at(v), r));
  const AlarmHistory silent = history_of(dm, code, Scenario::none(), r);

  std::vector<const AlarmHistory*> others;
  for (Vertex v = 0; v < n; ++v) {
    others.clear();
    for (Vertex w = 0; w < n; ++w) {
      if (w != v) others.push_back(&histories[w]);
    }
    if (opponents == Opponents::kFaultsAndNoFault) others.push_back(&silent);
    if (!locate(histories[v], others, mode)) return {false, Scenario::at(v)};
  }
  return {true, std::nullopt};
}

UniversalResult detection_universal(const Graph& g, std::span<const Vertex> code, Radius r, Mode mode,
                                    Opponents opponents) {
  return detection_universal(DistanceMatrix(g), code, r, mode, opponents);
}

}  // namespace idcode::sim
