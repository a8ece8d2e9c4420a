#pragma once

// Fault location by rounds. At round i every code vertex tests its
// i-neighborhood and raises an alarm when the (single) faulty vertex lies
// inside it. A memoryless supervisor must locate the fault from the alarms
// of one round; a supervisor with memory may use all rounds seen so far.

#include <optional>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/semantics.hpp"

namespace idcode::sim {

struct Scenario {
  std::optional<Vertex> fault;  // nullopt: no faulty vertex

  static Scenario none() { return {}; }
  static Scenario at(Vertex v) { return {v}; }
  bool operator==(const Scenario&) const = default;
};

enum class Mode { kMemoryless, kWithMemory };

// Which alternatives a located fault must be told apart from.
enum class Opponents {
  kFaultsOnly,         // other single-fault scenarios (matches the code definitions)
  kFaultsAndNoFault,   // additionally the fault-free scenario
};

struct AlarmHistory {
  // rounds[i]: code vertices raising an alarm at round i, sorted.
  std::vector<Code> rounds;
};

struct DetectionOutcome {
  Mode mode = Mode::kMemoryless;
  Scenario scenario;
  std::optional<Radius> located_at_round;
  AlarmHistory history;
};

struct UniversalResult {
  bool located_all = false;
  std::optional<Scenario> first_failure;
};

// {c in C : d(c, fault) <= round}; empty for the fault-free scenario.
Code alarm_set(const DistanceMatrix& dm, std::span<const Vertex> code, const Scenario& sc,
               Radius round);

// Rounds 0..r always run; located_at_round is the first round after which
// the scenario is distinguishable from every opponent.
DetectionOutcome run_detection(const DistanceMatrix& dm, std::span<const Vertex> code, Radius r,
                               const Scenario& sc, Mode mode,
                               Opponents opponents = Opponents::kFaultsOnly);
DetectionOutcome run_detection(const Graph& g, std::span<const Vertex> code, Radius r,
                               const Scenario& sc, Mode mode,
                               Opponents opponents = Opponents::kFaultsOnly);

// Every single-fault scenario is located within r rounds. first_failure is
// the smallest fault vertex that is not.
UniversalResult detection_universal(const DistanceMatrix& dm, std::span<const Vertex> code, Radius r,
                                    Mode mode, Opponents opponents = Opponents::kFaultsOnly);
UniversalResult detection_universal(const Graph& g, std::span<const Vertex> code, Radius r, Mode mode,
                                    Opponents opponents = Opponents::kFaultsOnly);

std::string to_string(Mode mode);

}  // namespace idcode::sim
