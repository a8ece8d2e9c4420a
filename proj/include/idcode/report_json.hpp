#pragma once

// Machine-readable forms of the report types. Field names follow the C++
// structs.

#include <json.hpp>

#include "idcode/extremal.hpp"
#include "idcode/semantics.hpp"
#include "idcode/simulator.hpp"
#include "idcode/solver.hpp"

namespace idcode {

nlohmann::json to_json(const FamilySpec& spec);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const RadiusCertificate& cert);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const SolveResult& result);
nlohmann::json to_json(const TheoremRow& row);
nlohmann::json to_json(const sim::DetectionOutcome& outcome);
nlohmann::json to_json(const ExtremalInstance& inst);

}  // namespace idcode
