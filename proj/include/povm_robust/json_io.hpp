#pragma once

#include <string>

#include <json.hpp>

#include "povm_robust/asymmetry.hpp"
#include "povm_robust/discrimination.hpp"
#include "povm_robust/measurement.hpp"
#include "povm_robust/rom.hpp"
#include "povm_robust/simulability.hpp"
#include "povm_robust/single_shot_info.hpp"

namespace povm::io {

using json = nlohmann::json;

/// Tolerances applied when validating objects read from files.
struct ReadTolerances {
  double completeness = tol::kCompleteness;
  double psd = tol::kPsd;
  double state = tol::kStateTrace;
  double distribution = tol::kDistribution;
};

// Complex scalars are [re, im]; matrices are row-major arrays of rows.
json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

// {"dimension": d, "elements": [matrix, ...]}
json to_json(const Povm& m);
Povm povm_from_json(const json& j, const ReadTolerances& tol = {});

// {"rows": o_in, "cols": o_out, "p": [[...]]}, p indexed [a][b]
json to_json(const StochasticMap& map);
StochasticMap map_from_json(const json& j, const ReadTolerances& tol = {});

// {"dimension": d, "priors": [...], "states": [matrix, ...]}
json to_json(const Ensemble& e);
Ensemble ensemble_from_json(const json& j, const ReadTolerances& tol = {});

// {"p": [[...]]} indexed [x][g]
json to_json(const JointDistribution& p);
JointDistribution joint_from_json(const json& j, const ReadTolerances& tol = {});

// {"dimension": d, "unitaries": [matrix, ...]}
json to_json(const GroupRepresentation& g);
GroupRepresentation group_from_json(const json& j);

// {"dimension": d, "state": matrix}
json state_to_json(const ComplexMatrix& rho);
ComplexMatrix state_from_json(const json& j, const ReadTolerances& tol = {});

json to_json(const RobustnessReport& r);
RobustnessReport robustness_report_from_json(const json& j);

json to_json(const SimulabilityResult& r);
SimulabilityResult simulability_from_json(const json& j);

json to_json(const AsymmetryReport& r);
AsymmetryReport asymmetry_report_from_json(const json& j);

/// Deterministic text form: keys in alphabetical order, reals with 15
/// significant digits (always carrying a decimal point or exponent).
std::string canonical_dump(const json& j);

/// Throws ParseError naming the path on I/O or syntax failure.
json read_json_file(const std::string& path);

}  // namespace povm::io
