// Copyright 2026 The steerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STEERLAB_IO_HPP
#define STEERLAB_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "steerlab/lhs_lp.hpp"
#include "steerlab/measurements.hpp"
#include "steerlab/states.hpp"
#include "steerlab/steering.hpp"
#include "steerlab/sweep.hpp"

namespace steerlab {

using Json = nlohmann::json;

/// Text to JSON; syntax errors become ParseError at "$".
Json parse_json(std::string_view text);

/// Schema errors throw ParseError with a JSON path such as "$.state.terms[1].weight";
/// invariant violations throw ValidationError.
AnyState load_state(const Json &doc);
Json save_state(const AnyState &state);

MeasurementSetting load_setting(const Json &doc, std::size_t alice_qubits, const std::string &path = "$",
                                const std::string &label = "setting");
Json save_setting(const MeasurementSetting &setting);

/// `n_qubits` comes from the state file. An explicit "n_qubits" field in the protocol document
/// must agree with it.
SteeringProtocol load_protocol(const Json &doc, std::size_t n_qubits);
Json save_protocol(const SteeringProtocol &protocol);

Json report_to_json(const ParadoxReport &report);
/// Human-readable summary; PARADOX reports carry the line "quantum=2.000000 lhs=1.000000".
std::string report_to_text(const ParadoxReport &report);

Json lp_to_json(const LpProblem &problem, const FeasibilityResult *result = nullptr);
Json model_to_json(const LhsModel &model);

Json sweep_to_json(const SweepConfig &config, const SweepSummary &summary);
std::string sweep_to_text(const SweepConfig &config, const SweepSummary &summary);

}  // namespace steerlab

#endif
