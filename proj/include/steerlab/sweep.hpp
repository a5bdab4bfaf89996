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

#ifndef STEERLAB_SWEEP_HPP
#define STEERLAB_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "steerlab/config.hpp"
#include "steerlab/measurements.hpp"
#include "steerlab/steering.hpp"

namespace steerlab {

/// Two settings, each measuring in an independent Haar-random orthonormal basis of 2^M.
SteeringProtocol random_rank1_protocol(std::size_t n_qubits, std::size_t alice_qubits, std::uint64_t seed);

struct SweepConfig {
    std::size_t n_qubits = 2;
    std::size_t alice_qubits = 1;
    std::size_t rank = 1;
    std::size_t count = 100;
    std::uint64_t seed = 0;
    /// Fixed settings for every sample; random rank-1 settings per sample when empty.
    std::optional<std::pair<MeasurementSetting, MeasurementSetting>> settings;
    Tolerances tol;
};

struct SweepSummary {
    std::size_t paradox = 0;
    std::size_t no_paradox_purity = 0;
    std::size_t no_paradox_cross_duplicate = 0;
    /// Verdict of sample i, which used seed + i.
    std::vector<Verdict> verdicts;
};

/// Throws ArgumentError when count is 0 or the dimensions are inconsistent.
SweepSummary run_sweep(const SweepConfig &config);

}  // namespace steerlab

#endif
