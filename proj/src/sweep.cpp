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

#include "steerlab/sweep.hpp"

#include <random>

#include "steerlab/error.hpp"
#include "steerlab/states.hpp"

namespace steerlab {

namespace {

// Decorrelates the protocol stream from the state stream that shares the same seed.
constexpr std::uint64_t kProtocolStream = 0x9E3779B97F4A7C15ULL;

MeasurementSetting random_setting(const std::string &label, std::size_t alice_qubits, std::mt19937_64 &rng) {
    return projector_setting(label, alice_qubits, haar_basis(std::size_t{1} << alice_qubits, rng));
}

}  // namespace

SteeringProtocol random_rank1_protocol(std::size_t n_qubits, std::size_t alice_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ kProtocolStream);
    auto first = random_setting("random_1", alice_qubits, rng);
    while (true) {
        auto second = random_setting("random_2", alice_qubits, rng);
        if (!same_projector_set(first, second)) {
            return SteeringProtocol(n_qubits, alice_qubits, std::move(first), std::move(second));
        }
    }
}

SweepSummary run_sweep(const SweepConfig &config) {
    if (config.count == 0) {
        throw ArgumentError("sweep count must be at least 1");
    }
    if (config.alice_qubits < 1 || config.alice_qubits >= config.n_qubits) {
        throw ArgumentError("need 1 <= alice_qubits < n_qubits");
    }
    std::optional<SteeringProtocol> fixed;
    if (config.settings) {
        fixed.emplace(config.n_qubits, config.alice_qubits, config.settings->first, config.settings->second);
    }
    SweepSummary out;
    out.verdicts.reserve(config.count);
    for (std::size_t i = 0; i < config.count; i++) {
        std::uint64_t seed = config.seed + i;
        AnyState state = random_mixed(config.n_qubits, config.rank, seed);
        Verdict v = fixed ? certify(state, *fixed, config.tol).verdict
                          : certify(state, random_rank1_protocol(config.n_qubits, config.alice_qubits, seed), config.tol)
                                .verdict;
        switch (v) {
            case Verdict::Paradox:
                out.paradox++;
                break;
            case Verdict::NoParadoxPurity:
                out.no_paradox_purity++;
                break;
            case Verdict::NoParadoxCrossDuplicate:
                out.no_paradox_cross_duplicate++;
                break;
        }
        out.verdicts.push_back(v);
    }
    return out;
}

}  // namespace steerlab
