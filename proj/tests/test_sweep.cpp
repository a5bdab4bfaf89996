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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "steerlab/error.hpp"
#include "steerlab/sweep.hpp"

using namespace steerlab;

namespace {

/// Smallest conditional-state purity across both settings, computed without the library pipeline.
double min_conditional_purity(const EnsembleState &state, const SteeringProtocol &p) {
    oracle::Mat rho = oracle::from(density_of(state).matrix());
    double lowest = 1;
    for (int k = 1; k <= 2; k++) {
        for (const auto &o : p.setting(k).outcomes) {
            auto cond = oracle::conditional(rho, oracle::from(o.projector), p.n_qubits(), p.alice_qubits());
            if (std::real(oracle::trace(cond)) > 1e-10) {
                lowest = std::min(lowest, oracle::purity(cond));
            }
        }
    }
    return lowest;
}

std::pair<MeasurementSetting, MeasurementSetting> zx() {
    return {tensor_setting("z"), tensor_setting("x")};
}

}  // namespace

TEST(Sweep, TwoQubitRankTwoNeverParadox) {
    SweepConfig cfg;
    cfg.rank = 2;
    cfg.count = 200;
    cfg.seed = 2024;
    auto s = run_sweep(cfg);
    EXPECT_EQ(s.paradox, 0u);
    EXPECT_EQ(s.no_paradox_purity + s.no_paradox_cross_duplicate, 200u);
    ASSERT_EQ(s.verdicts.size(), 200u);
    for (std::size_t i = 0; i < 200; i++) {
        // Every sample has some mixed conditional state.
        double low = min_conditional_purity(random_mixed(2, 2, cfg.seed + i), random_rank1_protocol(2, 1, cfg.seed + i));
        EXPECT_LT(low, 1 - 1e-6) << i;
        EXPECT_EQ(s.verdicts[i], Verdict::NoParadoxPurity) << i;
    }
}

TEST(Sweep, PureTwoQubitWithFixedAxesAlwaysParadox) {
    SweepConfig cfg;
    cfg.rank = 1;
    cfg.count = 200;
    cfg.seed = 7;
    cfg.settings = zx();
    EXPECT_EQ(run_sweep(cfg).paradox, 200u);
}

TEST(Sweep, FourQubitUnstructuredRankTwoNeverParadox) {
    SweepConfig cfg;
    cfg.n_qubits = 4;
    cfg.alice_qubits = 2;
    cfg.rank = 2;
    cfg.count = 50;
    cfg.seed = 11;
    EXPECT_EQ(run_sweep(cfg).paradox, 0u);
}

TEST(Sweep, SameSeedSameVerdicts) {
    SweepConfig cfg;
    cfg.rank = 1;
    cfg.count = 40;
    cfg.seed = 123;
    auto a = run_sweep(cfg);
    auto b = run_sweep(cfg);
    EXPECT_EQ(a.verdicts, b.verdicts);
    cfg.seed = 124;
    cfg.count = 39;
    auto shifted = run_sweep(cfg);
    // Sample i uses seed + i, so shifting the seed by one shifts the stream.
    for (std::size_t i = 0; i < 39; i++) {
        EXPECT_EQ(shifted.verdicts[i], a.verdicts[i + 1]);
    }
}

TEST(Sweep, RandomProtocolsAreValidAndDistinct) {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        auto p = random_rank1_protocol(3, 2, seed);
        EXPECT_LT(completeness_check(p.setting(1)), 1e-10);
        EXPECT_LT(completeness_check(p.setting(2)), 1e-10);
        EXPECT_FALSE(same_projector_set(p.setting(1), p.setting(2)));
    }
}

TEST(Sweep, BadConfigurations) {
    SweepConfig cfg;
    cfg.count = 0;
    EXPECT_THROW(run_sweep(cfg), ArgumentError);
    cfg.count = 1;
    cfg.alice_qubits = 2;
    EXPECT_THROW(run_sweep(cfg), ArgumentError);
}
