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

#include <numbers>

#include "oracles.hpp"
#include "steerlab/error.hpp"
#include "steerlab/lhs_lp.hpp"
#include "steerlab/sweep.hpp"

using namespace steerlab;

namespace {

constexpr double kPi = std::numbers::pi;
const double kH = 1 / std::numbers::sqrt2;

struct Sets {
    ConditionalStateSet first;
    ConditionalStateSet second;
};

Sets sets_of(const AnyState &state, const SteeringProtocol &p) {
    auto rho = density_of(state);
    return {conditional_states(rho, p, 1), conditional_states(rho, p, 2)};
}

SteeringProtocol zx() {
    return SteeringProtocol(2, 1, tensor_setting("z"), tensor_setting("x"));
}

SteeringProtocol zz_yx() {
    return SteeringProtocol(4, 2, tensor_setting("zz"), tensor_setting("yx"));
}

std::vector<oracle::Mat> ops_of(const Sets &s) {
    std::vector<oracle::Mat> out;
    for (const auto *set : {&s.first, &s.second}) {
        for (const auto &e : set->entries) {
            out.push_back(oracle::from(e.op));
        }
    }
    return out;
}

}  // namespace

TEST(CandidateEnsemble, TwoQubitHasFour) {
    auto s = sets_of(two_qubit_theta_state(kPi / 4), zx());
    EXPECT_EQ(candidate_ensemble(s.first, s.second).size(), 4u);
}

TEST(CandidateEnsemble, ClusterMixtureCountFromOracle) {
    auto s = sets_of(lc4_mixed(kPi / 4), zz_yx());
    std::size_t expected = oracle::distinct_pure_count(ops_of(s));
    EXPECT_EQ(expected, 4u);
    EXPECT_EQ(candidate_ensemble(s.first, s.second).size(), expected);
}

TEST(CandidateEnsemble, ProductStateCountFromOracle) {
    auto s = sets_of(EnsembleState(2, {{1.0, StateVector::basis(4, 0)}}), zx());
    std::size_t expected = oracle::distinct_pure_count(ops_of(s));
    EXPECT_EQ(expected, 1u);
    EXPECT_EQ(candidate_ensemble(s.first, s.second).size(), expected);
}

TEST(CandidateEnsemble, MixedStatesNeedGeneralMode) {
    EnsembleState sep(2, {{0.5, StateVector::basis(4, 0)}, {0.5, StateVector::basis(4, 3)}});
    auto s = sets_of(sep, zx());
    EXPECT_THROW(candidate_ensemble(s.first, s.second), PreconditionError);
    auto g = general_candidates(s.first, s.second);
    EXPECT_FALSE(g.complete);
    EXPECT_EQ(g.members.size(), 2u);
}

TEST(BuildLp, VariableAndRowCounts) {
    auto s = sets_of(two_qubit_theta_state(kPi / 4), zx());
    auto p = build_lp(s.first, s.second, candidate_ensemble(s.first, s.second));
    EXPECT_EQ(p.cols, 20u);
    EXPECT_EQ(p.rows, 2u * 4 * 4 + 2 * 4 + 1);
    for (double x : p.a) {
        EXPECT_TRUE(std::isfinite(x));
    }
}

TEST(BuildLp, EmptyCandidatesRejected) {
    auto s = sets_of(two_qubit_theta_state(kPi / 4), zx());
    EXPECT_THROW(build_lp(s.first, s.second, {}), ArgumentError);
}

TEST(BuildLp, ExplicitDeterministicAssignmentBreaksOnlyTheTraceCount) {
    // Member k reproduces exactly one conditional state: z outcome 0, z outcome 1, x outcome 0,
    // x outcome 1, with response 1 there and the member weight equal to that outcome's probability.
    auto s = sets_of(two_qubit_theta_state(kPi / 4), zx());
    auto cands = candidate_ensemble(s.first, s.second);
    ASSERT_EQ(cands.size(), 4u);
    auto relaxed = build_lp(s.first, s.second, cands, {.normalization = false});
    auto full = build_lp(s.first, s.second, cands);
    std::vector<double> x(full.cols, 0.0);
    const std::pair<int, std::size_t> owner[] = {{1, 0}, {1, 1}, {2, 0}, {2, 1}};
    for (std::size_t m = 0; m < 4; m++) {
        auto [k, a] = owner[m];
        x[full.w_index(m, k, a)] = 0.5;
        x[full.weight_index(m)] = 0.5;
    }
    auto r = residual_by_group(full, x);
    EXPECT_LT(r.assemblage, 1e-15);
    EXPECT_NEAR(r.normalization, 1.0, 1e-15);
    double total = 0;
    for (std::size_t m = 0; m < 4; m++) {
        total += x[full.weight_index(m)];
    }
    EXPECT_NEAR(total, 2.0, 1e-15);
    EXPECT_LT(residual_by_group(relaxed, x).assemblage, 1e-15);
    EXPECT_EQ(residual_by_group(relaxed, x).normalization, 0.0);
}

TEST(SolveFeasibility, TwoQubitInfeasible) {
    auto s = sets_of(two_qubit_theta_state(kPi / 4), zx());
    auto r = solve_feasibility(build_lp(s.first, s.second, candidate_ensemble(s.first, s.second)));
    EXPECT_FALSE(r.feasible);
    EXPECT_GT(r.phase_one_objective, 1e-9);
    EXPECT_FALSE(r.model.has_value());
}

TEST(SolveFeasibility, ProductStateFeasibleWithDeterministicZ) {
    auto s = sets_of(EnsembleState(2, {{1.0, StateVector::basis(4, 0)}}), zx());
    auto r = solve_feasibility(build_lp(s.first, s.second, candidate_ensemble(s.first, s.second)));
    ASSERT_TRUE(r.feasible);
    ASSERT_TRUE(r.model.has_value());
    EXPECT_NEAR(r.model->members[0].weight, 1, 1e-9);
    EXPECT_NEAR(r.model->responses[0][0][0], 1, 1e-9);
    EXPECT_NEAR(r.model->responses[1][0][0], 0.5, 1e-9);
    EXPECT_LE(verify_model(*r.model, s.first, s.second), 1e-8);
}

TEST(SolveFeasibility, ClusterMixtureInfeasible) {
    auto s = sets_of(lc4_mixed(kPi / 5), zz_yx());
    auto r = solve_feasibility(build_lp(s.first, s.second, candidate_ensemble(s.first, s.second)));
    EXPECT_FALSE(r.feasible);
    EXPECT_GT(r.phase_one_objective, 1e-9);
}

TEST(SolveFeasibility, IterationCap) {
    auto s = sets_of(lc4_mixed(kPi / 5), zz_yx());
    auto p = build_lp(s.first, s.second, candidate_ensemble(s.first, s.second));
    EXPECT_THROW(solve_feasibility(p, {}, 2), SolverLimitError);
}

TEST(VerifyModel, HandBuiltProductModel) {
    auto s = sets_of(EnsembleState(2, {{1.0, StateVector::basis(4, 0)}}), zx());
    LhsModel model;
    model.members.push_back({1.0, StateVector::basis(2, 0).projector()});
    model.responses[0] = {{1.0}, {0.0}};
    model.responses[1] = {{0.5}, {0.5}};
    EXPECT_LE(verify_model(model, s.first, s.second), 1e-12);
    model.responses[1][1][0] = 0.0;
    EXPECT_GE(verify_model(model, s.first, s.second), 0.5);
}

TEST(VerifyModel, ShapeMismatchRejected) {
    auto s = sets_of(EnsembleState(2, {{1.0, StateVector::basis(4, 0)}}), zx());
    LhsModel model;
    model.members.push_back({1.0, StateVector::basis(2, 0).projector()});
    model.responses[0] = {{1.0}};
    model.responses[1] = {{0.5}, {0.5}};
    EXPECT_THROW(verify_model(model, s.first, s.second), ArgumentError);
}

TEST(LpCrossCheck, SeparableMixtureFeasibleInGeneralMode) {
    EnsembleState sep(2, {{0.5, StateVector::basis(4, 0)}, {0.5, StateVector::basis(4, 3)}});
    auto lp = lp_cross_check(sep, zx());
    EXPECT_TRUE(lp.summary.feasible);
    EXPECT_TRUE(lp.summary.relative_to_candidates);
    auto s = sets_of(sep, zx());
    EXPECT_LE(verify_model(*lp.result.model, s.first, s.second), 1e-8);
}

// Cross-setting duplicates plus pure conditional states do not by themselves guarantee an LHS
// model: here one x-type outcome repeats a z-type state, yet the remaining states still force
// more weight than the marginal allows.
TEST(LpCrossCheck, CrossDuplicateWithPurityCanStillBeInfeasible) {
    std::vector<Complex> amps(8);
    // (|00>|0> + |01>|1> + |10>|+> + |11>|->) / 2
    amps[0b000] = 0.5;
    amps[0b011] = 0.5;
    amps[0b100] = 0.5 * kH;
    amps[0b101] = 0.5 * kH;
    amps[0b110] = 0.5 * kH;
    amps[0b111] = -0.5 * kH;
    EnsembleState psi(3, {{1.0, StateVector::normalized(amps)}});
    std::vector<std::vector<Complex>> mixed_basis{{1, 0, 0, 0}, {0, kH, kH, 0}, {0, kH, -kH, 0}, {0, 0, 0, 1}};
    SteeringProtocol p(3, 2, tensor_setting("zz"), projector_setting("mixed", 2, mixed_basis));
    auto r = certify(psi, p);
    EXPECT_TRUE(r.purity.ok);
    EXPECT_EQ(r.verdict, Verdict::NoParadoxCrossDuplicate);
    auto lp = lp_cross_check(psi, p);
    EXPECT_FALSE(lp.summary.feasible);
    EXPECT_FALSE(lp.summary.relative_to_candidates);
}

// Large mixed-state instances (32 candidates, 544 columns). Verdicts were frozen from an
// independent interior-point solve of the dumped problems.
TEST(SolveFeasibility, LargeMixedInstanceInfeasible) {
    auto state = random_mixed(4, 3, 7138295056119618817ULL);
    auto check = lp_cross_check(state, random_rank1_protocol(4, 3, 4278509477612987832ULL));
    EXPECT_EQ(check.problem.cols, 544u);
    EXPECT_FALSE(check.result.feasible);
    EXPECT_GT(check.result.phase_one_objective, 1e-3);
}

TEST(SolveFeasibility, LargeMixedInstanceFeasibleAndVerified) {
    auto state = random_mixed(4, 2, 11959339420508629421ULL);
    SteeringProtocol p(4, 3, tensor_setting("yzx"), tensor_setting("xzx"));
    auto check = lp_cross_check(state, p);
    ASSERT_TRUE(check.result.feasible);
    auto rho = density_of(state);
    EXPECT_LE(verify_model(*check.result.model, conditional_states(rho, p, 1), conditional_states(rho, p, 2)), 1e-8);
}
