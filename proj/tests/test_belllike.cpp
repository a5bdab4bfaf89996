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
#include "steerlab/belllike.hpp"
#include "steerlab/error.hpp"
#include "steerlab/steering.hpp"

using namespace steerlab;

namespace {

constexpr double kPi = std::numbers::pi;
const double kH = 1 / std::numbers::sqrt2;

/// (|+phi_q>|a> + |-phi_q>|b>)/sqrt(2) over the computational family on M = 2, Bob one qubit.
oracle::Vec on_slot(std::size_t q, const oracle::Vec &a, const oracle::Vec &b) {
    oracle::Vec plus(4), minus(4);
    plus[q] = 1;
    minus[3 - q] = 1;
    oracle::Vec v = oracle::kron(plus, a);
    oracle::Vec w = oracle::kron(minus, b);
    for (std::size_t i = 0; i < v.size(); i++) {
        v[i] = (v[i] + w[i]) * kH;
    }
    return v;
}

StateVector sv(const oracle::Vec &v) {
    return StateVector::normalize(v);
}

bool has_reason(const TwoTermResult &r, const std::string &reason) {
    for (const auto &v : r.violations) {
        if (v.reason == reason) {
            return true;
        }
    }
    return false;
}

const BellLikeBasis kFamily = BellLikeBasis::computational(2, 0);

}  // namespace

TEST(TwoTermExtract, DistinctSlotsSucceed) {
    EnsembleState ens(3, {{0.5, sv(on_slot(0, {1, 0}, {0, 1}))}, {0.5, sv(on_slot(1, {kH, kH}, {kH, -kH}))}});
    auto r = two_term_extract(ens, kFamily, 2);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.form->components[0].slot, 0u);
    EXPECT_EQ(r.form->components[1].slot, 1u);
    EXPECT_NEAR(std::norm(r.form->components[0].s_plus) + std::norm(r.form->components[0].s_minus), 1, 1e-10);
    EXPECT_TRUE(no_shared_component_check(*r.form));
}

TEST(TwoTermExtract, SpreadComponentIsMultiSlot) {
    auto a = on_slot(0, {1, 0}, {0, 1});
    auto b = on_slot(1, {kH, kH}, {kH, -kH});
    for (std::size_t i = 0; i < a.size(); i++) {
        a[i] += b[i];
    }
    auto r = two_term_extract(EnsembleState(3, {{1.0, sv(a)}}), kFamily, 2);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has_reason(r, "multi-slot support"));
}

TEST(TwoTermExtract, SharedSlotReported) {
    EnsembleState ens(3, {{0.5, sv(on_slot(0, {1, 0}, {0, 1}))}, {0.5, sv(on_slot(0, {kH, kH}, {kH, -kH}))}});
    auto r = two_term_extract(ens, kFamily, 2);
    EXPECT_FALSE(r.ok());
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].component, 1u);
    EXPECT_EQ(r.violations[0].reason, "shared slot");
}

TEST(TwoTermExtract, DegenerateComponents) {
    oracle::Vec single(8);
    single[0] = 1;
    EXPECT_TRUE(has_reason(two_term_extract(EnsembleState(3, {{1.0, sv(single)}}), kFamily, 2), "single-term support"));
    EXPECT_TRUE(has_reason(two_term_extract(EnsembleState(3, {{1.0, sv(on_slot(1, {1, 0}, {1, 0}))}}), kFamily, 2),
                           "identical collapses"));
}

TEST(TwoTermExtract, ClusterMixtureOnThetaGrid) {
    for (int k = 1; k < 12; k++) {
        auto r = two_term_extract(lc4_mixed(k * kPi / 24), kFamily, 2);
        ASSERT_TRUE(r.ok()) << k;
        EXPECT_EQ(r.form->components[0].slot, 0u);
        EXPECT_EQ(r.form->components[1].slot, 1u);
    }
}

TEST(NoSharedComponentCheck, PhaseProportionalComponentsFail) {
    auto r = two_term_extract(EnsembleState(3, {{1.0, sv(on_slot(0, {1, 0}, {0, 1}))}}), kFamily, 2);
    ASSERT_TRUE(r.ok());
    TwoTermForm form = *r.form;
    EXPECT_TRUE(no_shared_component_check(form));
    auto twin = form.components[0];
    Complex phase = std::polar(1.0, kPi / 3);
    twin.s_plus *= phase;
    twin.s_minus *= phase;
    form.components.push_back(twin);
    EXPECT_FALSE(no_shared_component_check(form));
}

TEST(NoSharedComponentCheck, ClusterPairPasses) {
    auto r = two_term_extract(lc4_mixed(0.7), kFamily, 2);
    ASSERT_TRUE(r.ok());
    auto a = r.form->component_vector(0);
    auto b = r.form->component_vector(1);
    EXPECT_NEAR(std::abs(inner(a.amplitudes(), b.amplitudes())), 0, 1e-15);
    EXPECT_TRUE(no_shared_component_check(*r.form));
}

TEST(MaxRankFamily, SingleAliceQubitIsPure) {
    auto f = max_rank_family(2, 1, 3);
    EXPECT_EQ(f.terms().size(), 1u);
    EXPECT_EQ(numerical_rank(density_of(f).matrix()), 1u);
}

TEST(MaxRankFamily, ClusterSizedFamilyHasRankTwoAndParadox) {
    auto f = max_rank_family(4, 2, 9);
    EXPECT_EQ(numerical_rank(density_of(f).matrix()), 2u);
    EXPECT_TRUE(two_term_extract(f, kFamily, 2).ok());
    EXPECT_EQ(certify(f, bell_like_protocol(4, 2, 0.3, 1.1)).verdict, Verdict::Paradox);
}

TEST(MaxRankFamily, ThreeQubitParadox) {
    auto f = max_rank_family(3, 2, 4);
    EXPECT_EQ(certify(f, bell_like_protocol(3, 2, 0.3, 1.1)).verdict, Verdict::Paradox);
}

TEST(MaxRankFamily, DeterministicPerSeed) {
    auto a = max_rank_family(3, 2, 77);
    auto b = max_rank_family(3, 2, 77);
    ASSERT_EQ(a.terms().size(), b.terms().size());
    for (std::size_t k = 0; k < a.terms().size(); k++) {
        EXPECT_EQ(a.terms()[k].weight, b.terms()[k].weight);
        for (std::size_t i = 0; i < a.dim(); i++) {
            EXPECT_EQ(a.terms()[k].vector[i], b.terms()[k].vector[i]);
        }
    }
}

TEST(MaxRankFamily, ArgumentErrors) {
    EXPECT_THROW(max_rank_family(2, 2, 0), ArgumentError);
    EXPECT_THROW(max_rank_family(2, 0, 0), ArgumentError);
}

TEST(SharedSlotComponent, ReportedAndVerdictFlips) {
    auto f = max_rank_family(3, 2, 12);
    auto g = with_shared_slot_component(f, 2, 99);
    EXPECT_EQ(g.terms().size(), f.terms().size() + 1);
    auto r = two_term_extract(g, kFamily, 2);
    EXPECT_TRUE(has_reason(r, "shared slot"));
    EXPECT_NE(certify(g, bell_like_protocol(3, 2, 0.3, 1.1)).verdict, Verdict::Paradox);
}

TEST(BellLikeProtocol, RejectsQuarterTurnAndUnknownFamily) {
    EXPECT_THROW(bell_like_protocol(3, 2, 0.4, 0.4 + kPi / 2), ValidationError);
    EXPECT_THROW(bell_like_protocol(3, 2, 0.4, 0.4 + kPi), ValidationError);
    EXPECT_THROW(bell_like_protocol(3, 2, 0.4, 0.9, "other"), ArgumentError);
}
