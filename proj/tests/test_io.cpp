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

#include "steerlab/belllike.hpp"
#include "steerlab/error.hpp"
#include "steerlab/io.hpp"
#include "steerlab/lhs_lp.hpp"
#include "steerlab/sweep.hpp"

using namespace steerlab;

namespace {

constexpr double kPi = std::numbers::pi;

std::string parse_path(const std::string &text) {
    try {
        load_state(parse_json(text));
    } catch (const ParseError &e) {
        return e.path;
    }
    return "<no error>";
}

SteeringProtocol zx(std::size_t n) {
    return SteeringProtocol(n, 1, tensor_setting("z"), tensor_setting("x"));
}

}  // namespace

TEST(StateIo, EnsembleRoundTripIsExact) {
    auto original = random_mixed(3, 3, 5);
    Json doc = save_state(original);
    auto back = std::get<EnsembleState>(load_state(parse_json(doc.dump())));
    ASSERT_EQ(back.terms().size(), original.terms().size());
    for (std::size_t k = 0; k < back.terms().size(); k++) {
        EXPECT_EQ(back.terms()[k].weight, original.terms()[k].weight);
        for (std::size_t i = 0; i < back.dim(); i++) {
            EXPECT_EQ(back.terms()[k].vector[i], original.terms()[k].vector[i]);
        }
    }
    EXPECT_EQ(save_state(back).dump(), doc.dump());
}

TEST(StateIo, DensityRoundTripIsExact) {
    AnyState rho = density_of(random_mixed(2, 2, 8));
    Json doc = save_state(rho);
    auto back = std::get<DensityMatrix>(load_state(parse_json(doc.dump())));
    auto got = back.matrix().entries();
    auto want = std::get<DensityMatrix>(rho).matrix().entries();
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); i++) {
        EXPECT_EQ(got[i], want[i]);
    }
}

TEST(StateIo, MaximallyMixedQubit) {
    auto st = load_state(parse_json(R"({"n_qubits":1,"state":{"type":"density","matrix":[[0.5,0],[0,0.5]]}})"));
    EXPECT_NEAR(purity(density_of(st).matrix()), 0.5, 1e-12);
}

TEST(StateIo, ErrorPaths) {
    EXPECT_EQ(parse_path("{"), "$");
    EXPECT_EQ(parse_path(R"({"state":{}})"), "$.n_qubits");
    EXPECT_EQ(parse_path(R"({"n_qubits":1})"), "$.state");
    EXPECT_EQ(parse_path(R"({"n_qubits":1,"state":{"type":"blob"}})"), "$.state.type");
    EXPECT_EQ(parse_path(R"({"n_qubits":1,"state":{"type":"ensemble","terms":[{"weight":0.5,"vector":[1,0]},{"weight":"x","vector":[0,1]}]}})"),
              "$.state.terms[1].weight");
    EXPECT_EQ(parse_path(R"({"n_qubits":1,"state":{"type":"ensemble","terms":[{"weight":1,"vector":[1,0,0]}]}})"),
              "$.state.terms[0].vector");
    EXPECT_EQ(parse_path(R"({"n_qubits":1,"state":{"type":"ensemble","terms":[{"weight":1,"vector":[[1,0,3],0]}]}})"),
              "$.state.terms[0].vector[0]");
    EXPECT_EQ(parse_path(R"({"n_qubits":1,"state":{"type":"density","matrix":[[1,0],[0]]}})"), "$.state.matrix[1]");
    EXPECT_EQ(parse_path(R"({"n_qubits":0,"state":{"type":"density","matrix":[[1]]}})"), "$.n_qubits");
    EXPECT_EQ(parse_path(R"({"n_qubits":-1,"state":{}})"), "$.n_qubits");
}

TEST(StateIo, WeightSumIsValidated) {
    try {
        load_state(parse_json(
            R"({"n_qubits":1,"state":{"type":"ensemble","terms":[{"weight":0.5,"vector":[1,0]},{"weight":0.4,"vector":[0,1]}]}})"));
        FAIL() << "expected a validation error";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("weights must sum to 1"), std::string::npos);
    }
}

TEST(ProtocolIo, RoundTripAllSettingKinds) {
    auto check = [](const SteeringProtocol &p) {
        Json doc = save_protocol(p);
        auto back = load_protocol(parse_json(doc.dump()), p.n_qubits());
        EXPECT_EQ(save_protocol(back).dump(), doc.dump());
        EXPECT_TRUE(same_projector_set(back.setting(1), p.setting(1)));
        EXPECT_TRUE(same_projector_set(back.setting(2), p.setting(2)));
    };
    check(zx(2));
    check(SteeringProtocol(4, 2, tensor_setting("zz"), tensor_setting("yx")));
    check(bell_like_protocol(3, 2, 0.2, 0.9));
    check(bell_like_protocol(3, 2, 0.2, 0.9, "bell"));
    check(random_rank1_protocol(3, 2, 4));
}

TEST(ProtocolIo, QubitCountMismatch) {
    Json doc = save_protocol(zx(2));
    try {
        load_protocol(doc, 3);
        FAIL() << "expected a parse error";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.path, "$.n_qubits");
    }
    doc.erase("n_qubits");
    EXPECT_NO_THROW(load_protocol(doc, 3));
    doc["alice_qubits"] = 3;
    EXPECT_THROW(load_protocol(doc, 3), ParseError);
}

TEST(ProtocolIo, BadSettingsNamePath) {
    Json doc = parse_json(R"({"alice_qubits":1,"setting_1":{"type":"tensor_pauli","axes":"q"},"setting_2":{"type":"tensor_pauli","axes":"x"}})");
    try {
        load_protocol(doc, 2);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.path, "$.setting_1.axes");
    }
    doc["setting_1"] = parse_json(R"({"type":"bell_like","beta":0.1,"phi_family":"other"})");
    EXPECT_THROW(load_protocol(doc, 2), ParseError);
}

TEST(ReportIo, JsonKeysAndValues) {
    auto report = certify(two_qubit_theta_state(kPi / 4), zx(2));
    Json j = report_to_json(report);
    for (const char *key : {"verdict", "quantum_trace_sum", "per_outcome", "excluded_outcomes", "purity_ok", "measurement_ok",
                            "forced_member_count", "cross_setting_duplicates", "within_setting_duplicates",
                            "ambiguous_duplicates", "decomposition_used", "ensemble_terms", "warnings", "lhs_trace_sum",
                            "lp_verdict"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["verdict"], "PARADOX");
    EXPECT_NEAR(j["quantum_trace_sum"].get<double>(), 2.0, 1e-9);
    EXPECT_NEAR(j["lhs_trace_sum"].get<double>(), 1.0, 1e-9);
    EXPECT_EQ(j["forced_member_count"], 4);
    EXPECT_TRUE(j["lp_verdict"].is_null());
}

TEST(ReportIo, PurityFailureLeavesMeasurementNull) {
    auto report = certify(density_of(random_mixed(2, 2, 3)), zx(2));
    Json j = report_to_json(report);
    EXPECT_EQ(j["verdict"], "NO_PARADOX_PURITY");
    EXPECT_TRUE(j["measurement_ok"].is_null());
    EXPECT_EQ(j["lhs_trace_sum"], "not forced");
    EXPECT_NE(report_to_text(report).find("lhs=not-forced"), std::string::npos);
}

TEST(ReportIo, TextSummaryLine) {
    auto text = report_to_text(certify(two_qubit_theta_state(kPi / 8), zx(2)));
    EXPECT_EQ(text.rfind("verdict: PARADOX\n", 0), 0u);
    EXPECT_NE(text.find("quantum=2.000000 lhs=1.000000"), std::string::npos);
}

TEST(ReportIo, LpVerdictStrings) {
    AnyState st = two_qubit_theta_state(kPi / 4);
    auto report = certify(st, zx(2));
    report.lp = lp_cross_check(st, zx(2)).summary;
    EXPECT_EQ(report_to_json(report)["lp_verdict"], "infeasible");
    report.lp->relative_to_candidates = true;
    EXPECT_EQ(report_to_json(report)["lp_verdict"], "infeasible (relative to candidates)");
}

TEST(LpDump, DeterministicAndShaped) {
    AnyState st = lc4_mixed(kPi / 6);
    SteeringProtocol p(4, 2, tensor_setting("zz"), tensor_setting("yx"));
    auto a = lp_cross_check(st, p);
    auto b = lp_cross_check(st, p);
    Json ja = lp_to_json(a.problem, &a.result);
    EXPECT_EQ(ja.dump(), lp_to_json(b.problem, &b.result).dump());
    EXPECT_EQ(ja["a"].size(), a.problem.rows);
    EXPECT_EQ(ja["a"][0].size(), a.problem.cols);
    EXPECT_EQ(ja["row_groups"].size(), a.problem.rows);
    EXPECT_FALSE(ja["result"]["feasible"].get<bool>());
}

TEST(LpDump, ModelForFeasibleProduct) {
    AnyState st = EnsembleState(2, {{1.0, StateVector::basis(4, 0)}});
    auto check = lp_cross_check(st, zx(2));
    ASSERT_TRUE(check.result.feasible);
    Json j = lp_to_json(check.problem, &check.result);
    ASSERT_TRUE(j["result"].contains("model"));
    EXPECT_EQ(model_to_json(*check.result.model).dump(), j["result"]["model"].dump());
}

TEST(SweepIo, CountsByVerdict) {
    SweepConfig cfg;
    cfg.count = 10;
    cfg.rank = 2;
    auto summary = run_sweep(cfg);
    Json j = sweep_to_json(cfg, summary);
    EXPECT_EQ(j.dump(), sweep_to_json(cfg, run_sweep(cfg)).dump());
    EXPECT_NE(sweep_to_text(cfg, summary).find("PARADOX"), std::string::npos);
}
