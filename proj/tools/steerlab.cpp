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

// steerlab: command-line front end.
//
//   steerlab demo two-qubit|lc4|product [--theta T] [--lp]
//   steerlab check --state S.json --protocol P.json [--lp] [--dump-lp OUT.json]
//   steerlab sweep --n-qubits N --alice-qubits M --rank R --count C --seed K [--protocol z,x]
//   steerlab lhs --state S.json --protocol P.json [--dump-lp OUT.json]
//
// Global flags: --tolerance FLOAT, --format json|text.
// Exit codes: 0 ran (any verdict), 2 input or usage error, 3 solver limit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "steerlab/error.hpp"
#include "steerlab/io.hpp"
#include "steerlab/lhs_lp.hpp"
#include "steerlab/steering.hpp"
#include "steerlab/sweep.hpp"

namespace {

using namespace steerlab;

constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;

struct InputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputFailure("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_json(ss.str());
    } catch (const ParseError &e) {
        throw InputFailure(path + ": " + e.what());
    }
}

void write_json_file(const std::string &path, const Json &doc) {
    std::ofstream out(path);
    if (!out) {
        throw InputFailure("cannot write '" + path + "'");
    }
    out << doc.dump(2) << "\n";
}

struct Loaded {
    AnyState state;
    SteeringProtocol protocol;
};

Loaded load_inputs(const std::string &state_path, const std::string &protocol_path) {
    Json sdoc = read_json_file(state_path);
    Json pdoc = read_json_file(protocol_path);
    AnyState state = [&] {
        try {
            return load_state(sdoc);
        } catch (const std::invalid_argument &e) {
            throw InputFailure(state_path + ": " + e.what());
        }
    }();
    std::size_t n = std::visit([](const auto &s) { return s.n_qubits(); }, state);
    try {
        return {std::move(state), load_protocol(pdoc, n)};
    } catch (const std::invalid_argument &e) {
        throw InputFailure(protocol_path + ": " + e.what());
    }
}

void emit_report(ParadoxReport report, const std::string &format) {
    if (format == "json") {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << report_to_text(report);
    }
}

void attach_lp(ParadoxReport &report, const AnyState &state, const SteeringProtocol &protocol, const Tolerances &tol,
               const std::string &dump_path) {
    LpCheck lp = lp_cross_check(state, protocol, tol);
    report.lp = lp.summary;
    if (!dump_path.empty()) {
        write_json_file(dump_path, lp_to_json(lp.problem, &lp.result));
    }
}

std::pair<MeasurementSetting, MeasurementSetting> parse_axes_pair(const std::string &spec) {
    auto comma = spec.find(',');
    if (comma == std::string::npos) {
        throw InputFailure("--protocol expects AXES1,AXES2 (e.g. z,x) or a protocol JSON file");
    }
    try {
        return {tensor_setting(spec.substr(0, comma)), tensor_setting(spec.substr(comma + 1))};
    } catch (const std::invalid_argument &e) {
        throw InputFailure(std::string("--protocol: ") + e.what());
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"steerlab: two-setting EPR steering paradox certifier"};
    app.require_subcommand(1);
    app.fallthrough();

    double tolerance = 0;
    std::string format = "text";
    app.add_option("--tolerance", tolerance, "Override the purity and phase-equality tolerances")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto *demo = app.add_subcommand("demo", "Run a built-in example");
    std::string demo_name;
    double theta = std::numbers::pi / 4;
    bool demo_lp = false;
    demo->add_option("name", demo_name, "two-qubit | lc4 | product")
        ->required()
        ->check(CLI::IsMember({"two-qubit", "lc4", "product"}));
    demo->add_option("--theta", theta, "Mixing angle in radians");
    demo->add_flag("--lp", demo_lp, "Add the LHS linear-program cross-check");

    auto *check = app.add_subcommand("check", "Certify a state/protocol pair from JSON files");
    std::string state_path, protocol_path, dump_path;
    bool check_lp = false;
    check->add_option("--state", state_path, "State JSON")->required();
    check->add_option("--protocol", protocol_path, "Protocol JSON")->required();
    check->add_flag("--lp", check_lp, "Add the LHS linear-program cross-check");
    check->add_option("--dump-lp", dump_path, "Write the LP problem and solution as JSON");

    auto *sweep = app.add_subcommand("sweep", "Certify random states under random or fixed settings");
    SweepConfig sweep_cfg;
    sweep_cfg.rank = 2;
    sweep_cfg.count = 200;
    std::string sweep_protocol;
    sweep->add_option("--n-qubits", sweep_cfg.n_qubits)->check(CLI::Range(2, 12));
    sweep->add_option("--alice-qubits", sweep_cfg.alice_qubits)->check(CLI::Range(1, 11));
    sweep->add_option("--rank", sweep_cfg.rank)->check(CLI::PositiveNumber);
    sweep->add_option("--count", sweep_cfg.count)->check(CLI::PositiveNumber);
    sweep->add_option("--seed", sweep_cfg.seed);
    sweep->add_option("--protocol", sweep_protocol, "AXES1,AXES2 (e.g. z,x) or a protocol JSON file");

    auto *lhs = app.add_subcommand("lhs", "Run only the LHS linear-program oracle");
    std::string lhs_state, lhs_protocol, lhs_dump;
    lhs->add_option("--state", lhs_state, "State JSON")->required();
    lhs->add_option("--protocol", lhs_protocol, "Protocol JSON")->required();
    lhs->add_option("--dump-lp", lhs_dump, "Write the LP problem and solution as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    Tolerances tol;
    if (tolerance > 0) {
        tol.purity = tolerance;
        tol.phase_equality = tolerance;
    }

    try {
        if (*demo) {
            AnyState state = EnsembleState(2, {{1.0, StateVector::basis(4, 0)}});
            std::optional<SteeringProtocol> protocol;
            if (demo_name == "two-qubit") {
                state = two_qubit_theta_state(theta);
                protocol.emplace(2, 1, tensor_setting("z"), tensor_setting("x"));
            } else if (demo_name == "lc4") {
                state = lc4_mixed(theta);
                protocol.emplace(4, 2, tensor_setting("zz"), tensor_setting("yx"));
            } else {
                protocol.emplace(2, 1, tensor_setting("z"), tensor_setting("x"));
            }
            ParadoxReport report = certify(state, *protocol, tol);
            if (demo_lp) {
                attach_lp(report, state, *protocol, tol, "");
            }
            emit_report(std::move(report), format);
        } else if (*check) {
            Loaded in = load_inputs(state_path, protocol_path);
            ParadoxReport report = certify(in.state, in.protocol, tol);
            if (check_lp || !dump_path.empty()) {
                attach_lp(report, in.state, in.protocol, tol, dump_path);
            }
            emit_report(std::move(report), format);
        } else if (*sweep) {
            if (sweep_cfg.alice_qubits >= sweep_cfg.n_qubits) {
                throw InputFailure("--alice-qubits must be smaller than --n-qubits");
            }
            if (sweep_cfg.rank > (std::size_t{1} << sweep_cfg.n_qubits)) {
                throw InputFailure("--rank exceeds 2^n_qubits");
            }
            if (!sweep_protocol.empty()) {
                if (std::filesystem::exists(sweep_protocol)) {
                    Json doc = read_json_file(sweep_protocol);
                    SteeringProtocol p = [&] {
                        try {
                            return load_protocol(doc, sweep_cfg.n_qubits);
                        } catch (const std::invalid_argument &e) {
                            throw InputFailure(sweep_protocol + ": " + e.what());
                        }
                    }();
                    sweep_cfg.settings.emplace(p.setting(1), p.setting(2));
                } else {
                    sweep_cfg.settings = parse_axes_pair(sweep_protocol);
                }
            }
            sweep_cfg.tol = tol;
            SweepSummary summary = run_sweep(sweep_cfg);
            if (format == "json") {
                std::cout << sweep_to_json(sweep_cfg, summary).dump(2) << "\n";
            } else {
                std::cout << sweep_to_text(sweep_cfg, summary);
            }
        } else if (*lhs) {
            Loaded in = load_inputs(lhs_state, lhs_protocol);
            LpCheck lp = lp_cross_check(in.state, in.protocol, tol);
            DensityMatrix rho = density_of(in.state);
            auto set_1 = conditional_states(rho, in.protocol, 1);
            auto set_2 = conditional_states(rho, in.protocol, 2);
            if (!lhs_dump.empty()) {
                write_json_file(lhs_dump, lp_to_json(lp.problem, &lp.result));
            }
            std::string verdict = lp.result.feasible ? "feasible"
                                  : lp.summary.relative_to_candidates ? "infeasible (relative to candidates)"
                                                                      : "infeasible";
            if (format == "json") {
                Json out = {{"lp_verdict", verdict},
                            {"phase_one_objective", lp.result.phase_one_objective},
                            {"candidates", lp.summary.candidates},
                            {"iterations", lp.result.iterations},
                            {"relative_to_candidates", lp.summary.relative_to_candidates}};
                if (lp.result.model) {
                    out["model"] = model_to_json(*lp.result.model);
                    out["model_residual"] = verify_model(*lp.result.model, set_1, set_2);
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "lp: " << verdict << "\n";
                std::cout << "phase-one objective: " << lp.result.phase_one_objective << "\n";
                std::cout << "candidates: " << lp.summary.candidates << "\n";
                if (lp.result.model) {
                    std::cout << "model residual: " << verify_model(*lp.result.model, set_1, set_2) << "\n";
                }
            }
        }
    } catch (const SolverLimitError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const InputFailure &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error &e) {
        // Argument, validation, size, parse and precondition errors all derive from logic_error.
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
