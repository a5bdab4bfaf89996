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

// Python bindings. Structured values cross the boundary as JSON text in the same schemas the
// CLI reads and writes; the package's __init__ converts to and from dicts.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steerlab/belllike.hpp"
#include "steerlab/error.hpp"
#include "steerlab/io.hpp"
#include "steerlab/lhs_lp.hpp"
#include "steerlab/steering.hpp"
#include "steerlab/sweep.hpp"

namespace py = pybind11;
using namespace steerlab;

namespace {

using Rows = std::vector<std::vector<Complex>>;

Rows to_rows(const ComplexMatrix &m) {
    Rows out(m.rows(), std::vector<Complex>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out[r][c] = m(r, c);
        }
    }
    return out;
}

ComplexMatrix from_rows(const Rows &rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    std::vector<Complex> entries;
    for (const auto &row : rows) {
        if (row.size() != c) {
            throw ArgumentError("matrix rows must have equal length");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(r, c, std::move(entries));
}

Tolerances tolerances(std::optional<double> tolerance) {
    Tolerances tol;
    if (tolerance) {
        if (!(*tolerance > 0)) {
            throw ArgumentError("tolerance must be positive");
        }
        tol.purity = *tolerance;
        tol.phase_equality = *tolerance;
    }
    return tol;
}

struct Inputs {
    AnyState state;
    SteeringProtocol protocol;
};

Inputs load(const std::string &state_json, const std::string &protocol_json) {
    AnyState state = load_state(parse_json(state_json));
    std::size_t n = std::visit([](const auto &s) { return s.n_qubits(); }, state);
    return {std::move(state), load_protocol(parse_json(protocol_json), n)};
}

std::string run_certify(const AnyState &state, const SteeringProtocol &protocol, bool lp, const Tolerances &tol) {
    ParadoxReport report = certify(state, protocol, tol);
    if (lp) {
        report.lp = lp_cross_check(state, protocol, tol).summary;
    }
    return report_to_json(report).dump();
}

}  // namespace

PYBIND11_MODULE(_steerlab, m) {
    m.doc() = "Two-setting EPR steering paradox certifier (native core)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<UnsupportedSettingError>(m, "UnsupportedSettingError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
    py::register_exception<SolverLimitError>(m, "SolverLimitError", PyExc_RuntimeError);

    m.def(
        "certify_json",
        [](const std::string &state_json, const std::string &protocol_json, bool lp, std::optional<double> tolerance) {
            Inputs in = load(state_json, protocol_json);
            return run_certify(in.state, in.protocol, lp, tolerances(tolerance));
        },
        py::arg("state_json"), py::arg("protocol_json"), py::arg("lp") = false, py::arg("tolerance") = py::none());

    m.def(
        "demo_json",
        [](const std::string &name, double theta, bool lp) {
            if (name == "two-qubit") {
                return run_certify(two_qubit_theta_state(theta),
                                   SteeringProtocol(2, 1, tensor_setting("z"), tensor_setting("x")), lp, {});
            }
            if (name == "lc4") {
                return run_certify(lc4_mixed(theta), SteeringProtocol(4, 2, tensor_setting("zz"), tensor_setting("yx")),
                                   lp, {});
            }
            if (name == "product") {
                return run_certify(EnsembleState(2, {{1.0, StateVector::basis(4, 0)}}),
                                   SteeringProtocol(2, 1, tensor_setting("z"), tensor_setting("x")), lp, {});
            }
            throw ArgumentError("unknown demo '" + name + "'");
        },
        py::arg("name"), py::arg("theta") = 0.7853981633974483, py::arg("lp") = false);

    m.def(
        "conditional_state_list",
        [](const std::string &state_json, const std::string &protocol_json, int which) {
            Inputs in = load(state_json, protocol_json);
            auto set = conditional_states(density_of(in.state), in.protocol, which);
            std::vector<std::tuple<std::string, double, Rows>> out;
            for (const auto &e : set.entries) {
                out.emplace_back(e.outcome, e.probability, to_rows(e.op));
            }
            return out;
        },
        py::arg("state_json"), py::arg("protocol_json"), py::arg("which"));

    m.def(
        "lhs_json",
        [](const std::string &state_json, const std::string &protocol_json) {
            Inputs in = load(state_json, protocol_json);
            LpCheck lp = lp_cross_check(in.state, in.protocol);
            Json out = lp_to_json(lp.problem, &lp.result);
            out["relative_to_candidates"] = lp.summary.relative_to_candidates;
            return out.dump();
        },
        py::arg("state_json"), py::arg("protocol_json"));

    m.def(
        "sweep_json",
        [](std::size_t n_qubits, std::size_t alice_qubits, std::size_t rank, std::size_t count, std::uint64_t seed,
           std::optional<std::pair<std::string, std::string>> axes) {
            SweepConfig cfg;
            cfg.n_qubits = n_qubits;
            cfg.alice_qubits = alice_qubits;
            cfg.rank = rank;
            cfg.count = count;
            cfg.seed = seed;
            if (axes) {
                cfg.settings.emplace(tensor_setting(axes->first), tensor_setting(axes->second));
            }
            return sweep_to_json(cfg, run_sweep(cfg)).dump();
        },
        py::arg("n_qubits"), py::arg("alice_qubits"), py::arg("rank"), py::arg("count"), py::arg("seed") = 0,
        py::arg("axes") = py::none());

    m.def(
        "max_rank_family_json",
        [](std::size_t n_qubits, std::size_t alice_qubits, std::uint64_t seed) {
            return save_state(max_rank_family(n_qubits, alice_qubits, seed)).dump();
        },
        py::arg("n_qubits"), py::arg("alice_qubits"), py::arg("seed"));

    m.def(
        "transformation_matrix",
        [](std::size_t alice_qubits, double beta_1, double beta_2, const std::string &family) {
            auto basis = [&](double beta) {
                return family == "bell" ? BellLikeBasis::bell(alice_qubits, beta)
                                        : BellLikeBasis::computational(alice_qubits, beta);
            };
            return to_rows(transformation_matrix(bell_like_setting(basis(beta_1)), bell_like_setting(basis(beta_2))));
        },
        py::arg("alice_qubits"), py::arg("beta_1"), py::arg("beta_2"), py::arg("family") = "computational");

    m.def(
        "partial_trace",
        [](const Rows &rho, std::size_t n_qubits, const std::vector<std::size_t> &traced) {
            return to_rows(partial_trace(from_rows(rho), n_qubits, traced));
        },
        py::arg("rho"), py::arg("n_qubits"), py::arg("traced"));

    m.def(
        "purity", [](const Rows &rho) { return purity(from_rows(rho)); }, py::arg("rho"));

    m.def(
        "hermitian_eigvals",
        [](const Rows &a) { return hermitian_eig(from_rows(a)).values; }, py::arg("a"));
}
