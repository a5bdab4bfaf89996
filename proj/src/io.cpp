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

#include "steerlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "steerlab/error.hpp"

namespace steerlab {

namespace {

const Json &field(const Json &obj, const char *key, const std::string &path) {
    if (!obj.is_object()) {
        throw ParseError(path, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(path + "." + key, "missing field");
    }
    return *it;
}

double number(const Json &j, const std::string &path) {
    if (!j.is_number()) {
        throw ParseError(path, "expected a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ParseError(path, "number must be finite");
    }
    return v;
}

std::size_t count(const Json &j, const std::string &path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ParseError(path, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

std::string text(const Json &j, const std::string &path) {
    if (!j.is_string()) {
        throw ParseError(path, "expected a string");
    }
    return j.get<std::string>();
}

const Json &array(const Json &j, const std::string &path) {
    if (!j.is_array()) {
        throw ParseError(path, "expected an array");
    }
    return j;
}

std::string at(const std::string &path, std::size_t k) {
    return path + "[" + std::to_string(k) + "]";
}

/// [re, im], or a bare real number.
Complex complex_of(const Json &j, const std::string &path) {
    if (j.is_number()) {
        return number(j, path);
    }
    if (!j.is_array() || j.size() != 2) {
        throw ParseError(path, "expected [re, im]");
    }
    return {number(j[0], at(path, 0)), number(j[1], at(path, 1))};
}

std::vector<Complex> vector_of(const Json &j, const std::string &path) {
    array(j, path);
    std::vector<Complex> out;
    out.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); k++) {
        out.push_back(complex_of(j[k], at(path, k)));
    }
    return out;
}

Json complex_json(Complex c) {
    return Json::array({c.real(), c.imag()});
}

Json vector_json(std::span<const Complex> v) {
    Json out = Json::array();
    for (Complex c : v) {
        out.push_back(complex_json(c));
    }
    return out;
}

Json matrix_json(const ComplexMatrix &m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); c++) {
            row.push_back(complex_json(m(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json ref_json(const OutcomeRef &ref) {
    return {{"setting", ref.setting}, {"outcome", ref.outcome}};
}

Json pairs_json(const std::vector<DuplicatePair> &pairs) {
    Json out = Json::array();
    for (const auto &p : pairs) {
        out.push_back({{"first", ref_json(p.first)}, {"second", ref_json(p.second)}});
    }
    return out;
}

std::string lp_verdict(const LpSummary &lp) {
    if (lp.feasible) {
        return "feasible";
    }
    return lp.relative_to_candidates ? "infeasible (relative to candidates)" : "infeasible";
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string ref_text(const OutcomeRef &r) {
    return std::to_string(r.setting) + ":" + r.outcome;
}

bool is_pauli_axes(const std::string &s) {
    return !s.empty() && s.find_first_not_of("xyz") == std::string::npos;
}

}  // namespace

Json parse_json(std::string_view text_in) {
    try {
        return Json::parse(text_in);
    } catch (const Json::parse_error &e) {
        throw ParseError("$", e.what());
    }
}

AnyState load_state(const Json &doc) {
    std::size_t n = count(field(doc, "n_qubits", "$"), "$.n_qubits");
    if (n < 1 || n > 62) {
        throw ParseError("$.n_qubits", "n_qubits must lie in [1, 62]");
    }
    const Json &st = field(doc, "state", "$");
    std::string type = text(field(st, "type", "$.state"), "$.state.type");
    if (type == "ensemble") {
        const std::string tp = "$.state.terms";
        const Json &terms = array(field(st, "terms", "$.state"), tp);
        std::vector<EnsembleTerm> out;
        for (std::size_t k = 0; k < terms.size(); k++) {
            std::string p = at(tp, k);
            double w = number(field(terms[k], "weight", p), p + ".weight");
            auto amps = vector_of(field(terms[k], "vector", p), p + ".vector");
            if (amps.size() != (std::size_t{1} << n)) {
                throw ParseError(p + ".vector", "expected 2^n_qubits = " + std::to_string(std::size_t{1} << n) +
                                                    " amplitudes, got " + std::to_string(amps.size()));
            }
            out.push_back({w, StateVector::normalized(std::move(amps))});
        }
        return EnsembleState(n, std::move(out));
    }
    if (type == "density") {
        const std::string mp = "$.state.matrix";
        const Json &rows = array(field(st, "matrix", "$.state"), mp);
        std::size_t d = rows.size();
        std::vector<Complex> entries;
        entries.reserve(d * d);
        for (std::size_t r = 0; r < d; r++) {
            auto row = vector_of(rows[r], at(mp, r));
            if (row.size() != d) {
                throw ParseError(at(mp, r), "density matrix must be square");
            }
            entries.insert(entries.end(), row.begin(), row.end());
        }
        return DensityMatrix(n, ComplexMatrix(d, d, std::move(entries)));
    }
    throw ParseError("$.state.type", "unknown state type '" + type + "'");
}

Json save_state(const AnyState &state) {
    if (const auto *ens = std::get_if<EnsembleState>(&state)) {
        Json terms = Json::array();
        for (const auto &t : ens->terms()) {
            terms.push_back({{"weight", t.weight}, {"vector", vector_json(t.vector.amplitudes())}});
        }
        return {{"n_qubits", ens->n_qubits()}, {"state", {{"type", "ensemble"}, {"terms", terms}}}};
    }
    const auto &dm = std::get<DensityMatrix>(state);
    return {{"n_qubits", dm.n_qubits()}, {"state", {{"type", "density"}, {"matrix", matrix_json(dm.matrix())}}}};
}

MeasurementSetting load_setting(const Json &doc, std::size_t alice_qubits, const std::string &path,
                                const std::string &label) {
    std::string type = text(field(doc, "type", path), path + ".type");
    MeasurementSetting s;
    if (type == "tensor_pauli") {
        std::string axes = text(field(doc, "axes", path), path + ".axes");
        if (!is_pauli_axes(axes)) {
            throw ParseError(path + ".axes", "axes must be letters from {x, y, z}");
        }
        if (axes.size() != alice_qubits) {
            throw ParseError(path + ".axes", "expected " + std::to_string(alice_qubits) + " axes, got " +
                                                 std::to_string(axes.size()));
        }
        s = tensor_setting(axes);
    } else if (type == "projectors") {
        const Json &vs = array(field(doc, "vectors", path), path + ".vectors");
        std::vector<std::vector<Complex>> vectors;
        for (std::size_t k = 0; k < vs.size(); k++) {
            vectors.push_back(vector_of(vs[k], at(path + ".vectors", k)));
            if (vectors.back().size() != (std::size_t{1} << alice_qubits)) {
                throw ParseError(at(path + ".vectors", k), "expected 2^alice_qubits amplitudes");
            }
        }
        s = projector_setting(label, alice_qubits, vectors);
    } else if (type == "bell_like") {
        double beta = number(field(doc, "beta", path), path + ".beta");
        std::string family = "computational";
        if (doc.contains("phi_family")) {
            family = text(doc["phi_family"], path + ".phi_family");
        }
        if (family == "computational") {
            s = bell_like_setting(BellLikeBasis::computational(alice_qubits, beta));
        } else if (family == "bell") {
            s = bell_like_setting(BellLikeBasis::bell(alice_qubits, beta));
        } else {
            throw ParseError(path + ".phi_family", "unknown family '" + family + "'");
        }
    } else {
        throw ParseError(path + ".type", "unknown measurement type '" + type + "'");
    }
    s.validate();
    return s;
}

Json save_setting(const MeasurementSetting &setting) {
    if (setting.bell_like) {
        return {{"type", "bell_like"}, {"beta", setting.bell_like->beta}, {"phi_family", setting.bell_like->family_name}};
    }
    if (is_pauli_axes(setting.label) && setting.label.size() == setting.m_qubits) {
        return {{"type", "tensor_pauli"}, {"axes", setting.label}};
    }
    Json vectors = Json::array();
    for (const auto &v : basis_vectors(setting)) {
        vectors.push_back(vector_json(v.amplitudes()));
    }
    return {{"type", "projectors"}, {"vectors", vectors}};
}

SteeringProtocol load_protocol(const Json &doc, std::size_t n_qubits) {
    std::size_t m = count(field(doc, "alice_qubits", "$"), "$.alice_qubits");
    if (doc.contains("n_qubits")) {
        std::size_t declared = count(doc["n_qubits"], "$.n_qubits");
        if (declared != n_qubits) {
            throw ParseError("$.n_qubits", "protocol declares " + std::to_string(declared) +
                                               " qubits but the state has " + std::to_string(n_qubits));
        }
    }
    if (m < 1 || m >= n_qubits) {
        throw ParseError("$.alice_qubits", "need 1 <= alice_qubits < n_qubits = " + std::to_string(n_qubits));
    }
    auto s1 = load_setting(field(doc, "setting_1", "$"), m, "$.setting_1", "setting_1");
    auto s2 = load_setting(field(doc, "setting_2", "$"), m, "$.setting_2", "setting_2");
    return SteeringProtocol(n_qubits, m, std::move(s1), std::move(s2));
}

Json save_protocol(const SteeringProtocol &protocol) {
    return {{"n_qubits", protocol.n_qubits()},
            {"alice_qubits", protocol.alice_qubits()},
            {"setting_1", save_setting(protocol.setting(1))},
            {"setting_2", save_setting(protocol.setting(2))}};
}

Json report_to_json(const ParadoxReport &report) {
    Json per = Json::array();
    for (const auto &o : report.purity.outcomes) {
        Json row = {{"setting", o.ref.setting}, {"outcome", o.ref.outcome}, {"probability", o.probability}};
        row["purity"] = o.purity ? Json(*o.purity) : Json(nullptr);
        per.push_back(std::move(row));
    }
    Json excluded = Json::array();
    for (const auto &r : report.purity.excluded) {
        excluded.push_back(ref_json(r));
    }
    bool checked = report.purity.ok;
    Json out = {
        {"verdict", std::string(to_string(report.verdict))},
        {"quantum_trace_sum", report.quantum_trace_sum},
        {"per_outcome", per},
        {"excluded_outcomes", excluded},
        {"purity_ok", report.purity.ok},
        {"cross_setting_duplicates", pairs_json(report.measurement.cross_setting)},
        {"within_setting_duplicates", pairs_json(report.measurement.within_setting)},
        {"ambiguous_duplicates", report.ambiguous_duplicates},
        {"decomposition_used", std::string(to_string(report.decomposition_used))},
        {"ensemble_terms", report.ensemble_terms},
        {"warnings", report.warnings},
    };
    out["measurement_ok"] = checked ? Json(report.measurement.ok) : Json(nullptr);
    out["forced_member_count"] = checked ? Json(report.distinct_states) : Json(nullptr);
    out["lhs_trace_sum"] = report.lhs_trace_sum ? Json(*report.lhs_trace_sum) : Json("not forced");
    if (report.lp) {
        out["lp_verdict"] = lp_verdict(*report.lp);
        out["lp"] = {{"phase_one_objective", report.lp->phase_one_objective},
                     {"candidates", report.lp->candidates},
                     {"iterations", report.lp->iterations},
                     {"relative_to_candidates", report.lp->relative_to_candidates}};
    } else {
        out["lp_verdict"] = nullptr;
    }
    return out;
}

std::string report_to_text(const ParadoxReport &report) {
    std::ostringstream os;
    os << "verdict: " << to_string(report.verdict) << "\n";
    os << "quantum=" << fixed6(report.quantum_trace_sum)
       << " lhs=" << (report.lhs_trace_sum ? fixed6(*report.lhs_trace_sum) : std::string("not-forced")) << "\n";
    os << "decomposition: " << to_string(report.decomposition_used) << " (" << report.ensemble_terms << " terms)\n";
    for (const auto &o : report.purity.outcomes) {
        os << "  setting " << o.ref.setting << " outcome " << o.ref.outcome << "  p=" << fixed6(o.probability);
        if (o.purity) {
            os << "  purity=" << fixed6(*o.purity);
        } else {
            os << "  excluded (zero probability)";
        }
        os << "\n";
    }
    auto pairs = [&](const char *name, const std::vector<DuplicatePair> &list) {
        os << name << ":";
        if (list.empty()) {
            os << " none";
        }
        for (const auto &p : list) {
            os << " (" << ref_text(p.first) << ", " << ref_text(p.second) << ")";
        }
        os << "\n";
    };
    if (report.purity.ok) {
        pairs("cross-setting duplicates", report.measurement.cross_setting);
        pairs("within-setting duplicates", report.measurement.within_setting);
        os << "forced LHS members: " << report.distinct_states << "\n";
    }
    if (report.ambiguous_duplicates) {
        os << "note: within- and cross-setting duplicates both present\n";
    }
    for (const auto &w : report.warnings) {
        os << "warning: " << w << "\n";
    }
    if (report.lp) {
        os << "lp: " << lp_verdict(*report.lp) << " (phase-one objective " << fixed6(report.lp->phase_one_objective)
           << ", " << report.lp->candidates << " candidates)\n";
    }
    return os.str();
}

Json lp_to_json(const LpProblem &problem, const FeasibilityResult *result) {
    Json groups = Json::array();
    for (auto g : problem.groups) {
        groups.push_back(g == RowGroup::Assemblage ? "assemblage" : g == RowGroup::Coupling ? "coupling" : "normalization");
    }
    Json a = Json::array();
    for (std::size_t r = 0; r < problem.rows; r++) {
        Json row = Json::array();
        for (std::size_t c = 0; c < problem.cols; c++) {
            row.push_back(problem.a[r * problem.cols + c]);
        }
        a.push_back(std::move(row));
    }
    Json candidates = Json::array();
    for (const auto &m : problem.candidates) {
        candidates.push_back(matrix_json(m));
    }
    Json out = {{"members", problem.members},
                {"outcomes_1", problem.labels_1},
                {"outcomes_2", problem.labels_2},
                {"bob_dim", problem.bob_dim},
                {"rows", problem.rows},
                {"cols", problem.cols},
                {"candidates", candidates},
                {"a", a},
                {"b", problem.b},
                {"row_groups", groups},
                {"column_layout", "per member: w(a|1) for each outcome of setting 1, w(a|2) for setting 2, then p"}};
    if (result) {
        Json res = {{"feasible", result->feasible},
                    {"phase_one_objective", result->phase_one_objective},
                    {"iterations", result->iterations},
                    {"solution", result->solution}};
        if (result->model) {
            res["model"] = model_to_json(*result->model);
        }
        out["result"] = res;
    }
    return out;
}

Json model_to_json(const LhsModel &model) {
    Json members = Json::array();
    for (const auto &m : model.members) {
        members.push_back({{"weight", m.weight}, {"state", matrix_json(m.state)}});
    }
    return {{"members", members}, {"responses_1", model.responses[0]}, {"responses_2", model.responses[1]}};
}

Json sweep_to_json(const SweepConfig &config, const SweepSummary &summary) {
    Json verdicts = Json::array();
    for (auto v : summary.verdicts) {
        verdicts.push_back(std::string(to_string(v)));
    }
    return {{"n_qubits", config.n_qubits},
            {"alice_qubits", config.alice_qubits},
            {"rank", config.rank},
            {"count", config.count},
            {"seed", config.seed},
            {"protocol", config.settings ? Json({{"setting_1", save_setting(config.settings->first)},
                                                 {"setting_2", save_setting(config.settings->second)}})
                                         : Json("random rank-1")},
            {"counts",
             {{"PARADOX", summary.paradox},
              {"NO_PARADOX_PURITY", summary.no_paradox_purity},
              {"NO_PARADOX_CROSS_DUPLICATE", summary.no_paradox_cross_duplicate}}},
            {"verdicts", verdicts}};
}

std::string sweep_to_text(const SweepConfig &config, const SweepSummary &summary) {
    std::ostringstream os;
    os << "sweep n_qubits=" << config.n_qubits << " alice_qubits=" << config.alice_qubits << " rank=" << config.rank
       << " count=" << config.count << " seed=" << config.seed << "\n";
    os << "verdict                      count\n";
    os << "PARADOX                      " << summary.paradox << "\n";
    os << "NO_PARADOX_PURITY            " << summary.no_paradox_purity << "\n";
    os << "NO_PARADOX_CROSS_DUPLICATE   " << summary.no_paradox_cross_duplicate << "\n";
    return os.str();
}

}  // namespace steerlab
