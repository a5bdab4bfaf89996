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

#include "steerlab/steering.hpp"

#include <algorithm>
#include <cmath>

#include "steerlab/error.hpp"

namespace steerlab {

namespace {

void check_protocol_fits(std::size_t n_qubits, const SteeringProtocol &protocol) {
    if (n_qubits != protocol.n_qubits()) {
        throw ArgumentError("state has " + std::to_string(n_qubits) + " qubits but the protocol expects " +
                            std::to_string(protocol.n_qubits()));
    }
}

struct PureEntry {
    OutcomeRef ref;
    StateVector vector;
};

std::vector<PureEntry> pure_entries(const ConditionalStateSet &set, const Tolerances &tol) {
    std::vector<PureEntry> out;
    for (const auto &e : set.entries) {
        if (!(e.probability > tol.zero_probability)) {
            continue;
        }
        if (purity(e.op) < 1.0 - tol.purity) {
            throw PreconditionError("conditional state for outcome " + e.outcome + " of setting " +
                                    std::to_string(set.setting_index) + " is mixed");
        }
        out.push_back({{set.setting_index, e.outcome}, pure_state_of(e.op)});
    }
    return out;
}

void collect_within(const std::vector<PureEntry> &entries, double tol, std::vector<DuplicatePair> &out) {
    for (std::size_t i = 0; i < entries.size(); i++) {
        for (std::size_t j = i + 1; j < entries.size(); j++) {
            if (phase_equal(entries[i].vector, entries[j].vector, tol)) {
                out.push_back({entries[i].ref, entries[j].ref});
            }
        }
    }
}

}  // namespace

ComplexMatrix ConditionalStateSet::marginal() const {
    std::size_t d = std::size_t{1} << bob_qubits;
    ComplexMatrix total(d, d);
    for (const auto &e : entries) {
        total += e.op;
    }
    return total;
}

ConditionalStateSet conditional_states(const DensityMatrix &rho, const SteeringProtocol &protocol, int which) {
    check_protocol_fits(rho.n_qubits(), protocol);
    const MeasurementSetting &setting = protocol.setting(which);
    std::size_t d_a = std::size_t{1} << protocol.alice_qubits();
    std::size_t d_b = std::size_t{1} << protocol.bob_qubits();
    const ComplexMatrix &m = rho.matrix();

    ConditionalStateSet out;
    out.setting_index = which;
    out.setting_label = setting.label;
    out.bob_qubits = protocol.bob_qubits();
    out.entries.reserve(setting.outcomes.size());
    for (const auto &outcome : setting.outcomes) {
        // rho_tilde(i, j) = sum_{x,y} P(x, y) rho((y, i), (x, j))
        ComplexMatrix op(d_b, d_b);
        for (std::size_t x = 0; x < d_a; x++) {
            for (std::size_t y = 0; y < d_a; y++) {
                Complex p = outcome.projector(x, y);
                if (p == Complex{}) {
                    continue;
                }
                for (std::size_t i = 0; i < d_b; i++) {
                    const Complex *row = &m(y * d_b + i, x * d_b);
                    for (std::size_t j = 0; j < d_b; j++) {
                        op(i, j) += p * row[j];
                    }
                }
            }
        }
        // Symmetrize away rounding so downstream Hermitian checks see an exact Hermitian matrix.
        for (std::size_t i = 0; i < d_b; i++) {
            op(i, i) = op(i, i).real();
            for (std::size_t j = i + 1; j < d_b; j++) {
                Complex avg = 0.5 * (op(i, j) + std::conj(op(j, i)));
                op(i, j) = avg;
                op(j, i) = std::conj(avg);
            }
        }
        double prob = op.trace().real();
        out.entries.push_back({outcome.label, std::move(op), prob});
    }
    return out;
}

ComplexMatrix CollapseDecomposition::reconstruct(std::size_t slot) const {
    ComplexMatrix total(bob_dim, bob_dim);
    for (const auto &c : components) {
        const auto &s = c.slots.at(slot);
        if (s.collapsed) {
            total += Complex(c.weight * s.coefficient * s.coefficient) * s.collapsed->projector();
        }
    }
    return total;
}

CollapseDecomposition collapse_decomposition(const EnsembleState &ensemble, const MeasurementSetting &setting,
                                             std::size_t alice_qubits) {
    if (setting.m_qubits != alice_qubits || alice_qubits >= ensemble.n_qubits()) {
        throw ArgumentError("setting acts on " + std::to_string(setting.m_qubits) + " qubits, expected " +
                            std::to_string(alice_qubits) + " of " + std::to_string(ensemble.n_qubits()));
    }
    std::vector<StateVector> basis = basis_vectors(setting);
    std::size_t d_a = std::size_t{1} << alice_qubits;
    std::size_t d_b = ensemble.dim() / d_a;

    CollapseDecomposition out;
    out.setting_label = setting.label;
    out.bob_dim = d_b;
    for (const auto &term : ensemble.terms()) {
        CollapseComponent comp{term.weight, {}};
        for (std::size_t k = 0; k < basis.size(); k++) {
            std::vector<Complex> proj(d_b);
            for (std::size_t x = 0; x < d_a; x++) {
                Complex bx = std::conj(basis[k][x]);
                if (bx == Complex{}) {
                    continue;
                }
                for (std::size_t i = 0; i < d_b; i++) {
                    proj[i] += bx * term.vector[x * d_b + i];
                }
            }
            double n = std::sqrt(std::real(inner(proj, proj)));
            CollapseSlot slot{setting.outcomes[k].label, n, std::nullopt};
            if (n > 1e-12) {
                slot.collapsed = StateVector::normalize(std::move(proj));
            } else {
                slot.coefficient = 0;
            }
            comp.slots.push_back(std::move(slot));
        }
        out.components.push_back(std::move(comp));
    }
    return out;
}

std::vector<ProportionalityFactor> proportionality_factors(const CollapseDecomposition &decomposition) {
    std::vector<ProportionalityFactor> out;
    const auto &comps = decomposition.components;
    for (std::size_t a = 0; a < comps.size(); a++) {
        for (std::size_t b = a + 1; b < comps.size(); b++) {
            for (std::size_t k = 0; k < comps[a].slots.size(); k++) {
                const auto &sa = comps[a].slots[k];
                const auto &sb = comps[b].slots[k];
                if (!sa.collapsed || !sb.collapsed) {
                    continue;
                }
                // s_a |eta_a> = c s_b |eta_b>, least squares in c.
                Complex ov = inner(sb.collapsed->amplitudes(), sa.collapsed->amplitudes());
                Complex c = ov * (sa.coefficient / sb.coefficient);
                double res2 = 0;
                for (std::size_t i = 0; i < decomposition.bob_dim; i++) {
                    Complex diff = sa.coefficient * (*sa.collapsed)[i] - c * sb.coefficient * (*sb.collapsed)[i];
                    res2 += std::norm(diff);
                }
                out.push_back({a, b, k, c, std::sqrt(res2)});
            }
        }
    }
    return out;
}

PurityCheck purity_requirement(const ConditionalStateSet &set_1, const ConditionalStateSet &set_2,
                               const Tolerances &tol) {
    PurityCheck out;
    out.ok = true;
    for (const auto *set : {&set_1, &set_2}) {
        for (const auto &e : set->entries) {
            OutcomeRef ref{set->setting_index, e.outcome};
            if (!(e.probability > tol.zero_probability)) {
                out.excluded.push_back(ref);
                out.outcomes.push_back({ref, e.probability, std::nullopt});
                continue;
            }
            double p = purity(e.op);
            if (p < 1.0 - tol.purity) {
                out.ok = false;
            }
            out.outcomes.push_back({ref, e.probability, p});
        }
    }
    return out;
}

MeasurementCheck measurement_requirement(const ConditionalStateSet &set_1, const ConditionalStateSet &set_2,
                                         const Tolerances &tol) {
    auto first = pure_entries(set_1, tol);
    auto second = pure_entries(set_2, tol);
    MeasurementCheck out;
    for (const auto &a : first) {
        for (const auto &b : second) {
            if (phase_equal(a.vector, b.vector, tol.phase_equality)) {
                out.cross_setting.push_back({a.ref, b.ref});
            }
        }
    }
    collect_within(first, tol.phase_equality, out.within_setting);
    collect_within(second, tol.phase_equality, out.within_setting);
    out.ok = out.cross_setting.empty();
    return out;
}

StateVector pure_state_of(const ComplexMatrix &op) {
    if (!op.is_square() || op.rows() == 0) {
        throw ArgumentError("pure_state_of needs a non-empty square matrix");
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < op.rows(); k++) {
        if (op(k, k).real() > op(best, best).real()) {
            best = k;
        }
    }
    std::vector<Complex> col(op.rows());
    for (std::size_t i = 0; i < op.rows(); i++) {
        col[i] = op(i, best);
    }
    return StateVector::normalize(std::move(col));
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Paradox:
            return "PARADOX";
        case Verdict::NoParadoxPurity:
            return "NO_PARADOX_PURITY";
        case Verdict::NoParadoxCrossDuplicate:
            return "NO_PARADOX_CROSS_DUPLICATE";
    }
    return "?";
}

std::string_view to_string(DecompositionSource source) {
    return source == DecompositionSource::Given ? "given" : "eigen";
}

ParadoxReport certify(const AnyState &state, const SteeringProtocol &protocol, const Tolerances &tol) {
    ParadoxReport report;
    std::optional<DensityMatrix> rho;
    if (const auto *ens = std::get_if<EnsembleState>(&state)) {
        check_protocol_fits(ens->n_qubits(), protocol);
        report.decomposition_used = DecompositionSource::Given;
        report.ensemble_terms = ens->terms().size();
        report.warnings = ens->warnings();
        rho = density_of(*ens);
    } else {
        const auto &dm = std::get<DensityMatrix>(state);
        check_protocol_fits(dm.n_qubits(), protocol);
        report.decomposition_used = DecompositionSource::Eigen;
        report.ensemble_terms = canonical_ensemble(dm, tol.rank).terms().size();
        rho = dm;
    }

    auto set_1 = conditional_states(*rho, protocol, 1);
    auto set_2 = conditional_states(*rho, protocol, 2);
    for (const auto *set : {&set_1, &set_2}) {
        for (const auto &e : set->entries) {
            report.quantum_trace_sum += e.probability;
        }
    }

    report.purity = purity_requirement(set_1, set_2, tol);
    if (!report.purity.ok) {
        report.verdict = Verdict::NoParadoxPurity;
        return report;
    }
    report.measurement = measurement_requirement(set_1, set_2, tol);
    report.ambiguous_duplicates = !report.measurement.cross_setting.empty() && !report.measurement.within_setting.empty();

    // Distinct pure states over both settings, i.e. the members any LHS ensemble is forced to use.
    std::vector<StateVector> distinct;
    for (const auto *set : {&set_1, &set_2}) {
        for (const auto &e : set->entries) {
            if (!(e.probability > tol.zero_probability)) {
                continue;
            }
            StateVector v = pure_state_of(e.op);
            bool seen = std::any_of(distinct.begin(), distinct.end(),
                                    [&](const StateVector &u) { return phase_equal(u, v, tol.phase_equality); });
            if (!seen) {
                distinct.push_back(std::move(v));
            }
        }
    }
    report.distinct_states = distinct.size();

    if (report.measurement.ok) {
        report.verdict = Verdict::Paradox;
        report.lhs_trace_sum = set_1.marginal().trace().real();
    } else {
        report.verdict = Verdict::NoParadoxCrossDuplicate;
    }
    return report;
}

bool is_shared_family_bell_like(const SteeringProtocol &protocol, double tol) {
    const auto &b1 = protocol.setting(1).bell_like;
    const auto &b2 = protocol.setting(2).bell_like;
    if (!b1 || !b2 || b1->m_qubits != b2->m_qubits || b1->family.size() != b2->family.size()) {
        return false;
    }
    for (std::size_t i = 0; i < b1->family.size(); i++) {
        if (phase_distance(b1->family[i].first.amplitudes(), b2->family[i].first.amplitudes()) > tol ||
            phase_distance(b1->family[i].second.amplitudes(), b2->family[i].second.amplitudes()) > tol) {
            return false;
        }
    }
    return true;
}

RankBound rank_bound_check(const DensityMatrix &rho, const SteeringProtocol &protocol, double rank_tol) {
    check_protocol_fits(rho.n_qubits(), protocol);
    if (!is_shared_family_bell_like(protocol)) {
        throw UnsupportedSettingError("rank bound needs two Bell-like settings over the same pair family");
    }
    RankBound out;
    out.rank = numerical_rank(rho.matrix(), rank_tol);
    out.bound = std::size_t{1} << (protocol.alice_qubits() - 1);
    out.satisfied = out.rank <= out.bound;
    return out;
}

}  // namespace steerlab
