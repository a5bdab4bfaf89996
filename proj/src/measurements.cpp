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

#include "steerlab/measurements.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steerlab/error.hpp"

namespace steerlab {

std::pair<StateVector, StateVector> pauli_axis_basis(char axis) {
    const double h = 1 / std::numbers::sqrt2;
    const Complex i{0, 1};
    switch (axis) {
        case 'z':
        case 'Z':
            return {StateVector::basis(2, 0), StateVector::basis(2, 1)};
        case 'x':
        case 'X':
            return {StateVector::normalize({h, h}), StateVector::normalize({h, -h})};
        case 'y':
        case 'Y':
            return {StateVector::normalize({h, h * i}), StateVector::normalize({h, -h * i})};
        default:
            throw ArgumentError(std::string("unknown Pauli axis '") + axis + "' (expected x, y or z)");
    }
}

namespace {

void check_alice_qubits(std::size_t m_qubits) {
    if (m_qubits < 1 || m_qubits > 12 || (std::size_t{1} << m_qubits) > max_dimension()) {
        throw ArgumentError("setting must act on between 1 and log2(max dimension) qubits");
    }
}

std::string bitstring(std::size_t value, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t k = 0; k < width; k++) {
        if ((value >> (width - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

Outcome rank1_outcome(std::string label, StateVector v) {
    ComplexMatrix p = v.projector();
    return Outcome{std::move(label), std::move(p), std::move(v)};
}

}  // namespace

BellLikeBasis BellLikeBasis::computational(std::size_t m_qubits, double beta) {
    check_alice_qubits(m_qubits);
    std::size_t dim = std::size_t{1} << m_qubits;
    BellLikeBasis b;
    b.beta = beta;
    b.m_qubits = m_qubits;
    b.family_name = "computational";
    for (std::size_t i = 0; i < dim / 2; i++) {
        b.family.emplace_back(StateVector::basis(dim, i), StateVector::basis(dim, dim - 1 - i));
    }
    return b;
}

BellLikeBasis BellLikeBasis::bell(std::size_t m_qubits, double beta) {
    check_alice_qubits(m_qubits);
    std::size_t dim = std::size_t{1} << m_qubits;
    const double h = 1 / std::numbers::sqrt2;
    BellLikeBasis b;
    b.beta = beta;
    b.m_qubits = m_qubits;
    b.family_name = "bell";
    for (std::size_t i = 0; i < dim / 2; i++) {
        std::vector<Complex> plus(dim), minus(dim);
        plus[i] = h;
        plus[dim - 1 - i] = h;
        minus[i] = h;
        minus[dim - 1 - i] = -h;
        b.family.emplace_back(StateVector::normalize(std::move(plus)), StateVector::normalize(std::move(minus)));
    }
    return b;
}

void BellLikeBasis::validate(double tol) const {
    std::size_t dim = std::size_t{1} << m_qubits;
    if (family.size() != dim / 2) {
        throw ValidationError("Bell-like family must hold 2^(M-1) pairs");
    }
    std::vector<const StateVector *> all;
    for (const auto &[plus, minus] : family) {
        all.push_back(&plus);
        all.push_back(&minus);
    }
    for (std::size_t a = 0; a < all.size(); a++) {
        if (all[a]->dim() != dim) {
            throw ValidationError("Bell-like family vectors must have dimension 2^M");
        }
        for (std::size_t b = a; b < all.size(); b++) {
            Complex g = inner(all[a]->amplitudes(), all[b]->amplitudes());
            double expected = a == b ? 1.0 : 0.0;
            if (!(std::abs(g - expected) <= tol)) {
                throw ValidationError("Bell-like family vectors must be orthonormal");
            }
        }
    }
}

void MeasurementSetting::validate(double tol) const {
    if (outcomes.empty()) {
        throw ValidationError("setting '" + label + "' has no outcomes");
    }
    const std::size_t d = dim();
    for (const auto &o : outcomes) {
        if (o.projector.rows() != d || o.projector.cols() != d) {
            throw ValidationError("setting '" + label + "': projector " + o.label + " is not 2^M square");
        }
        if (!(hermiticity_error(o.projector) <= tol)) {
            throw ValidationError("setting '" + label + "': projector " + o.label + " is not Hermitian");
        }
        if (!((o.projector * o.projector - o.projector).frobenius_norm() <= tol)) {
            throw ValidationError("setting '" + label + "': projector " + o.label + " is not idempotent");
        }
    }
    bool all_rank1 = std::all_of(outcomes.begin(), outcomes.end(), [](const Outcome &o) {
        return o.vector.has_value();
    });
    for (std::size_t a = 0; a < outcomes.size(); a++) {
        for (std::size_t b = a + 1; b < outcomes.size(); b++) {
            // For rank-1 projectors ||P_a P_b||_F = |<u_a|u_b>|.
            double overlap = all_rank1 ? std::abs(inner(outcomes[a].vector->amplitudes(), outcomes[b].vector->amplitudes()))
                                       : (outcomes[a].projector * outcomes[b].projector).frobenius_norm();
            if (!(overlap <= tol)) {
                throw ValidationError("setting '" + label + "': projectors " + outcomes[a].label + " and " +
                                      outcomes[b].label + " are not orthogonal");
            }
        }
    }
    if (!(completeness_check(*this) <= tol)) {
        throw ValidationError("setting '" + label + "': projectors do not sum to the identity");
    }
}

MeasurementSetting tensor_setting(std::string_view axes) {
    const std::size_t m = axes.size();
    if (m < 1 || m > 6) {
        throw ArgumentError("tensor setting needs between 1 and 6 axes");
    }
    std::vector<std::pair<StateVector, StateVector>> per_qubit;
    for (char c : axes) {
        per_qubit.push_back(pauli_axis_basis(c));
    }
    MeasurementSetting s;
    s.label = std::string(axes);
    s.m_qubits = m;
    for (std::size_t outcome = 0; outcome < (std::size_t{1} << m); outcome++) {
        std::vector<Complex> v{1.0};
        for (std::size_t q = 0; q < m; q++) {
            bool minus = (outcome >> (m - 1 - q)) & 1;
            const auto &f = minus ? per_qubit[q].second : per_qubit[q].first;
            v = kron(v, f.amplitudes());
        }
        s.outcomes.push_back(rank1_outcome(bitstring(outcome, m), StateVector::normalize(std::move(v))));
    }
    return s;
}

MeasurementSetting bell_like_setting(const BellLikeBasis &basis) {
    basis.validate();
    const double c = std::cos(basis.beta);
    const double s = std::sin(basis.beta);
    const std::size_t d = std::size_t{1} << basis.m_qubits;
    MeasurementSetting out;
    out.label = "bell_like(" + std::to_string(basis.beta) + ")";
    out.m_qubits = basis.m_qubits;
    out.bell_like = basis;
    auto combine = [&](const StateVector &plus, const StateVector &minus, double a, double b) {
        std::vector<Complex> v(d);
        for (std::size_t k = 0; k < d; k++) {
            v[k] = a * plus[k] + b * minus[k];
        }
        return StateVector::normalize(std::move(v));
    };
    for (std::size_t i = 0; i < basis.family.size(); i++) {
        const auto &[plus, minus] = basis.family[i];
        out.outcomes.push_back(rank1_outcome(std::to_string(i + 1) + "+", combine(plus, minus, c, s)));
    }
    for (std::size_t i = 0; i < basis.family.size(); i++) {
        const auto &[plus, minus] = basis.family[i];
        out.outcomes.push_back(rank1_outcome(std::to_string(i + 1) + "-", combine(plus, minus, s, -c)));
    }
    return out;
}

MeasurementSetting projector_setting(std::string label, std::size_t m_qubits, const std::vector<std::vector<Complex>> &vectors) {
    check_alice_qubits(m_qubits);
    MeasurementSetting s;
    s.label = std::move(label);
    s.m_qubits = m_qubits;
    const std::size_t d = s.dim();
    for (std::size_t k = 0; k < vectors.size(); k++) {
        if (vectors[k].size() != d) {
            throw ValidationError("projector vector " + std::to_string(k) + " must have length 2^M");
        }
        std::string name = vectors.size() == d ? bitstring(k, m_qubits) : std::to_string(k);
        s.outcomes.push_back(rank1_outcome(std::move(name), StateVector::normalize(vectors[k])));
    }
    return s;
}

std::vector<StateVector> basis_vectors(const MeasurementSetting &setting) {
    std::vector<StateVector> out;
    for (const auto &o : setting.outcomes) {
        if (o.vector.has_value()) {
            out.push_back(*o.vector);
            continue;
        }
        auto eig = hermitian_eig(o.projector);
        std::size_t rank = 0;
        for (double v : eig.values) {
            if (v > 0.5) {
                rank++;
            }
        }
        if (rank != 1) {
            throw UnsupportedSettingError("setting '" + setting.label + "': projector " + o.label + " has rank " +
                                          std::to_string(rank) + ", expected 1");
        }
        out.push_back(eig.vectors.back());
    }
    return out;
}

ComplexMatrix transformation_matrix(const MeasurementSetting &setting_1, const MeasurementSetting &setting_2) {
    if (setting_1.dim() != setting_2.dim()) {
        throw ArgumentError("transformation_matrix: settings act on different dimensions");
    }
    auto u = basis_vectors(setting_1);
    auto w = basis_vectors(setting_2);
    if (u.size() != setting_1.dim() || w.size() != setting_2.dim()) {
        throw UnsupportedSettingError("transformation_matrix: settings must have 2^M rank-1 outcomes");
    }
    ComplexMatrix v(w.size(), u.size());
    for (std::size_t j = 0; j < w.size(); j++) {
        for (std::size_t i = 0; i < u.size(); i++) {
            v(j, i) = inner(w[j].amplitudes(), u[i].amplitudes());
        }
    }
    return v;
}

double completeness_check(const MeasurementSetting &setting) {
    ComplexMatrix sum = ComplexMatrix::zeros(setting.dim(), setting.dim());
    for (const auto &o : setting.outcomes) {
        sum += o.projector;
    }
    return (sum - ComplexMatrix::identity(setting.dim())).frobenius_norm();
}

bool same_projector_set(const MeasurementSetting &a, const MeasurementSetting &b, double tol) {
    if (a.outcomes.size() != b.outcomes.size() || a.dim() != b.dim()) {
        return false;
    }
    std::vector<bool> used(b.outcomes.size(), false);
    for (const auto &pa : a.outcomes) {
        bool found = false;
        for (std::size_t k = 0; k < b.outcomes.size(); k++) {
            if (!used[k] && (pa.projector - b.outcomes[k].projector).frobenius_norm() <= tol) {
                used[k] = true;
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

SteeringProtocol::SteeringProtocol(
    std::size_t n_qubits, std::size_t alice_qubits, MeasurementSetting setting_1, MeasurementSetting setting_2)
    : n_qubits_(n_qubits), alice_qubits_(alice_qubits), setting_1_(std::move(setting_1)), setting_2_(std::move(setting_2)) {
    if (alice_qubits_ < 1 || alice_qubits_ >= n_qubits_) {
        throw ValidationError("alice_qubits must satisfy 1 <= M < n_qubits");
    }
    for (const auto *s : {&setting_1_, &setting_2_}) {
        if (s->m_qubits != alice_qubits_) {
            throw ValidationError("setting '" + s->label + "' acts on " + std::to_string(s->m_qubits) +
                                  " qubits but alice_qubits is " + std::to_string(alice_qubits_));
        }
        s->validate();
    }
    if (same_projector_set(setting_1_, setting_2_)) {
        throw ValidationError("the two settings must differ (identical projector sets)");
    }
}

const MeasurementSetting &SteeringProtocol::setting(int which) const {
    if (which == 1) {
        return setting_1_;
    }
    if (which == 2) {
        return setting_2_;
    }
    throw ArgumentError("setting index must be 1 or 2");
}

}  // namespace steerlab
