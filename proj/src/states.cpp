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

#include "steerlab/states.hpp"

#include <cmath>
#include <numbers>

#include "steerlab/error.hpp"

namespace steerlab {

namespace {

void check_qubit_count(std::size_t n_qubits) {
    if (n_qubits == 0) {
        throw ValidationError("n_qubits must be positive");
    }
    if (n_qubits >= 63 || (std::size_t{1} << n_qubits) > max_dimension()) {
        throw SizeError("2^" + std::to_string(n_qubits) + " exceeds the maximum dimension " +
                        std::to_string(max_dimension()));
    }
}

}  // namespace

DensityMatrix::DensityMatrix(std::size_t n_qubits, ComplexMatrix matrix) : DensityMatrix(n_qubits, std::move(matrix), true) {
}

DensityMatrix DensityMatrix::from_convex_sum(std::size_t n_qubits, ComplexMatrix matrix) {
    return DensityMatrix(n_qubits, std::move(matrix), false);
}

DensityMatrix::DensityMatrix(std::size_t n_qubits, ComplexMatrix matrix, bool check_psd)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    check_qubit_count(n_qubits);
    std::size_t dim = std::size_t{1} << n_qubits;
    if (!matrix_.is_square() || matrix_.rows() != dim) {
        throw ValidationError("density matrix must be 2^n_qubits square");
    }
    if (!matrix_.all_finite()) {
        throw ValidationError("density matrix entries must be finite");
    }
    if (!(hermiticity_error(matrix_) <= 1e-10)) {
        throw ValidationError("density matrix must be Hermitian");
    }
    Complex tr = matrix_.trace();
    if (!(std::abs(tr - 1.0) <= 1e-10)) {
        throw ValidationError("density matrix trace must be 1 (got " + std::to_string(tr.real()) + ")");
    }
    if (check_psd) {
        auto eig = hermitian_eig(matrix_);
        if (eig.values.front() < -1e-9) {
            throw ValidationError("density matrix must be positive semidefinite (min eigenvalue " +
                                  std::to_string(eig.values.front()) + ")");
        }
    }
}

EnsembleState::EnsembleState(std::size_t n_qubits, std::vector<EnsembleTerm> terms, std::vector<std::string> warnings)
    : n_qubits_(n_qubits), terms_(std::move(terms)), warnings_(std::move(warnings)) {
    check_qubit_count(n_qubits);
    if (terms_.empty()) {
        throw ValidationError("ensemble must have at least one term");
    }
    double total = 0;
    for (const auto &t : terms_) {
        if (!(t.weight > 0) || !std::isfinite(t.weight)) {
            throw ValidationError("ensemble weights must be positive");
        }
        if (t.vector.dim() != dim()) {
            throw ValidationError("ensemble vectors must have length 2^n_qubits");
        }
        if (!t.vector.is_normalized()) {
            throw ValidationError("ensemble vectors must be normalized");
        }
        total += t.weight;
    }
    if (!(std::abs(total - 1.0) <= 1e-10)) {
        throw ValidationError("weights must sum to 1 (got " + std::to_string(total) + ")");
    }
}

EnsembleState two_qubit_theta_state(double theta) {
    std::vector<Complex> amps{std::cos(theta), 0.0, 0.0, std::sin(theta)};
    return EnsembleState(2, {{1.0, StateVector::normalize(std::move(amps))}});
}

std::pair<StateVector, StateVector> lc4_states() {
    std::vector<Complex> lc(16), lc_prime(16);
    lc[0b0000] = 0.5;
    lc[0b1100] = 0.5;
    lc[0b0011] = 0.5;
    lc[0b1111] = -0.5;
    lc_prime[0b0100] = 0.5;
    lc_prime[0b1000] = 0.5;
    lc_prime[0b0111] = 0.5;
    lc_prime[0b1011] = -0.5;
    return {StateVector::normalized(std::move(lc)), StateVector::normalized(std::move(lc_prime))};
}

EnsembleState lc4_mixed(double theta) {
    auto [lc, lc_prime] = lc4_states();
    double c2 = std::cos(theta) * std::cos(theta);
    double s2 = std::sin(theta) * std::sin(theta);
    std::vector<std::string> warnings;
    if (!(theta > 0 && theta < std::numbers::pi / 2)) {
        warnings.push_back("theta outside (0, pi/2): mixture is not the interior family");
    }
    std::vector<EnsembleTerm> terms;
    constexpr double dropped = 1e-15;
    if (c2 > dropped) {
        terms.push_back({c2, lc});
    }
    if (s2 > dropped) {
        terms.push_back({s2, lc_prime});
    }
    if (terms.size() == 1) {
        warnings.push_back("boundary theta: single pure term");
        terms.front().weight = 1.0;
    } else {
        double total = c2 + s2;
        for (auto &t : terms) {
            t.weight /= total;
        }
    }
    return EnsembleState(4, std::move(terms), std::move(warnings));
}

DensityMatrix density_of(const EnsembleState &ensemble) {
    ComplexMatrix rho(ensemble.dim(), ensemble.dim());
    for (const auto &t : ensemble.terms()) {
        auto amps = t.vector.amplitudes();
        for (std::size_t r = 0; r < amps.size(); r++) {
            if (amps[r] == Complex{0}) {
                continue;
            }
            Complex x = t.weight * amps[r];
            for (std::size_t c = 0; c < amps.size(); c++) {
                rho(r, c) += x * std::conj(amps[c]);
            }
        }
    }
    return DensityMatrix::from_convex_sum(ensemble.n_qubits(), std::move(rho));
}

DensityMatrix density_of(const AnyState &state) {
    if (const auto *ens = std::get_if<EnsembleState>(&state)) {
        return density_of(*ens);
    }
    return std::get<DensityMatrix>(state);
}

EnsembleState canonical_ensemble(const DensityMatrix &rho, double tol) {
    auto eig = canonicalize_degenerate(hermitian_eig(rho.matrix()));
    std::vector<EnsembleTerm> terms;
    double total = 0;
    // Largest weight first.
    for (std::size_t k = eig.values.size(); k-- > 0;) {
        if (eig.values[k] > tol) {
            terms.push_back({eig.values[k], eig.vectors[k]});
            total += eig.values[k];
        }
    }
    for (auto &t : terms) {
        t.weight /= total;
    }
    return EnsembleState(rho.n_qubits(), std::move(terms));
}

std::vector<Complex> haar_amplitudes(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(dim);
    double n2 = 0;
    while (!(n2 > 0)) {
        n2 = 0;
        for (auto &a : amps) {
            double re = gauss(rng);
            double im = gauss(rng);
            a = {re, im};
            n2 += re * re + im * im;
        }
    }
    double n = std::sqrt(n2);
    for (auto &a : amps) {
        a /= n;
    }
    return amps;
}

std::vector<std::vector<Complex>> haar_basis(std::size_t dim, std::mt19937_64 &rng) {
    std::vector<std::vector<Complex>> basis;
    while (basis.size() < dim) {
        std::vector<std::vector<Complex>> candidates = basis;
        candidates.push_back(haar_amplitudes(dim, rng));
        basis = gram_schmidt(candidates, 1e-6);
    }
    return basis;
}

StateVector random_pure(std::size_t n_qubits, std::uint64_t seed) {
    check_qubit_count(n_qubits);
    std::mt19937_64 rng(seed);
    return StateVector::normalize(haar_amplitudes(std::size_t{1} << n_qubits, rng));
}

EnsembleState random_mixed(std::size_t n_qubits, std::size_t rank, std::uint64_t seed) {
    check_qubit_count(n_qubits);
    std::size_t dim = std::size_t{1} << n_qubits;
    if (rank < 1 || rank > dim) {
        throw ArgumentError("random_mixed: rank must lie in [1, 2^n_qubits]");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Complex>> vectors;
    while (vectors.size() < rank) {
        auto candidates = vectors;
        candidates.push_back(haar_amplitudes(dim, rng));
        vectors = gram_schmidt(candidates, 1e-6);
    }
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> weights(rank);
    double total = 0;
    for (auto &w : weights) {
        do {
            w = expo(rng);
        } while (!(w > 1e-12));
        total += w;
    }
    std::vector<EnsembleTerm> terms;
    for (std::size_t k = 0; k < rank; k++) {
        terms.push_back({weights[k] / total, StateVector::normalize(std::move(vectors[k]))});
    }
    return EnsembleState(n_qubits, std::move(terms));
}

}  // namespace steerlab
