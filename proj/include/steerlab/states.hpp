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

#ifndef STEERLAB_STATES_HPP
#define STEERLAB_STATES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "steerlab/linalg.hpp"

namespace steerlab {

/// Hermitian, positive semidefinite, unit-trace operator on n_qubits qubits.
class DensityMatrix {
   public:
    /// Checks all invariants: Hermitian within 1e-10, trace 1 within 1e-10, and minimum
    /// eigenvalue >= -1e-9. Throws ValidationError naming the violated invariant.
    DensityMatrix(std::size_t n_qubits, ComplexMatrix matrix);

    /// For matrices that are PSD by construction (convex sums of projectors): checks shape,
    /// hermiticity and trace but skips the eigenvalue test.
    static DensityMatrix from_convex_sum(std::size_t n_qubits, ComplexMatrix matrix);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    std::size_t dim() const {
        return matrix_.rows();
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }

   private:
    DensityMatrix(std::size_t n_qubits, ComplexMatrix matrix, bool check_psd);
    std::size_t n_qubits_ = 0;
    ComplexMatrix matrix_;
};

struct EnsembleTerm {
    double weight;
    StateVector vector;
};

/// rho = sum_alpha p_alpha |psi_alpha><psi_alpha|, kept as its decomposition because the
/// steering requirements are stated per component.
class EnsembleState {
   public:
    /// Weights must be positive and sum to 1 within 1e-10; vectors must be normalized and
    /// 2^n_qubits long. Throws ValidationError.
    EnsembleState(std::size_t n_qubits, std::vector<EnsembleTerm> terms, std::vector<std::string> warnings = {});

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    std::size_t dim() const {
        return std::size_t{1} << n_qubits_;
    }
    const std::vector<EnsembleTerm> &terms() const {
        return terms_;
    }
    /// Non-fatal notes, e.g. a boundary angle that collapsed a mixture to a single term.
    const std::vector<std::string> &warnings() const {
        return warnings_;
    }

   private:
    std::size_t n_qubits_;
    std::vector<EnsembleTerm> terms_;
    std::vector<std::string> warnings_;
};

using AnyState = std::variant<EnsembleState, DensityMatrix>;

/// cos(theta)|00> + sin(theta)|11>
EnsembleState two_qubit_theta_state(double theta);

/// The 4-qubit linear cluster states |LC4> and |LC4'>.
std::pair<StateVector, StateVector> lc4_states();

/// cos^2(theta)|LC4><LC4| + sin^2(theta)|LC4'><LC4'|. Zero-weight terms are dropped and a
/// warning is attached whenever theta lies outside the open interval (0, pi/2).
EnsembleState lc4_mixed(double theta);

DensityMatrix density_of(const EnsembleState &ensemble);
DensityMatrix density_of(const AnyState &state);

/// Eigendecomposition of rho restricted to eigenvalues above `tol`, weights renormalized.
/// Degenerate eigenspaces use the deterministic basis of `canonicalize_degenerate`.
EnsembleState canonical_ensemble(const DensityMatrix &rho, double tol = 1e-9);

/// Haar-random unit vector of dimension `dim` drawn from `rng` (complex Gaussians, normalized).
std::vector<Complex> haar_amplitudes(std::size_t dim, std::mt19937_64 &rng);

/// Columns of a Haar-random unitary, as an orthonormal basis.
std::vector<std::vector<Complex>> haar_basis(std::size_t dim, std::mt19937_64 &rng);

StateVector random_pure(std::size_t n_qubits, std::uint64_t seed);

/// `rank` orthonormalized Haar vectors with flat-Dirichlet weights.
EnsembleState random_mixed(std::size_t n_qubits, std::size_t rank, std::uint64_t seed);

}  // namespace steerlab

#endif
