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

#ifndef STEERLAB_MEASUREMENTS_HPP
#define STEERLAB_MEASUREMENTS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "steerlab/linalg.hpp"

namespace steerlab {

/// Eigenbasis of sigma_x, sigma_y or sigma_z ('x', 'y', 'z'), +1 eigenvector first.
/// Throws ArgumentError on any other character.
std::pair<StateVector, StateVector> pauli_axis_basis(char axis);

/// Family of orthonormal pairs (|+phi_i>, |-phi_i>), i = 1..2^(M-1), together with the
/// rotation angle beta applied inside every pair.
struct BellLikeBasis {
    double beta = 0;
    std::size_t m_qubits = 1;
    std::vector<std::pair<StateVector, StateVector>> family;
    std::string family_name;

    /// |+phi_i> = |i>, |-phi_i> = |2^M - 1 - i>: each basis state paired with its bitwise complement.
    static BellLikeBasis computational(std::size_t m_qubits, double beta);
    /// |+-phi_i> = (|i> +- |2^M - 1 - i>) / sqrt(2): the GHZ-type (Bell for M = 2) pairs.
    static BellLikeBasis bell(std::size_t m_qubits, double beta);

    /// The 2^M family vectors must be orthonormal. Throws ValidationError.
    void validate(double tol = 1e-10) const;
};

struct Outcome {
    std::string label;
    ComplexMatrix projector;
    /// The basis vector of a rank-1 projector, when the builder knows it.
    std::optional<StateVector> vector;
};

/// Complete set of orthogonal projectors on Alice's 2^M-dimensional space.
struct MeasurementSetting {
    std::string label;
    std::size_t m_qubits = 0;
    std::vector<Outcome> outcomes;
    /// Present when built by `bell_like_setting`.
    std::optional<BellLikeBasis> bell_like;

    std::size_t dim() const {
        return std::size_t{1} << m_qubits;
    }
    /// Idempotent, Hermitian, mutually orthogonal, complete, all within `tol`.
    /// Throws ValidationError naming the failed property.
    void validate(double tol = 1e-10) const;
};

/// Tensor product of single-qubit Pauli eigenbases, e.g. "yx". Outcome labels are M-bit
/// strings; bit k selects the eigenvector (0 = +1, 1 = -1) of qubit k.
MeasurementSetting tensor_setting(std::string_view axes);

/// Rank-1 projectors rotated by beta inside each family pair:
///   P_{i+} from  cos(beta)|+phi_i> + sin(beta)|-phi_i>
///   P_{i-} from  sin(beta)|+phi_i> - cos(beta)|-phi_i>
/// Outcomes are ordered 1+, ..., K+, 1-, ..., K- (K = 2^(M-1)) and labelled that way.
MeasurementSetting bell_like_setting(const BellLikeBasis &basis);

/// Rank-1 setting from explicit vectors (normalized on the way in). Labels are bitstrings
/// when there are exactly 2^M vectors, decimal indices otherwise.
MeasurementSetting projector_setting(std::string label, std::size_t m_qubits, const std::vector<std::vector<Complex>> &vectors);

/// Basis vectors of a rank-1 setting, in outcome order. Throws UnsupportedSettingError when a
/// projector is not rank 1.
std::vector<StateVector> basis_vectors(const MeasurementSetting &setting);

/// V_{ji} = <w_j|u_i>, rows indexed by setting_2's basis vectors w, columns by setting_1's u.
ComplexMatrix transformation_matrix(const MeasurementSetting &setting_1, const MeasurementSetting &setting_2);

/// || sum_a P_a - 1 ||_F
double completeness_check(const MeasurementSetting &setting);

/// True when both settings contain the same projectors, in any order, within `tol`.
bool same_projector_set(const MeasurementSetting &a, const MeasurementSetting &b, double tol = 1e-10);

/// Two settings on Alice's first M of N qubits.
class SteeringProtocol {
   public:
    /// Throws ValidationError when M >= N, when a setting does not act on 2^M dimensions or
    /// fails `MeasurementSetting::validate`, or when both settings are the same projector set.
    SteeringProtocol(std::size_t n_qubits, std::size_t alice_qubits, MeasurementSetting setting_1, MeasurementSetting setting_2);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    std::size_t alice_qubits() const {
        return alice_qubits_;
    }
    std::size_t bob_qubits() const {
        return n_qubits_ - alice_qubits_;
    }
    /// `which` is 1 or 2.
    const MeasurementSetting &setting(int which) const;

   private:
    std::size_t n_qubits_;
    std::size_t alice_qubits_;
    MeasurementSetting setting_1_;
    MeasurementSetting setting_2_;
};

}  // namespace steerlab

#endif
