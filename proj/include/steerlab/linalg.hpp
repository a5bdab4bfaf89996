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

#ifndef STEERLAB_LINALG_HPP
#define STEERLAB_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "steerlab/config.hpp"

namespace steerlab {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Qubit convention used throughout the library: qubit 0 is the leftmost ket factor and
/// the most significant bit of a computational-basis index.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    std::span<const Complex> entries() const {
        return data_;
    }
    std::span<Complex> entries() {
        return data_;
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    Complex trace() const;
    double frobenius_norm() const;
    bool all_finite() const;

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

/// A vector of amplitudes. `is_normalized()` states whether the unit-norm invariant was
/// checked at construction (to 1e-12); unnormalized vectors carry the flag `false`.
class StateVector {
   public:
    StateVector() = default;

    /// Checks |v|^2 = 1 within 1e-12, throws ValidationError otherwise.
    static StateVector normalized(std::vector<Complex> amplitudes);
    /// Divides by the norm. Throws DegenerateInputError on a zero vector.
    static StateVector normalize(std::vector<Complex> amplitudes);
    static StateVector unnormalized(std::vector<Complex> amplitudes);
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const {
        return amps_.size();
    }
    bool is_normalized() const {
        return normalized_;
    }
    std::span<const Complex> amplitudes() const {
        return amps_;
    }
    const Complex &operator[](std::size_t k) const {
        return amps_[k];
    }
    double norm() const;

    /// |v><v|
    ComplexMatrix projector() const;

   private:
    StateVector(std::vector<Complex> amps, bool normalized) : amps_(std::move(amps)), normalized_(normalized) {
    }
    std::vector<Complex> amps_;
    bool normalized_ = false;
};

/// <u|v>
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b);
std::vector<Complex> apply(const ComplexMatrix &m, std::span<const Complex> v);
/// |u><v|
ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

/// Kronecker product, left factor most significant. Throws SizeError when either
/// resulting dimension exceeds `max_dimension()`.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix dagger(const ComplexMatrix &a);

/// Trace out `traced_qubits` of an operator on `n_qubits` qubits. The remaining qubits keep
/// their relative order.
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::size_t n_qubits, std::span<const std::size_t> traced_qubits);

/// max |a_ij - conj(a_ji)|
double hermiticity_error(const ComplexMatrix &a);

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> values;
    /// Orthonormal, `vectors[k]` belongs to `values[k]`. Each vector's phase is fixed so that
    /// its first entry above 1e-12 in magnitude is real and positive.
    std::vector<StateVector> vectors;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Throws ArgumentError when `a` is not
/// square or not Hermitian within `hermitian_tol`.
EigenDecomposition hermitian_eig(const ComplexMatrix &a, double hermitian_tol = 1e-10);

/// tr((rho / tr rho)^2). Throws DegenerateInputError when tr rho is zero.
double purity(const ComplexMatrix &rho);

/// Number of eigenvalues strictly above `tol`.
std::size_t numerical_rank(const ComplexMatrix &rho, double tol = 1e-9);

/// Equality up to global phase: 1 - |<u|v>| / (|u||v|) < tol. Throws DegenerateInputError on
/// a zero vector and ArgumentError on a dimension mismatch.
bool phase_equal(const StateVector &u, const StateVector &v, double tol = 1e-8);
/// 1 - |<u|v>| / (|u||v|)
double phase_distance(std::span<const Complex> u, std::span<const Complex> v);

/// Orthonormal basis of span(vectors), built by Gram-Schmidt in the given order and skipping
/// vectors whose residual norm falls below `drop_tol`.
std::vector<std::vector<Complex>> gram_schmidt(const std::vector<std::vector<Complex>> &vectors, double drop_tol = 1e-10);

/// Rewrite each group of eigenvectors whose eigenvalues agree within `degeneracy_tol` as the
/// Gram-Schmidt image of the computational basis vectors e_0, e_1, ... projected onto that
/// group's span. The result depends only on the eigenspaces, not on the solver's rotation order.
EigenDecomposition canonicalize_degenerate(EigenDecomposition eig, double degeneracy_tol = 1e-9);

std::size_t log2_exact(std::size_t dim);

}  // namespace steerlab

#endif
