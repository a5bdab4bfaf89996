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

#include "steerlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "steerlab/error.hpp"

namespace steerlab {

std::size_t max_dimension() {
    const char *env = std::getenv("STEERLAB_MAX_DIM");
    if (env == nullptr || *env == '\0') {
        return DEFAULT_MAX_DIMENSION;
    }
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        return DEFAULT_MAX_DIMENSION;
    }
    return static_cast<std::size_t>(v);
}

std::size_t log2_exact(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw ArgumentError("dimension " + std::to_string(dim) + " is not a power of 2");
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) {
        n++;
    }
    return n;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw ArgumentError(
            "matrix entry count " + std::to_string(data_.size()) + " != " + std::to_string(rows) + "x" +
            std::to_string(cols));
    }
    if (!all_finite()) {
        throw ArgumentError("matrix entries must be finite");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw ArgumentError("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t k = 0; k < dim; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t k = 0; k < values.size(); k++) {
        m(k, k) = values[k];
    }
    return m;
}

static void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ArgumentError("matrix shape mismatch");
    }
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other);
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other);
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &x : data_) {
        x *= scale;
    }
    return *this;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (std::size_t k = 0; k < std::min(rows_, cols_); k++) {
        t += (*this)(k, k);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto &x : data_) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex &x) {
        return std::isfinite(x.real()) && std::isfinite(x.imag());
    });
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ArgumentError("matrix product dimension mismatch");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            Complex x = a(r, k);
            if (x == Complex{0}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); c++) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
    StateVector v(std::move(amplitudes), false);
    double n2 = v.norm() * v.norm();
    if (!(std::abs(n2 - 1.0) <= 1e-12)) {
        throw ValidationError("state vector must have unit norm (|v|^2 = " + std::to_string(n2) + ")");
    }
    v.normalized_ = true;
    return v;
}

StateVector StateVector::normalize(std::vector<Complex> amplitudes) {
    StateVector v(std::move(amplitudes), false);
    double n = v.norm();
    if (!(n > 0) || !std::isfinite(n)) {
        throw DegenerateInputError("cannot normalize a zero vector");
    }
    for (auto &x : v.amps_) {
        x /= n;
    }
    v.normalized_ = true;
    return v;
}

StateVector StateVector::unnormalized(std::vector<Complex> amplitudes) {
    return StateVector(std::move(amplitudes), false);
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw ArgumentError("basis index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(std::move(amps), true);
}

double StateVector::norm() const {
    double s = 0;
    for (const auto &x : amps_) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

ComplexMatrix StateVector::projector() const {
    return outer(amps_, amps_);
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw ArgumentError("inner product dimension mismatch");
    }
    Complex s = 0;
    for (std::size_t k = 0; k < u.size(); k++) {
        s += std::conj(u[k]) * v[k];
    }
    return s;
}

std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() * b.size() > max_dimension()) {
        throw SizeError("vector dimension " + std::to_string(a.size() * b.size()) + " exceeds maximum " +
                        std::to_string(max_dimension()));
    }
    std::vector<Complex> out;
    out.reserve(a.size() * b.size());
    for (const auto &x : a) {
        for (const auto &y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

std::vector<Complex> apply(const ComplexMatrix &m, std::span<const Complex> v) {
    if (m.cols() != v.size()) {
        throw ArgumentError("matrix-vector dimension mismatch");
    }
    std::vector<Complex> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        Complex s = 0;
        for (std::size_t c = 0; c < m.cols(); c++) {
            s += m(r, c) * v[c];
        }
        out[r] = s;
    }
    return out;
}

ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
    ComplexMatrix m(u.size(), v.size());
    for (std::size_t r = 0; r < u.size(); r++) {
        for (std::size_t c = 0; c < v.size(); c++) {
            m(r, c) = u[r] * std::conj(v[c]);
        }
    }
    return m;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    std::size_t rows = a.rows() * b.rows();
    std::size_t cols = a.cols() * b.cols();
    if (rows > max_dimension() || cols > max_dimension()) {
        throw SizeError("kron dimension " + std::to_string(std::max(rows, cols)) + " exceeds maximum " +
                        std::to_string(max_dimension()));
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            Complex x = a(ar, ac);
            if (x == Complex{0}) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = 0; c < a.cols(); c++) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::size_t n_qubits, std::span<const std::size_t> traced_qubits) {
    std::size_t dim = std::size_t{1} << n_qubits;
    if (n_qubits >= 8 * sizeof(std::size_t) || !rho.is_square() || rho.rows() != dim) {
        throw ArgumentError("partial_trace: operator is not 2^n_qubits square");
    }
    std::vector<bool> traced(n_qubits, false);
    for (std::size_t q : traced_qubits) {
        if (q >= n_qubits) {
            throw ArgumentError("partial_trace: qubit index " + std::to_string(q) + " out of range");
        }
        if (traced[q]) {
            throw ArgumentError("partial_trace: qubit index " + std::to_string(q) + " listed twice");
        }
        traced[q] = true;
    }

    // Bit offsets of each kept/traced local index inside a full computational index.
    std::vector<std::size_t> kept_bits;
    std::vector<std::size_t> traced_bits;
    for (std::size_t q = 0; q < n_qubits; q++) {
        (traced[q] ? traced_bits : kept_bits).push_back(n_qubits - 1 - q);
    }
    auto offsets = [](const std::vector<std::size_t> &bits) {
        std::size_t count = std::size_t{1} << bits.size();
        std::vector<std::size_t> out(count, 0);
        for (std::size_t local = 0; local < count; local++) {
            for (std::size_t k = 0; k < bits.size(); k++) {
                if ((local >> (bits.size() - 1 - k)) & 1) {
                    out[local] |= std::size_t{1} << bits[k];
                }
            }
        }
        return out;
    };
    std::vector<std::size_t> kept_off = offsets(kept_bits);
    std::vector<std::size_t> traced_off = offsets(traced_bits);

    ComplexMatrix out(kept_off.size(), kept_off.size());
    for (std::size_t r = 0; r < kept_off.size(); r++) {
        for (std::size_t c = 0; c < kept_off.size(); c++) {
            Complex s = 0;
            for (std::size_t t : traced_off) {
                s += rho(kept_off[r] | t, kept_off[c] | t);
            }
            out(r, c) = s;
        }
    }
    return out;
}

double hermiticity_error(const ComplexMatrix &a) {
    if (!a.is_square()) {
        return INFINITY;
    }
    double worst = 0;
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = r; c < a.cols(); c++) {
            worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return worst;
}

static void fix_phase(std::vector<Complex> &v) {
    for (const auto &x : v) {
        if (std::abs(x) > 1e-12) {
            Complex phase = std::conj(x) / std::abs(x);
            for (auto &y : v) {
                y *= phase;
            }
            return;
        }
    }
}

EigenDecomposition hermitian_eig(const ComplexMatrix &a, double hermitian_tol) {
    if (!a.is_square() || a.rows() == 0) {
        throw ArgumentError("hermitian_eig: matrix must be square and non-empty");
    }
    if (!(hermiticity_error(a) <= hermitian_tol)) {
        throw ArgumentError("hermitian_eig: matrix is not Hermitian within tolerance");
    }
    const std::size_t n = a.rows();
    ComplexMatrix m = a;
    for (std::size_t r = 0; r < n; r++) {
        m(r, r) = m(r, r).real();
        for (std::size_t c = r + 1; c < n; c++) {
            Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
            m(r, c) = avg;
            m(c, r) = std::conj(avg);
        }
    }
    ComplexMatrix vecs = ComplexMatrix::identity(n);

    const double scale = m.frobenius_norm();
    const double stop = std::max(1e-14, 4e-16 * static_cast<double>(n)) * scale;
    for (int sweep = 0; sweep < 100 && scale > 0; sweep++) {
        double off = 0;
        for (std::size_t p = 0; p < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                off += std::norm(m(p, q));
            }
        }
        if (std::sqrt(2 * off) <= stop) {
            break;
        }
        for (std::size_t p = 0; p < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                Complex apq = m(p, q);
                double r = std::abs(apq);
                if (r == 0) {
                    continue;
                }
                // Phase-rotate q so the pivot block is real symmetric, then apply a real rotation.
                Complex phase_conj = std::conj(apq / r);
                double app = m(p, p).real();
                double aqq = m(q, q).real();
                double tau = (aqq - app) / (2 * r);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double c = 1 / std::sqrt(1 + t * t);
                double s = t * c;
                Complex g00 = c, g01 = s, g10 = -s * phase_conj, g11 = c * phase_conj;

                for (std::size_t k = 0; k < n; k++) {
                    Complex kp = m(k, p), kq = m(k, q);
                    m(k, p) = kp * g00 + kq * g10;
                    m(k, q) = kp * g01 + kq * g11;
                }
                for (std::size_t k = 0; k < n; k++) {
                    Complex pk = m(p, k), qk = m(q, k);
                    m(p, k) = std::conj(g00) * pk + std::conj(g10) * qk;
                    m(q, k) = std::conj(g01) * pk + std::conj(g11) * qk;
                }
                for (std::size_t k = 0; k < n; k++) {
                    Complex kp = vecs(k, p), kq = vecs(k, q);
                    vecs(k, p) = kp * g00 + kq * g10;
                    vecs(k, q) = kp * g01 + kq * g11;
                }
                m(p, q) = 0;
                m(q, p) = 0;
                m(p, p) = m(p, p).real();
                m(q, q) = m(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return m(i, i).real() < m(j, j).real();
    });

    EigenDecomposition out;
    for (std::size_t k : order) {
        out.values.push_back(m(k, k).real());
        std::vector<Complex> v(n);
        for (std::size_t r = 0; r < n; r++) {
            v[r] = vecs(r, k);
        }
        fix_phase(v);
        out.vectors.push_back(StateVector::normalize(std::move(v)));
    }
    return out;
}

double purity(const ComplexMatrix &rho) {
    if (!rho.is_square()) {
        throw ArgumentError("purity: matrix must be square");
    }
    double tr = rho.trace().real();
    if (!(std::abs(tr) > 1e-15)) {
        throw DegenerateInputError("purity: operator has zero trace");
    }
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    double f = rho.frobenius_norm();
    return f * f / (tr * tr);
}

std::size_t numerical_rank(const ComplexMatrix &rho, double tol) {
    auto eig = hermitian_eig(rho);
    return static_cast<std::size_t>(
        std::count_if(eig.values.begin(), eig.values.end(), [&](double x) { return x > tol; }));
}

double phase_distance(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw ArgumentError("phase_equal: dimension mismatch");
    }
    double nu = std::sqrt(std::real(inner(u, u)));
    double nv = std::sqrt(std::real(inner(v, v)));
    if (!(nu > 0) || !(nv > 0)) {
        throw DegenerateInputError("phase_equal: zero vector");
    }
    return 1.0 - std::abs(inner(u, v)) / (nu * nv);
}

bool phase_equal(const StateVector &u, const StateVector &v, double tol) {
    return phase_distance(u.amplitudes(), v.amplitudes()) < tol;
}

std::vector<std::vector<Complex>> gram_schmidt(const std::vector<std::vector<Complex>> &vectors, double drop_tol) {
    std::vector<std::vector<Complex>> basis;
    for (const auto &v : vectors) {
        std::vector<Complex> w = v;
        // Two passes of classical Gram-Schmidt keep the result orthogonal to machine precision.
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &b : basis) {
                Complex proj = inner(b, w);
                for (std::size_t k = 0; k < w.size(); k++) {
                    w[k] -= proj * b[k];
                }
            }
        }
        double n = std::sqrt(std::real(inner(w, w)));
        if (n <= drop_tol) {
            continue;
        }
        for (auto &x : w) {
            x /= n;
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

EigenDecomposition canonicalize_degenerate(EigenDecomposition eig, double degeneracy_tol) {
    const std::size_t count = eig.values.size();
    std::size_t start = 0;
    while (start < count) {
        std::size_t end = start + 1;
        while (end < count && eig.values[end] - eig.values[end - 1] <= degeneracy_tol) {
            end++;
        }
        std::size_t block = end - start;
        if (block > 1) {
            std::size_t dim = eig.vectors[start].dim();
            std::vector<std::vector<Complex>> projected;
            projected.reserve(dim);
            for (std::size_t j = 0; j < dim; j++) {
                std::vector<Complex> p(dim);
                for (std::size_t k = start; k < end; k++) {
                    Complex coeff = std::conj(eig.vectors[k][j]);
                    auto amps = eig.vectors[k].amplitudes();
                    for (std::size_t r = 0; r < dim; r++) {
                        p[r] += coeff * amps[r];
                    }
                }
                projected.push_back(std::move(p));
            }
            // Any residual below 1/sqrt(dim) can be skipped without running out of vectors.
            auto basis = gram_schmidt(projected, 1e-6);
            basis.resize(block);
            for (std::size_t k = 0; k < block; k++) {
                fix_phase(basis[k]);
                eig.vectors[start + k] = StateVector::normalize(std::move(basis[k]));
            }
        }
        start = end;
    }
    return eig;
}

}  // namespace steerlab
