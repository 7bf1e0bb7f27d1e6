// Copyright 2026 The mzpovm Authors
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

// Dense complex linear algebra for the photon (dimension 2) and the
// photon-probe compound (dimension 4).
//
// Basis conventions:
//   photon: |1>, |2> with |1> the +1 eigenvector of sigma_z.
//   compound: |1>|q1>, |1>|q2>, |2>|q1>, |2>|q2> (photon index slow).

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mzpovm/error.hpp"

namespace mzpovm {

using Complex = std::complex<double>;

namespace tol {
/// Structural predicates: Hermitian, PSD, unitary, normalized.
inline constexpr double kStructural = 1e-10;
/// Analytic identities.
inline constexpr double kIdentity = 1e-12;
/// Off-diagonal target of the Jacobi sweep.
inline constexpr double kJacobi = 1e-13;
/// Below this a vector is treated as zero and never normalized.
inline constexpr double kZeroNorm = 1e-12;
}  // namespace tol

template <std::size_t N>
class Vector {
   public:
    Vector() { data_.fill(Complex{}); }
    Vector(std::initializer_list<Complex> values) {
        data_.fill(Complex{});
        std::size_t i = 0;
        for (const Complex &v : values) {
            if (i < N) data_[i++] = v;
        }
    }
    explicit Vector(const std::array<Complex, N> &values) : data_(values) {}

    static constexpr std::size_t size() { return N; }
    Complex &operator[](std::size_t i) { return data_[i]; }
    const Complex &operator[](std::size_t i) const { return data_[i]; }
    const std::array<Complex, N> &data() const { return data_; }

    double norm_squared() const {
        double s = 0;
        for (const Complex &c : data_) s += std::norm(c);
        return s;
    }
    double norm() const { return std::sqrt(norm_squared()); }
    bool is_finite() const {
        for (const Complex &c : data_) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
        }
        return true;
    }

    Vector &operator+=(const Vector &o) {
        for (std::size_t i = 0; i < N; ++i) data_[i] += o.data_[i];
        return *this;
    }
    Vector &operator-=(const Vector &o) {
        for (std::size_t i = 0; i < N; ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Vector &operator*=(Complex s) {
        for (Complex &c : data_) c *= s;
        return *this;
    }
    friend Vector operator+(Vector a, const Vector &b) { return a += b; }
    friend Vector operator-(Vector a, const Vector &b) { return a -= b; }
    friend Vector operator*(Complex s, Vector a) { return a *= s; }

   private:
    std::array<Complex, N> data_;
};

/// <a|b>, antilinear in the first argument.
template <std::size_t N>
Complex inner(const Vector<N> &a, const Vector<N> &b) {
    Complex s{};
    for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

template <std::size_t N>
double max_abs_diff(const Vector<N> &a, const Vector<N> &b) {
    double m = 0;
    for (std::size_t i = 0; i < N; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// Row-major square matrix.
template <std::size_t N>
class Matrix {
   public:
    Matrix() { data_.fill(Complex{}); }
    /// Row-major entries; missing trailing entries are zero.
    Matrix(std::initializer_list<Complex> row_major) {
        data_.fill(Complex{});
        std::size_t i = 0;
        for (const Complex &v : row_major) {
            if (i < N * N) data_[i++] = v;
        }
    }

    static Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }
    static Matrix zero() { return Matrix{}; }
    static Matrix outer(const Vector<N> &a, const Vector<N> &b) {
        Matrix m;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) m(r, c) = a[r] * std::conj(b[c]);
        return m;
    }
    static Matrix projector(const Vector<N> &v) { return outer(v, v); }

    static constexpr std::size_t dim() { return N; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

    Matrix adjoint() const {
        Matrix m;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
        return m;
    }
    Complex trace() const {
        Complex t{};
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }
    double max_abs() const {
        double m = 0;
        for (const Complex &c : data_) m = std::max(m, std::abs(c));
        return m;
    }
    bool is_finite() const {
        for (const Complex &c : data_) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
        }
        return true;
    }

    Matrix &operator+=(const Matrix &o) {
        for (std::size_t i = 0; i < N * N; ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix &operator-=(const Matrix &o) {
        for (std::size_t i = 0; i < N * N; ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix &operator*=(Complex s) {
        for (Complex &c : data_) c *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
    friend Matrix operator*(double s, Matrix a) { return a *= Complex{s, 0.0}; }
    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        Matrix m;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t k = 0; k < N; ++k) {
                const Complex ark = a(r, k);
                if (ark == Complex{}) continue;
                for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
            }
        return m;
    }
    friend Vector<N> operator*(const Matrix &a, const Vector<N> &v) {
        Vector<N> out;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) out[r] += a(r, c) * v[c];
        return out;
    }

   private:
    std::array<Complex, N * N> data_;
};

using Operator2 = Matrix<2>;
using Operator4 = Matrix<4>;

template <std::size_t N>
double max_abs_diff(const Matrix<N> &a, const Matrix<N> &b) {
    return (a - b).max_abs();
}

/// <a|M|b>
template <std::size_t N>
Complex sandwich(const Vector<N> &a, const Matrix<N> &m, const Vector<N> &b) {
    return inner(a, m * b);
}

template <std::size_t N>
bool is_hermitian(const Matrix<N> &m, double tolerance = tol::kStructural) {
    return max_abs_diff(m, m.adjoint()) <= tolerance;
}

template <std::size_t N>
bool is_unitary(const Matrix<N> &m, double tolerance = tol::kStructural) {
    return max_abs_diff(m.adjoint() * m, Matrix<N>::identity()) <= tolerance;
}

/// Idempotent and Hermitian.
template <std::size_t N>
bool is_projection(const Matrix<N> &m, double tolerance = tol::kStructural) {
    return is_hermitian(m, tolerance) && max_abs_diff(m * m, m) <= tolerance;
}

/// Unit vector with norm checked on construction.
template <std::size_t N>
class StateVector {
   public:
    /// Throws NotNormalized unless the norm is 1 within 1e-10.
    explicit StateVector(const Vector<N> &v) : v_(v) {
        if (!v.is_finite()) throw Error(ErrorKind::NonFinite, "state vector has non-finite amplitude");
        if (std::abs(v.norm() - 1.0) > tol::kStructural)
            throw Error(ErrorKind::NotNormalized, "state vector norm is " + std::to_string(v.norm()));
    }
    StateVector(std::initializer_list<Complex> values) : StateVector(Vector<N>(values)) {}

    /// Rescales to unit norm; vectors with norm below 1e-12 are rejected.
    static StateVector normalized(const Vector<N> &v) {
        if (!v.is_finite()) throw Error(ErrorKind::NonFinite, "state vector has non-finite amplitude");
        const double n = v.norm();
        if (n < tol::kZeroNorm) throw Error(ErrorKind::NotNormalized, "cannot normalize a zero vector");
        return StateVector((1.0 / n) * v);
    }
    static StateVector basis(std::size_t i) {
        Vector<N> v;
        v[i] = 1.0;
        return StateVector(v);
    }

    const Vector<N> &vec() const { return v_; }
    const Complex &operator[](std::size_t i) const { return v_[i]; }
    operator const Vector<N> &() const { return v_; }

   private:
    Vector<N> v_;
};

using StateVector2 = StateVector<2>;
using StateVector4 = StateVector<4>;

Vector<4> kron(const Vector<2> &a, const Vector<2> &b);

/// Orthogonal partner (a, b) -> (-conj(b), conj(a)).
StateVector2 perpendicular(const StateVector2 &v);

/// Real 3-vector with |r| <= 1 (checked with slack 1e-10).
class BlochVector {
   public:
    BlochVector() = default;
    BlochVector(double x, double y, double z);

    static BlochVector unit(double x, double y, double z);

    double x() const { return r_[0]; }
    double y() const { return r_[1]; }
    double z() const { return r_[2]; }
    double operator[](std::size_t i) const { return r_[i]; }
    const std::array<double, 3> &components() const { return r_; }
    double norm() const;
    double dot(const BlochVector &o) const;

   private:
    std::array<double, 3> r_{0.0, 0.0, 0.0};
};

/// Trace-one positive Hermitian 2x2 matrix.
class DensityOperator {
   public:
    /// Throws NotHermitian, or InvalidArgument for trace/positivity violations.
    explicit DensityOperator(const Operator2 &m);

    static DensityOperator pure(const StateVector2 &psi);

    const Operator2 &matrix() const { return m_; }
    double purity() const;

   private:
    Operator2 m_;
};

enum class Axis { X, Y, Z };

Operator2 pauli(Axis axis);

/// n . sigma for an arbitrary real 3-vector.
Operator2 pauli_dot(double nx, double ny, double nz);
Operator2 pauli_dot(const BlochVector &n);

/// a I + n . sigma, the generic Hermitian 2x2 matrix.
Operator2 from_pauli_components(double a, double nx, double ny, double nz);

/// Decomposes a Hermitian 2x2 matrix as a I + n . sigma; returns {a, nx, ny, nz}.
std::array<double, 4> pauli_components(const Operator2 &m);

DensityOperator density_from_bloch(const BlochVector &r);
BlochVector bloch_from_density(const DensityOperator &rho);
BlochVector bloch_from_state(const StateVector2 &psi);

/// tr[A rho]; A must be Hermitian.
double expectation(const Operator2 &a, const DensityOperator &rho);
double variance(const Operator2 &a, const DensityOperator &rho);

Operator4 tensor(const Operator2 &a, const Operator2 &b);

/// Reduced photon state of a normalized compound vector.
DensityOperator partial_trace_probe(const StateVector4 &psi);
/// Reduced photon block of an arbitrary compound operator (no validation).
Operator2 partial_trace_probe(const Operator4 &m);

template <std::size_t N>
struct EigenPair {
    double value;
    Vector<N> vector;
};

/// Eigenvalues in descending order. The 2x2 case uses the closed form, larger
/// sizes use cyclic complex Jacobi rotations.
std::vector<EigenPair<2>> eig_hermitian(const Operator2 &a);
std::vector<EigenPair<4>> eig_hermitian(const Operator4 &a);

/// Cyclic Jacobi for any supported size (2 and 4); the 2x2 overload of
/// eig_hermitian never calls this, so the two routes check each other.
template <std::size_t N>
std::vector<EigenPair<N>> jacobi_eigen(const Matrix<N> &a);

template <std::size_t N>
double min_eigenvalue(const Matrix<N> &a) {
    return eig_hermitian(a).back().value;
}

/// Psi = sqrt(w) photon[0] (x) probe[0] + sqrt(1-w) photon[1] (x) probe[1], w >= 1/2.
struct SchmidtDecomposition {
    double weight;
    std::array<StateVector2, 2> photon;
    std::array<StateVector2, 2> probe;
};

SchmidtDecomposition schmidt(const StateVector4 &psi);

/// S = |s1><s1| - |s2><s2| on the Schmidt product vectors s_j = photon_j (x) probe_j.
Operator4 adapted_observable(const SchmidtDecomposition &d);

/// Variance of the adapted observable in psi; equals 4 w (1 - w).
double adapted_observable_variance(const StateVector4 &psi);

}  // namespace mzpovm
