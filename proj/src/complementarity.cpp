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

#include "mzpovm/complementarity.hpp"

#include <numbers>

namespace mzpovm {
namespace {

Complex column_inner(const OrthonormalBasis::Column &a, const OrthonormalBasis::Column &b) {
    Complex s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

// Eigenvalues of P + Q within this distance of 2 span the meet.
constexpr double kMeetEigenTolerance = 1e-8;

template <std::size_t N>
Matrix<N> meet_impl(const Matrix<N> &p, const Matrix<N> &q) {
    if (!is_projection(p) || !is_projection(q))
        throw Error(ErrorKind::NotAProjection, "meet needs orthogonal projections");
    Matrix<N> out;
    for (const auto &pair : eig_hermitian(p + q)) {
        if (std::abs(pair.value - 2.0) <= kMeetEigenTolerance) out += Matrix<N>::projector(pair.vector);
    }
    return out;
}

}  // namespace

OrthonormalBasis::OrthonormalBasis(std::vector<Column> vectors) : vectors_(std::move(vectors)) {
    const std::size_t n = vectors_.size();
    if (n == 0 || n > 16) throw Error(ErrorKind::InvalidBasis, "dimension must be in [1, 16]");
    for (const Column &v : vectors_) {
        if (v.size() != n) throw Error(ErrorKind::InvalidBasis, "every vector needs n components");
        for (const Complex &c : v) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw Error(ErrorKind::InvalidBasis, "non-finite component");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex expected = i == j ? 1.0 : 0.0;
            if (std::abs(column_inner(vectors_[i], vectors_[j]) - expected) > tol::kStructural)
                throw Error(ErrorKind::InvalidBasis, "Gram matrix deviates from the identity");
        }
    }
}

OrthonormalBasis OrthonormalBasis::standard(std::size_t n) {
    std::vector<Column> cols(n, Column(n, Complex{}));
    for (std::size_t i = 0; i < n; ++i) cols[i][i] = 1.0;
    return OrthonormalBasis(std::move(cols));
}

OrthonormalBasis OrthonormalBasis::pauli_eigenbasis(Axis axis) {
    const auto eig = eig_hermitian(pauli(axis));
    return from_vectors<2>({eig[0].vector, eig[1].vector});
}

OrthonormalBasis fourier_partner(const OrthonormalBasis &b) {
    const std::size_t n = b.dimension();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<OrthonormalBasis::Column> out(n, OrthonormalBasis::Column(n, Complex{}));
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t k = 0; k < n; ++k) {
            // Reduce k*l mod n before scaling to keep the angle exact for large products.
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * l) % n) / static_cast<double>(n);
            const Complex w = scale * std::polar(1.0, angle);
            for (std::size_t i = 0; i < n; ++i) out[l][i] += w * b[k][i];
        }
    }
    return OrthonormalBasis(std::move(out));
}

bool is_mutually_unbiased(const OrthonormalBasis &a, const OrthonormalBasis &b, double tolerance) {
    if (a.dimension() != b.dimension())
        throw Error(ErrorKind::DimensionMismatch, "bases have different dimensions");
    const double target = 1.0 / std::sqrt(static_cast<double>(a.dimension()));
    for (const auto &u : a.vectors()) {
        for (const auto &v : b.vectors()) {
            if (std::abs(std::abs(column_inner(u, v)) - target) > tolerance) return false;
        }
    }
    return true;
}

Operator2 projection_meet(const Operator2 &p, const Operator2 &q) { return meet_impl(p, q); }
Operator4 projection_meet(const Operator4 &p, const Operator4 &q) { return meet_impl(p, q); }

bool probabilistically_complementary(const Operator2 &p, const Operator2 &q) {
    const Operator2 id = Operator2::identity();
    const auto is_zero = [](const Operator2 &m) { return m.max_abs() <= tol::kStructural; };
    return is_zero(projection_meet(p, q)) && is_zero(projection_meet(p, id - q)) &&
           is_zero(projection_meet(id - p, q));
}

}  // namespace mzpovm
