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

#pragma once

#include <complex>
#include <vector>

#include "mzpovm/qubit.hpp"

namespace mzpovm {

/// Orthonormal basis of C^n, n in [1, 16]. Gram matrix checked to 1e-10.
class OrthonormalBasis {
   public:
    using Column = std::vector<Complex>;

    /// Throws InvalidBasis on wrong shape, non-finite entries or a Gram defect above 1e-10.
    explicit OrthonormalBasis(std::vector<Column> vectors);

    static OrthonormalBasis standard(std::size_t n);
    template <std::size_t N>
    static OrthonormalBasis from_vectors(const std::array<Vector<N>, N> &vs) {
        std::vector<Column> cols;
        for (const auto &v : vs) cols.emplace_back(v.data().begin(), v.data().end());
        return OrthonormalBasis(std::move(cols));
    }
    /// Eigenbasis of a Pauli operator, +1 eigenvector first.
    static OrthonormalBasis pauli_eigenbasis(Axis axis);

    std::size_t dimension() const { return vectors_.size(); }
    const Column &operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<Column> &vectors() const { return vectors_; }

   private:
    std::vector<Column> vectors_;
};

/// phi_l = n^{-1/2} sum_k exp(2 pi i k l / n) psi_k, indices from 0.
OrthonormalBasis fourier_partner(const OrthonormalBasis &b);

/// True iff every |<a_k|b_l>| is within tol of n^{-1/2}. Throws DimensionMismatch.
bool is_mutually_unbiased(const OrthonormalBasis &a, const OrthonormalBasis &b, double tolerance);

/// Projection onto the intersection of the ranges of P and Q, read off as the
/// eigenvalue-2 eigenspace of P + Q.
Operator2 projection_meet(const Operator2 &p, const Operator2 &q);
Operator4 projection_meet(const Operator4 &p, const Operator4 &q);

/// P ^ Q = P ^ (I - Q) = (I - P) ^ Q = O. Throws NotAProjection.
bool probabilistically_complementary(const Operator2 &p, const Operator2 &q);

}  // namespace mzpovm
