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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mzpovm/qubit.hpp"

namespace mzpovm {
namespace {

template <std::size_t N>
Matrix<N> checked_hermitian_part(const Matrix<N> &a) {
    if (!a.is_finite()) throw Error(ErrorKind::NonFinite, "matrix has non-finite entries");
    if (!is_hermitian(a)) throw Error(ErrorKind::NotHermitian, "eigendecomposition needs a Hermitian matrix");
    return 0.5 * (a + a.adjoint());
}

template <std::size_t N>
double off_diagonal_norm(const Matrix<N> &a) {
    double s = 0;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

template <std::size_t N>
std::vector<EigenPair<N>> sorted_pairs(const Matrix<N> &diag, const Matrix<N> &vectors) {
    std::array<std::size_t, N> order;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return diag(i, i).real() > diag(j, j).real(); });
    std::vector<EigenPair<N>> out;
    out.reserve(N);
    for (std::size_t idx : order) {
        Vector<N> v;
        for (std::size_t r = 0; r < N; ++r) v[r] = vectors(r, idx);
        out.push_back({diag(idx, idx).real(), v});
    }
    return out;
}

}  // namespace

template <std::size_t N>
std::vector<EigenPair<N>> jacobi_eigen(const Matrix<N> &input) {
    Matrix<N> a = checked_hermitian_part(input);
    Matrix<N> v = Matrix<N>::identity();
    double scale = 0;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) scale += std::norm(a(r, c));
    const double target = tol::kJacobi * std::max(1.0, std::sqrt(scale));

    constexpr int kMaxSweeps = 64;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag < 1e-300) continue;
                // Phase rotation makes a(p,q) real, then a real Givens rotation zeros it.
                const Complex phase = a(p, q) / mag;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                Matrix<N> j = Matrix<N>::identity();
                j(p, p) = c;
                j(p, q) = s;
                j(q, p) = -s * std::conj(phase);
                j(q, q) = c * std::conj(phase);
                a = j.adjoint() * a * j;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                v = v * j;
            }
        }
    }
    return sorted_pairs(a, v);
}

template std::vector<EigenPair<2>> jacobi_eigen<2>(const Matrix<2> &);
template std::vector<EigenPair<4>> jacobi_eigen<4>(const Matrix<4> &);

std::vector<EigenPair<2>> eig_hermitian(const Operator2 &input) {
    const Operator2 a = checked_hermitian_part(input);
    const auto [mean, nx, ny, nz] = pauli_components(a);
    const double len = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (len == 0.0) {
        return {{mean, Vector<2>{1.0, 0.0}}, {mean, Vector<2>{0.0, 1.0}}};
    }
    // Largest column of the projector (I + n.sigma / |n|) / 2.
    const double ux = nx / len, uy = ny / len, uz = nz / len;
    Vector<2> plus;
    if (uz >= 0) {
        plus = Vector<2>{Complex{1.0 + uz, 0.0}, Complex{ux, uy}};
    } else {
        plus = Vector<2>{Complex{ux, -uy}, Complex{1.0 - uz, 0.0}};
    }
    const StateVector2 up = StateVector2::normalized(plus);
    const StateVector2 down = perpendicular(up);
    return {{mean + len, up.vec()}, {mean - len, down.vec()}};
}

std::vector<EigenPair<4>> eig_hermitian(const Operator4 &a) { return jacobi_eigen(a); }

}  // namespace mzpovm
