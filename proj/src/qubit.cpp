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

#include "mzpovm/qubit.hpp"

#include <algorithm>
#include <string>

namespace mzpovm {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::BlochOutOfBall: return "BlochOutOfBall";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InvalidStochasticMatrix: return "InvalidStochasticMatrix";
        case ErrorKind::NotAPartition: return "NotAPartition";
        case ErrorKind::NotJointlyMeasurable: return "NotJointlyMeasurable";
        case ErrorKind::NotTwoOutcome: return "NotTwoOutcome";
        case ErrorKind::InvalidBasis: return "InvalidBasis";
        case ErrorKind::NotAProjection: return "NotAProjection";
        case ErrorKind::InvalidScheme: return "InvalidScheme";
        case ErrorKind::UnsupportedExperiment: return "UnsupportedExperiment";
        case ErrorKind::ZeroProbabilityCondition: return "ZeroProbabilityCondition";
        case ErrorKind::NotSharp: return "NotSharp";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Vector<4> kron(const Vector<2> &a, const Vector<2> &b) {
    return Vector<4>{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

StateVector2 perpendicular(const StateVector2 &v) {
    return StateVector2(Vector<2>{-std::conj(v[1]), std::conj(v[0])});
}

// ---------------------------------------------------------------------------
// Bloch vectors and density operators

BlochVector::BlochVector(double x, double y, double z) : r_{x, y, z} {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
        throw Error(ErrorKind::NonFinite, "Bloch vector has non-finite component");
    if (norm() > 1.0 + tol::kStructural)
        throw Error(ErrorKind::BlochOutOfBall, "|r| = " + std::to_string(norm()) + " exceeds 1");
}

BlochVector BlochVector::unit(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(n) || n < tol::kZeroNorm)
        throw Error(ErrorKind::InvalidArgument, "cannot normalize a zero direction");
    return BlochVector(x / n, y / n, z / n);
}

double BlochVector::norm() const { return std::sqrt(dot(*this)); }

double BlochVector::dot(const BlochVector &o) const {
    return r_[0] * o.r_[0] + r_[1] * o.r_[1] + r_[2] * o.r_[2];
}

DensityOperator::DensityOperator(const Operator2 &m) {
    if (!m.is_finite()) throw Error(ErrorKind::NonFinite, "density operator has non-finite entries");
    if (!is_hermitian(m)) throw Error(ErrorKind::NotHermitian, "density operator must be Hermitian");
    m_ = 0.5 * (m + m.adjoint());
    if (std::abs(m_.trace() - 1.0) > tol::kStructural)
        throw Error(ErrorKind::InvalidArgument, "density operator trace is not 1");
    if (min_eigenvalue(m_) < -tol::kStructural)
        throw Error(ErrorKind::InvalidArgument, "density operator is not positive");
}

DensityOperator DensityOperator::pure(const StateVector2 &psi) {
    return DensityOperator(Operator2::projector(psi.vec()));
}

double DensityOperator::purity() const { return (m_ * m_).trace().real(); }

// ---------------------------------------------------------------------------
// Pauli algebra

Operator2 pauli(Axis axis) {
    const Complex i{0.0, 1.0};
    switch (axis) {
        case Axis::X: return Operator2{0.0, 1.0, 1.0, 0.0};
        case Axis::Y: return Operator2{0.0, -i, i, 0.0};
        case Axis::Z: return Operator2{1.0, 0.0, 0.0, -1.0};
    }
    return Operator2{};
}

Operator2 from_pauli_components(double a, double nx, double ny, double nz) {
    return Operator2{Complex{a + nz, 0.0}, Complex{nx, -ny}, Complex{nx, ny}, Complex{a - nz, 0.0}};
}

Operator2 pauli_dot(double nx, double ny, double nz) { return from_pauli_components(0.0, nx, ny, nz); }

Operator2 pauli_dot(const BlochVector &n) { return pauli_dot(n.x(), n.y(), n.z()); }

std::array<double, 4> pauli_components(const Operator2 &m) {
    const double a = 0.5 * (m(0, 0).real() + m(1, 1).real());
    const double nz = 0.5 * (m(0, 0).real() - m(1, 1).real());
    const Complex off = 0.5 * (m(1, 0) + std::conj(m(0, 1)));
    return {a, off.real(), off.imag(), nz};
}

DensityOperator density_from_bloch(const BlochVector &r) {
    return DensityOperator(from_pauli_components(0.5, 0.5 * r.x(), 0.5 * r.y(), 0.5 * r.z()));
}

BlochVector bloch_from_density(const DensityOperator &rho) {
    const auto [a, x, y, z] = pauli_components(rho.matrix());
    (void)a;
    return BlochVector(2 * x, 2 * y, 2 * z);
}

BlochVector bloch_from_state(const StateVector2 &psi) { return bloch_from_density(DensityOperator::pure(psi)); }

double expectation(const Operator2 &a, const DensityOperator &rho) {
    if (!is_hermitian(a)) throw Error(ErrorKind::NotHermitian, "observable must be Hermitian");
    const Complex value = (a * rho.matrix()).trace();
    if (std::abs(value.imag()) >= tol::kStructural)
        throw Error(ErrorKind::NotHermitian, "expectation has an imaginary part");
    return value.real();
}

double variance(const Operator2 &a, const DensityOperator &rho) {
    const double mean = expectation(a, rho);
    return expectation(a * a, rho) - mean * mean;
}

// ---------------------------------------------------------------------------
// Compound system

Operator4 tensor(const Operator2 &a, const Operator2 &b) {
    Operator4 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

Operator2 partial_trace_probe(const Operator4 &m) {
    Operator2 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
    return out;
}

DensityOperator partial_trace_probe(const StateVector4 &psi) {
    return DensityOperator(partial_trace_probe(Operator4::projector(psi.vec())));
}

namespace {

// Phase so that the first component (or the second, if the first vanishes) is real positive.
StateVector2 fix_phase(const StateVector2 &v) {
    const Complex lead = std::abs(v[0]) > tol::kZeroNorm ? v[0] : v[1];
    const Complex phase = std::conj(lead) / std::abs(lead);
    return StateVector2::normalized(phase * v.vec());
}

// (<u| (x) I) psi
Vector<2> contract_photon(const Vector<2> &u, const Vector<4> &psi) {
    return Vector<2>{std::conj(u[0]) * psi[0] + std::conj(u[1]) * psi[2],
                     std::conj(u[0]) * psi[1] + std::conj(u[1]) * psi[3]};
}

}  // namespace

SchmidtDecomposition schmidt(const StateVector4 &psi) {
    const Operator2 reduced = partial_trace_probe(Operator4::projector(psi.vec()));
    const auto [mean, nx, ny, nz] = pauli_components(reduced);
    (void)mean;
    const double half_gap = std::sqrt(nx * nx + ny * ny + nz * nz);

    StateVector2 u1 = StateVector2::basis(0);
    if (half_gap > tol::kIdentity) {
        u1 = fix_phase(StateVector2::normalized(eig_hermitian(reduced).front().vector));
    }
    StateVector2 u2 = fix_phase(perpendicular(u1));

    Vector<2> chi1 = contract_photon(u1.vec(), psi.vec());
    Vector<2> chi2 = contract_photon(u2.vec(), psi.vec());
    if (chi1.norm_squared() < chi2.norm_squared()) {
        std::swap(u1, u2);
        std::swap(chi1, chi2);
    }
    const double w = std::clamp(chi1.norm_squared(), 0.5, 1.0);
    const StateVector2 phi1 = StateVector2::normalized(chi1);
    const StateVector2 phi2 = chi2.norm() > tol::kZeroNorm ? StateVector2::normalized(chi2) : perpendicular(phi1);
    return SchmidtDecomposition{w, {u1, u2}, {phi1, phi2}};
}

Operator4 adapted_observable(const SchmidtDecomposition &d) {
    const Vector<4> s1 = kron(d.photon[0].vec(), d.probe[0].vec());
    const Vector<4> s2 = kron(d.photon[1].vec(), d.probe[1].vec());
    return Operator4::projector(s1) - Operator4::projector(s2);
}

double adapted_observable_variance(const StateVector4 &psi) {
    const Operator4 s = adapted_observable(schmidt(psi));
    const double mean = sandwich(psi.vec(), s, psi.vec()).real();
    const double second = sandwich(psi.vec(), s * s, psi.vec()).real();
    return std::max(0.0, second - mean * mean);
}

}  // namespace mzpovm
