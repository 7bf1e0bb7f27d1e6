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

#include "mzpovm/relations.hpp"

#include <algorithm>
#include <cmath>

namespace mzpovm {
namespace {

double mean_of(Axis axis, const DensityOperator &rho) { return expectation(pauli(axis), rho); }

void require_normalized(Complex alpha, Complex beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol::kStructural)
        throw Error(ErrorKind::NotNormalized, "|alpha|^2 + |beta|^2 must be 1");
}

}  // namespace

const char *relation_kind_name(RelationKind kind) {
    switch (kind) {
        case RelationKind::Geq: return "geq";
        case RelationKind::Leq: return "leq";
        case RelationKind::Eq: return "eq";
    }
    return "eq";
}

RelationReport make_report(std::string name, double lhs, double rhs, RelationKind kind, double tolerance) {
    RelationReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.kind = kind;
    switch (kind) {
        case RelationKind::Geq:
            r.slack = lhs - rhs;
            r.satisfied = r.slack >= -tolerance;
            break;
        case RelationKind::Leq:
            r.slack = rhs - lhs;
            r.satisfied = r.slack >= -tolerance;
            break;
        case RelationKind::Eq:
            r.slack = std::abs(lhs - rhs);
            r.satisfied = r.slack <= tolerance;
            break;
    }
    return r;
}

RelationReport variance_ur(const DensityOperator &rho) {
    const Operator2 sx = pauli(Axis::X), sz = pauli(Axis::Z);
    const double lhs = variance(sx, rho) * variance(sz, rho);

    // <[sx, sz]> is purely imaginary; its modulus enters the bound.
    const double commutator = std::abs(((sx * sz - sz * sx) * rho.matrix()).trace());
    const double anticommutator = expectation(sx * sz + sz * sx, rho);
    const double covariance = anticommutator - 2.0 * mean_of(Axis::X, rho) * mean_of(Axis::Z, rho);
    const double rhs = 0.25 * commutator * commutator + 0.25 * covariance * covariance;

    RelationReport r = make_report("variance_uncertainty_xz", lhs, rhs, RelationKind::Geq);
    const double x = mean_of(Axis::X, rho), y = mean_of(Axis::Y, rho), z = mean_of(Axis::Z, rho);
    r.details["identity_rhs"] = y * y + x * x * z * z;
    r.details["bloch_norm_sq"] = x * x + y * y + z * z;
    return r;
}

double shannon_entropy(const DiscretePovm &p, const DensityOperator &rho) {
    double h = 0.0;
    for (double prob : p.probabilities(rho)) {
        const double q = std::clamp(prob, 0.0, 1.0);
        if (q > 0.0) h -= q * std::log2(q);
    }
    return h;
}

RelationReport entropic_bound(const DiscretePovm &a, const DiscretePovm &b, const StateVector2 &psi) {
    if (!validate(a).sharp || !validate(b).sharp)
        throw Error(ErrorKind::NotSharp, "entropic bound needs two projection valued measures");
    const DensityOperator rho = DensityOperator::pure(psi);
    const double lhs = shannon_entropy(a, rho) + shannon_entropy(b, rho);

    double best = 0.0;
    for (const Effect &p : a.effects()) {
        const double np = std::sqrt(std::max(0.0, sandwich(psi.vec(), p.op, psi.vec()).real()));
        if (np < tol::kZeroNorm) continue;
        for (const Effect &q : b.effects()) {
            const double nq = std::sqrt(std::max(0.0, sandwich(psi.vec(), q.op, psi.vec()).real()));
            if (nq < tol::kZeroNorm) continue;
            best = std::max(best, std::abs(sandwich(psi.vec(), p.op * q.op, psi.vec())) / (np * nq));
        }
    }
    // best <= 1 up to rounding; clamp so the bound is never negative.
    const double rhs = best > 0.0 ? -2.0 * std::log2(std::min(best, 1.0)) : 0.0;
    RelationReport r = make_report("entropic_bound", lhs, rhs, RelationKind::Geq);
    r.details["max_overlap_ratio"] = best;
    return r;
}

std::vector<RelationReport> triple_relations(const DensityOperator &rho) {
    const double hx = shannon_entropy(spectral_measure(Axis::X), rho);
    const double hy = shannon_entropy(spectral_measure(Axis::Y), rho);
    const double hz = shannon_entropy(spectral_measure(Axis::Z), rho);
    const double var_sum =
        variance(pauli(Axis::X), rho) + variance(pauli(Axis::Y), rho) + variance(pauli(Axis::Z), rho);
    const Contrasts c = contrasts(rho);
    const double contrast_sum =
        c.path * c.path + c.interference_x * c.interference_x + c.interference_y * c.interference_y;
    return {make_report("triple_entropy", hx + hy + hz, 2.0, RelationKind::Geq),
            make_report("triple_variance", var_sum, 2.0, RelationKind::Geq),
            make_report("triple_contrast", contrast_sum, 1.0, RelationKind::Leq)};
}

Contrasts contrasts(const DensityOperator &rho) {
    const double x = mean_of(Axis::X, rho), y = mean_of(Axis::Y, rho), z = mean_of(Axis::Z, rho);
    return {std::abs(z), std::abs(x), std::abs(y), std::hypot(x, y)};
}

DistinguishabilityResult distinguishability(Complex alpha, Complex beta, const StateVector2 &p1,
                                            const StateVector2 &p2) {
    require_normalized(alpha, beta);
    const BlochVector b1 = bloch_from_state(p1), b2 = bloch_from_state(p2);
    const double wa = std::norm(alpha), wb = std::norm(beta);
    const double vx = wa * b1.x() - wb * b2.x();
    const double vy = wa * b1.y() - wb * b2.y();
    const double vz = wa * b1.z() - wb * b2.z();
    const double len = std::sqrt(vx * vx + vy * vy + vz * vz);

    DistinguishabilityResult out;
    if (len < tol::kIdentity) return out;
    out.r0 = BlochVector::unit(vx, vy, vz);
    out.L = 0.5 * (1.0 + std::min(len, 1.0));
    out.D = 2.0 * out.L - 1.0;
    return out;
}

double distinguishability_closed_form(Complex alpha, Complex beta, const StateVector2 &p1, const StateVector2 &p2) {
    require_normalized(alpha, beta);
    const double overlap = std::norm(inner(p1.vec(), p2.vec()));
    return std::sqrt(std::max(0.0, 1.0 - 4.0 * std::norm(alpha) * std::norm(beta) * overlap));
}

DiscretePovm coincidence_povm(const StateVector2 &p1, const StateVector2 &p2, const BlochVector &r) {
    if (std::abs(r.norm() - 1.0) > tol::kStructural)
        throw Error(ErrorKind::NotNormalized, "pointer direction must be a unit vector");
    const BlochVector b1 = bloch_from_state(p1), b2 = bloch_from_state(p2);
    const double diff = r.x() * (b1.x() - b2.x()) + r.y() * (b1.y() - b2.y()) + r.z() * (b1.z() - b2.z());
    const double sum = r.x() * (b1.x() + b2.x()) + r.y() * (b1.y() + b2.y()) + r.z() * (b1.z() + b2.z());
    const Operator2 h1 = from_pauli_components(0.5 * (1.0 + 0.5 * diff), 0, 0, 0.25 * sum);
    return DiscretePovm({{"1", h1}, {"2", Operator2::identity() - h1}});
}

double outcome_variance(const DiscretePovm &p, const DensityOperator &rho) {
    if (p.size() != 2) throw Error(ErrorKind::NotTwoOutcome, "outcome variance needs exactly two outcomes");
    const auto probs = p.probabilities(rho);
    const double mean = probs[0] - probs[1];
    return 1.0 - mean * mean;
}

Visibility visibility_reduced(const DensityOperator &rho_e) {
    const Complex off = rho_e.matrix()(1, 0);
    const double value = 2.0 * std::abs(off);
    // tr(rho sigma_n) = 2 Re(rho_21 e^{-i d}) peaks at d = arg rho_21.
    if (value < tol::kIdentity) return {value, BlochVector(1.0, 0.0, 0.0)};
    return {value, BlochVector::unit(off.real(), off.imag(), 0.0)};
}

double visibility_full_sphere(const DensityOperator &rho) { return bloch_from_density(rho).norm(); }

DensityOperator marked_photon_state(Complex alpha, Complex beta, const StateVector2 &p1, const StateVector2 &p2) {
    require_normalized(alpha, beta);
    const Vector<4> marked = kron(Vector<2>{alpha, 0.0}, p1.vec()) + kron(Vector<2>{0.0, beta}, p2.vec());
    return partial_trace_probe(StateVector4(marked));
}

std::pair<RelationReport, RelationReport> erasure_duality(Complex alpha, Complex beta, const StateVector2 &p1,
                                                          const StateVector2 &p2) {
    const DistinguishabilityResult dist = distinguishability(alpha, beta, p1, p2);
    const DensityOperator rho_e = marked_photon_state(alpha, beta, p1, p2);
    const Visibility vis = visibility_reduced(rho_e);
    const DensityOperator input = DensityOperator::pure(StateVector2{alpha, beta});

    RelationReport duality =
        make_report("visibility_distinguishability", vis.value * vis.value + dist.D * dist.D, 1.0, RelationKind::Eq);
    duality.details["D"] = dist.D;
    duality.details["V_e"] = vis.value;
    duality.details["L"] = dist.L;

    // Without a defined optimum every pointer direction is optimal; +z stands in.
    const BlochVector r0 = dist.r0.value_or(BlochVector(0.0, 0.0, 1.0));
    const double var_h = outcome_variance(coincidence_povm(p1, p2, r0), input);
    const double var_n = variance(pauli_dot(vis.n), rho_e);
    RelationReport disturbance = make_report("disturbance_uncertainty", var_h + var_n, 1.0, RelationKind::Eq);
    disturbance.details["var_coincidence"] = var_h;
    disturbance.details["var_interference"] = var_n;
    disturbance.details["off_optimum_sum_z"] =
        outcome_variance(coincidence_povm(p1, p2, BlochVector(0.0, 0.0, 1.0)), input) +
        variance(pauli(Axis::X), rho_e);
    return {duality, disturbance};
}

TotalStateDuality duality_of_total_state(const Operator4 &rho) {
    if (!rho.is_finite() || !is_hermitian(rho)) throw Error(ErrorKind::NotHermitian, "total state must be Hermitian");
    if (std::abs(rho.trace() - 1.0) > tol::kStructural)
        throw Error(ErrorKind::InvalidArgument, "total state trace is not 1");
    if (min_eigenvalue(rho) < -tol::kStructural) throw Error(ErrorKind::InvalidArgument, "total state is not positive");

    const Operator2 sz = pauli(Axis::Z);
    double v2 = 0.0;
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
        const double vk = (tensor(sz, pauli(axis)) * rho).trace().real();
        v2 += vk * vk;
    }
    const Operator2 reduced = partial_trace_probe(rho);
    return {std::sqrt(v2), 2.0 * std::abs(reduced(1, 0))};
}

RelationReport duality_inequality(const Operator4 &rho) {
    const TotalStateDuality d = duality_of_total_state(rho);
    RelationReport r = make_report("duality_inequality", d.D * d.D + d.V_e * d.V_e, 1.0, RelationKind::Leq);
    r.details["D"] = d.D;
    r.details["V_e"] = d.V_e;
    return r;
}

RelationReport inaccuracy_relation(const DiscretePovm &f, const DiscretePovm &g) {
    RelationReport r = make_report("joint_unsharpness", unsharpness(f) + unsharpness(g), 1.0, RelationKind::Geq);
    r.details["U_F"] = unsharpness(f);
    r.details["U_G"] = unsharpness(g);
    return r;
}

}  // namespace mzpovm
