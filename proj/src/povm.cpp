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

#include "mzpovm/povm.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace mzpovm {
namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

}  // namespace

DiscretePovm::DiscretePovm(std::vector<Effect> effects) : effects_(std::move(effects)) {}

bool DiscretePovm::has_label(const std::string &label) const {
    return std::any_of(effects_.begin(), effects_.end(), [&](const Effect &e) { return e.label == label; });
}

const Operator2 &DiscretePovm::effect(const std::string &label) const {
    for (const Effect &e : effects_) {
        if (e.label == label) return e.op;
    }
    throw Error(ErrorKind::InvalidArgument, "no effect labeled '" + label + "'");
}

std::vector<double> DiscretePovm::probabilities(const DensityOperator &rho) const {
    std::vector<double> out;
    out.reserve(effects_.size());
    for (const Effect &e : effects_) out.push_back((e.op * rho.matrix()).trace().real());
    return out;
}

std::vector<double> DiscretePovm::probabilities(const StateVector2 &psi) const {
    std::vector<double> out;
    out.reserve(effects_.size());
    for (const Effect &e : effects_) out.push_back(sandwich(psi.vec(), e.op, psi.vec()).real());
    return out;
}

const char *povm_kind_name(PovmKind kind) {
    switch (kind) {
        case PovmKind::Invalid: return "invalid";
        case PovmKind::Trivial: return "trivial";
        case PovmKind::Sharp: return "sharp";
        case PovmKind::Unsharp: return "unsharp";
    }
    return "invalid";
}

PovmKind PovmValidation::kind() const {
    if (!valid) return PovmKind::Invalid;
    if (trivial) return PovmKind::Trivial;
    if (sharp) return PovmKind::Sharp;
    return PovmKind::Unsharp;
}

PovmValidation validate(const DiscretePovm &p, double tolerance) {
    PovmValidation v;
    auto fail = [&](std::string what, double amount) {
        v.failures.push_back(std::move(what) + " (by " + format_double(amount) + ")");
        v.worst_violation = std::max(v.worst_violation, amount);
    };

    if (p.size() == 0) {
        fail("POVM has no effects", 1.0);
        return v;
    }

    Operator2 total;
    bool all_projections = true;
    bool all_scalar = true;
    for (const Effect &e : p.effects()) {
        total += e.op;
        if (!e.op.is_finite()) {
            fail("effect " + e.label + " has non-finite entries", 1.0);
            continue;
        }
        const double asym = max_abs_diff(e.op, e.op.adjoint());
        if (asym > tolerance) {
            fail("effect " + e.label + " is not Hermitian", asym);
            continue;
        }
        const auto eig = eig_hermitian(0.5 * (e.op + e.op.adjoint()));
        if (eig.back().value < -tolerance) fail("effect " + e.label + " has a negative eigenvalue", -eig.back().value);
        if (eig.front().value > 1.0 + tolerance)
            fail("effect " + e.label + " has an eigenvalue above 1", eig.front().value - 1.0);
        if (max_abs_diff(e.op * e.op, e.op) > tolerance) all_projections = false;
        const auto [a, nx, ny, nz] = pauli_components(e.op);
        (void)a;
        if (std::max({std::abs(nx), std::abs(ny), std::abs(nz)}) > tolerance) all_scalar = false;
    }
    const double defect = max_abs_diff(total, Operator2::identity());
    if (defect > tolerance) fail("effects do not sum to the identity", defect);

    v.valid = v.failures.empty();
    v.sharp = v.valid && all_projections;
    v.trivial = v.valid && all_scalar;
    return v;
}

// ---------------------------------------------------------------------------

StochasticMatrix::StochasticMatrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), w_(std::move(row_major)) {
    if (rows == 0 || cols == 0 || w_.size() != rows * cols)
        throw Error(ErrorKind::InvalidStochasticMatrix, "entry count does not match the shape");
    for (double x : w_) {
        if (!std::isfinite(x) || x < 0.0) throw Error(ErrorKind::InvalidStochasticMatrix, "negative or non-finite entry");
    }
    for (std::size_t k = 0; k < cols; ++k) {
        double s = 0;
        for (std::size_t l = 0; l < rows; ++l) s += (*this)(l, k);
        if (std::abs(s - 1.0) > tol::kIdentity)
            throw Error(ErrorKind::InvalidStochasticMatrix, "column " + std::to_string(k) + " does not sum to 1");
    }
}

StochasticMatrix StochasticMatrix::identity(std::size_t n) {
    std::vector<double> w(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) w[i * n + i] = 1.0;
    return StochasticMatrix(n, n, std::move(w));
}

StochasticMatrix StochasticMatrix::uniform(std::size_t rows, std::size_t cols) {
    return StochasticMatrix(rows, cols, std::vector<double>(rows * cols, 1.0 / static_cast<double>(rows)));
}

StochasticMatrix StochasticMatrix::binary_symmetric(double f) {
    if (!(f >= -1.0 && f <= 1.0)) throw Error(ErrorKind::InvalidStochasticMatrix, "f must lie in [-1, 1]");
    return StochasticMatrix(2, 2, {0.5 * (1 + f), 0.5 * (1 - f), 0.5 * (1 - f), 0.5 * (1 + f)});
}

DiscretePovm spectral_measure(Axis axis) {
    const Operator2 s = pauli(axis);
    const Operator2 id = Operator2::identity();
    return DiscretePovm({{"1", 0.5 * (id + s)}, {"2", 0.5 * (id - s)}});
}

DiscretePovm unsharp_x(double f) {
    return DiscretePovm({{"1", from_pauli_components(0.5, 0.5 * f, 0, 0)},
                         {"2", from_pauli_components(0.5, -0.5 * f, 0, 0)}});
}

DiscretePovm unsharp_z(double g) {
    return DiscretePovm({{"1", from_pauli_components(0.5, 0, 0, 0.5 * g)},
                         {"2", from_pauli_components(0.5, 0, 0, -0.5 * g)}});
}

DiscretePovm smear(const DiscretePovm &sharp, const StochasticMatrix &w) {
    if (w.cols() != sharp.size())
        throw Error(ErrorKind::DimensionMismatch, "stochastic matrix has " + std::to_string(w.cols()) +
                                                      " columns for " + std::to_string(sharp.size()) + " outcomes");
    const PovmValidation check = validate(sharp);
    if (!check.sharp) throw Error(ErrorKind::NotSharp, "smearing needs a projection valued measure");

    std::vector<Effect> out;
    for (std::size_t l = 0; l < w.rows(); ++l) {
        Operator2 e;
        for (std::size_t k = 0; k < w.cols(); ++k) e += w(l, k) * sharp[k].op;
        out.push_back({std::to_string(l + 1), e});
    }
    return DiscretePovm(std::move(out));
}

DiscretePovm marginal(const DiscretePovm &p, const Grouping &grouping) {
    std::set<std::string> seen;
    std::vector<Effect> out;
    for (const auto &[label, members] : grouping) {
        Operator2 sum;
        for (const std::string &m : members) {
            if (!p.has_label(m)) throw Error(ErrorKind::NotAPartition, "unknown label '" + m + "'");
            if (!seen.insert(m).second) throw Error(ErrorKind::NotAPartition, "label '" + m + "' grouped twice");
            sum += p.effect(m);
        }
        out.push_back({label, sum});
    }
    if (seen.size() != p.size()) throw Error(ErrorKind::NotAPartition, "grouping does not cover every label");
    return DiscretePovm(std::move(out));
}

Grouping group_by_detector() { return {{"1", {"11", "12"}}, {"2", {"21", "22"}}}; }
Grouping group_by_probe() { return {{"1", {"11", "21"}}, {"2", {"12", "22"}}}; }
Grouping group_by_coincidence() { return {{"1", {"11", "22"}}, {"2", {"12", "21"}}}; }

bool jointly_measurable(UnsharpPair pair) {
    return pair.f * pair.f + pair.g * pair.g <= 1.0 + kJointBoundaryTolerance;
}

DiscretePovm joint_xz(UnsharpPair pair) {
    const double f = pair.f, g = pair.g;
    if (!std::isfinite(f) || !std::isfinite(g)) throw Error(ErrorKind::NonFinite, "f and g must be finite");
    if (!jointly_measurable(pair))
        throw Error(ErrorKind::NotJointlyMeasurable,
                    "f^2 + g^2 = " + std::to_string(f * f + g * g) + " exceeds 1");
    return DiscretePovm({{"11", from_pauli_components(0.25, 0.25 * f, 0, 0.25 * g)},
                         {"21", from_pauli_components(0.25, -0.25 * f, 0, 0.25 * g)},
                         {"12", from_pauli_components(0.25, 0.25 * f, 0, -0.25 * g)},
                         {"22", from_pauli_components(0.25, -0.25 * f, 0, -0.25 * g)}});
}

double contrast(const DiscretePovm &p) {
    if (p.size() != 2) throw Error(ErrorKind::NotTwoOutcome, "contrast needs exactly two outcomes");
    const auto [a, nx, ny, nz] = pauli_components(p[0].op);
    const double bias = 2.0 * a - 1.0;
    const double u = 2.0 * std::sqrt(nx * nx + ny * ny + nz * nz);
    return std::clamp(std::abs(bias) + u, 0.0, 1.0);
}

double unsharpness(const DiscretePovm &p) {
    const double c = contrast(p);
    return 1.0 - c * c;
}

}  // namespace mzpovm
