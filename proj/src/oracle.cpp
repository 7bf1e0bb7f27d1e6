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

#include "mzpovm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mzpovm {

Pcg32::Pcg32(std::uint64_t initstate, std::uint64_t initseq) {
    inc_ = (initseq << 1u) | 1u;
    next();
    state_ += initstate;
    next();
}

std::uint32_t Pcg32::next() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

double Pcg32::uniform() {
    const std::uint64_t a = next() >> 5;
    const std::uint64_t b = next() >> 6;
    return static_cast<double>(a * 67108864ULL + b) / 9007199254740992.0;
}

std::pair<double, double> Pcg32::normal_pair() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

void OracleConfig::check() const {
    if (samples < 1) throw Error(ErrorKind::InvalidArgument, "samples must be at least 1");
    if (!(grid_resolution > 0.0 && grid_resolution <= std::numbers::pi / 8))
        throw Error(ErrorKind::InvalidArgument, "grid resolution must lie in (0, pi/8]");
    if (!(tolerance > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
}

StateVector2 random_pure_state(std::uint64_t seed, std::uint64_t index) {
    Pcg32 rng(seed, index);
    const auto [a, b] = rng.normal_pair();
    const auto [c, d] = rng.normal_pair();
    return StateVector2::normalized(Vector<2>{Complex{a, b}, Complex{c, d}});
}

BlochVector random_bloch_in_ball(std::uint64_t seed, std::uint64_t index) {
    Pcg32 rng(seed, index);
    const auto [x, y] = rng.normal_pair();
    const auto [z, unused] = rng.normal_pair();
    (void)unused;
    const double radius = std::cbrt(rng.uniform());
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n < tol::kZeroNorm) return BlochVector(0.0, 0.0, 0.0);
    return BlochVector(radius * x / n, radius * y / n, radius * z / n);
}

std::vector<LabeledProbability> direct_probabilities(const MeasurementScheme &scheme, const StateVector2 &psi) {
    const Vector<4> final_state = scheme.unitary() * kron(psi.vec(), scheme.probe_init().vec());
    std::vector<LabeledProbability> out;
    out.reserve(scheme.outputs().size());
    for (const LabeledProjection &m : scheme.outputs()) {
        out.push_back({m.label, sandwich(final_state, m.projection, final_state).real()});
    }
    return out;
}

double cross_check(const MeasurementScheme &scheme, const DiscretePovm &povm, const OracleConfig &oracle) {
    oracle.check();
    if (povm.size() != scheme.outputs().size())
        throw Error(ErrorKind::DimensionMismatch, "POVM and scheme have different outcome counts");
    double worst = 0.0;
    for (std::size_t i = 0; i < oracle.samples; ++i) {
        const StateVector2 psi = random_pure_state(oracle.seed, i);
        const auto direct = direct_probabilities(scheme, psi);
        const auto predicted = povm.probabilities(psi);
        for (std::size_t k = 0; k < direct.size(); ++k) {
            worst = std::max(worst, std::abs(direct[k].probability - predicted[k]));
        }
    }
    return worst;
}

double cross_check(const MzConfig &config, const OracleConfig &oracle) {
    const MeasurementScheme scheme = scheme_for(config);
    return cross_check(scheme, extract_povm(scheme), oracle);
}

namespace {

BlochVector direction(double polar, double azimuth) {
    return BlochVector::unit(std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
                             std::cos(polar));
}

}  // namespace

GridMaximum grid_maximize(const std::function<double(const BlochVector &)> &objective, const OracleConfig &oracle,
                          SphereDomain domain) {
    oracle.check();
    const double pi = std::numbers::pi;
    const double h = oracle.grid_resolution;
    const bool equator = domain == SphereDomain::Equator;

    double best_polar = pi / 2, best_azimuth = 0.0;
    double best = objective(direction(best_polar, best_azimuth));
    const auto consider = [&](double polar, double azimuth) {
        const double value = objective(direction(polar, azimuth));
        if (value > best) {
            best = value;
            best_polar = polar;
            best_azimuth = azimuth;
            return true;
        }
        return false;
    };

    const int azimuth_steps = static_cast<int>(std::ceil(2 * pi / h));
    const int polar_steps = equator ? 0 : static_cast<int>(std::ceil(pi / h));
    for (int i = 0; i <= polar_steps; ++i) {
        const double polar = equator ? pi / 2 : std::min(pi, i * h);
        for (int j = 0; j < azimuth_steps; ++j) consider(polar, j * (2 * pi / azimuth_steps));
    }

    double step = h;
    for (int level = 0; level < 20; ++level) {
        step /= 2;
        // Walk while a neighbour improves; the cap only guards against plateaus.
        for (int moves = 0; moves < 64; ++moves) {
            const double p = best_polar, a = best_azimuth;
            bool moved = false;
            for (int dp = -1; dp <= 1; ++dp) {
                if (equator && dp != 0) continue;
                for (int da = -1; da <= 1; ++da) {
                    if (dp == 0 && da == 0) continue;
                    moved = consider(p + dp * step, a + da * step) || moved;
                }
            }
            if (!moved) break;
        }
    }
    return {best, direction(best_polar, best_azimuth)};
}

}  // namespace mzpovm
