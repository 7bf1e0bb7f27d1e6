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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mzpovm/interferometer.hpp"
#include "mzpovm/relations.hpp"
#include "test_util.hpp"

using namespace mzpovm;

namespace {

const double kPi = std::numbers::pi;
const double kS = 1.0 / std::numbers::sqrt2;

double binary_entropy(double p) { return -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

const RelationReport &find(const std::vector<RelationReport> &v, const std::string &name) {
    for (const auto &r : v)
        if (r.name == name) return r;
    throw std::runtime_error("missing " + name);
}

}  // namespace

TEST(MakeReport, SlackConventions) {
    const auto g = make_report("g", 2.0, 1.0, RelationKind::Geq);
    EXPECT_TRUE(g.satisfied);
    EXPECT_DOUBLE_EQ(g.slack, 1.0);
    const auto l = make_report("l", 2.0, 1.0, RelationKind::Leq);
    EXPECT_FALSE(l.satisfied);
    EXPECT_DOUBLE_EQ(l.slack, -1.0);
    const auto e = make_report("e", 1.0, 1.0 + 1e-10, RelationKind::Eq);
    EXPECT_TRUE(e.satisfied);
    EXPECT_NEAR(e.slack, 1e-10, 1e-16);
}

TEST(VarianceUr, Examples) {
    const auto a = variance_ur(density_from_bloch({0, 0, 1}));
    EXPECT_NEAR(a.lhs, 0.0, 1e-15);
    EXPECT_NEAR(a.rhs, 0.0, 1e-15);
    EXPECT_TRUE(a.satisfied);

    const auto b = variance_ur(density_from_bloch({0, 0, 0}));
    EXPECT_NEAR(b.lhs, 1.0, 1e-15);
    EXPECT_NEAR(b.rhs, 0.0, 1e-15);

    const auto c = variance_ur(density_from_bloch({0.6, 0, 0.8}));
    EXPECT_NEAR(c.lhs, 0.2304, 1e-15);
    EXPECT_NEAR(c.rhs, 0.2304, 1e-15);
}

TEST(VarianceUr, GapIsOneMinusPuritySquared) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 500; ++i) {
        const BlochVector r = testutil::ball_point(rng);
        const auto rep = variance_ur(density_from_bloch(r));
        EXPECT_TRUE(rep.satisfied);
        EXPECT_NEAR(rep.rhs, rep.details.at("identity_rhs"), 1e-14);
        const double n2 = r.dot(r);
        // (1 - x^2)(1 - z^2) - y^2 - x^2 z^2 = 1 - |r|^2
        EXPECT_NEAR(rep.lhs - rep.rhs, 1.0 - n2, 1e-14);
    }
}

TEST(ShannonEntropy, Examples) {
    const auto z = spectral_measure(Axis::Z);
    EXPECT_NEAR(shannon_entropy(z, density_from_bloch({0, 0, 1})), 0.0, 1e-15);
    EXPECT_NEAR(shannon_entropy(z, density_from_bloch({0, 0, 0})), 1.0, 1e-15);
    EXPECT_NEAR(shannon_entropy(z, density_from_bloch({0, 0, 0.5})), binary_entropy(0.75), 1e-15);
}

TEST(EntropicBound, Examples) {
    const auto z = spectral_measure(Axis::Z), x = spectral_measure(Axis::X);
    const auto up = StateVector2::basis(0);
    const auto a = entropic_bound(z, x, up);
    EXPECT_NEAR(a.lhs, 1.0, 1e-12);
    EXPECT_NEAR(a.rhs, 1.0, 1e-12);
    EXPECT_TRUE(a.satisfied);

    const double t = std::acos(1 / std::sqrt(3.0));
    const StateVector2 psi{std::cos(t / 2), std::polar(std::sin(t / 2), kPi / 4)};
    const auto b = entropic_bound(z, x, psi);
    EXPECT_NEAR(b.rhs, 1.0, 1e-12);
    EXPECT_GT(b.lhs, 1.0);

    const auto c = entropic_bound(z, z, up);
    EXPECT_NEAR(c.rhs, 0.0, 1e-12);
    EXPECT_NEAR(c.lhs, 0.0, 1e-12);

    EXPECT_THROW(entropic_bound(unsharp_x(0.5), z, up), Error);
}

TEST(TripleRelations, Examples) {
    std::mt19937_64 rng(59);
    const auto psi = testutil::haar_state(rng);
    const auto pure = triple_relations(DensityOperator::pure(psi));
    EXPECT_NEAR(find(pure, "triple_variance").lhs, 2.0, 1e-12);
    EXPECT_NEAR(find(pure, "triple_contrast").lhs, 1.0, 1e-12);

    const auto mixed = triple_relations(density_from_bloch({0, 0, 0}));
    EXPECT_NEAR(find(mixed, "triple_variance").lhs, 3.0, 1e-15);
    EXPECT_NEAR(find(mixed, "triple_contrast").lhs, 0.0, 1e-15);

    const auto eig = triple_relations(density_from_bloch({0, 0, 1}));
    EXPECT_NEAR(find(eig, "triple_entropy").lhs, 2.0, 1e-12);
    for (const auto &r : eig) EXPECT_TRUE(r.satisfied) << r.name;
}

TEST(Contrasts, Examples) {
    const auto a = contrasts(density_from_bloch({0, 0, 1}));
    EXPECT_NEAR(a.path, 1.0, 1e-15);
    EXPECT_NEAR(a.interference_x, 0.0, 1e-15);
    EXPECT_NEAR(a.visibility, 0.0, 1e-15);
    const auto b = contrasts(density_from_bloch({1, 0, 0}));
    EXPECT_NEAR(b.path, 0.0, 1e-15);
    EXPECT_NEAR(b.interference_x, 1.0, 1e-15);
    EXPECT_NEAR(b.visibility, 1.0, 1e-15);
    // w+ = 3/4, off-diagonal sqrt3/4.
    const auto c = contrasts(DensityOperator(Operator2{0.75, std::sqrt(3.0) / 4, std::sqrt(3.0) / 4, 0.25}));
    EXPECT_NEAR(c.path, 0.5, 1e-15);
    EXPECT_NEAR(c.interference_x, std::sqrt(3.0) / 2, 1e-15);
    EXPECT_NEAR(c.path * c.path + c.interference_x * c.interference_x, 1.0, 1e-15);
}

TEST(Distinguishability, Examples) {
    const auto q1 = StateVector2::basis(0), q2 = StateVector2::basis(1);
    std::mt19937_64 rng(61);
    for (int i = 0; i < 20; ++i) {
        const auto psi = testutil::haar_state(rng);
        EXPECT_NEAR(distinguishability(psi[0], psi[1], q1, q2).D, 1.0, 1e-12);
    }
    auto [p1, p2] = marker_states(kPi / 3);
    const auto d = distinguishability(kS, kS, p1, p2);
    EXPECT_NEAR(d.D, 0.5, 1e-12);
    EXPECT_NEAR(d.L, 0.75, 1e-12);
    EXPECT_NEAR(distinguishability(1.0, 0.0, p1, p2).D, 1.0, 1e-12);
}

TEST(Distinguishability, DegenerateDirection) {
    const auto q1 = StateVector2::basis(0);
    const auto d = distinguishability(kS, kS, q1, q1);
    EXPECT_FALSE(d.r0.has_value());
    EXPECT_NEAR(d.D, 0.0, 1e-15);
    EXPECT_NEAR(d.L, 0.5, 1e-15);
}

TEST(Distinguishability, AgreesWithClosedFormAndBruteForce) {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 50; ++i) {
        const auto psi = testutil::haar_state(rng);
        const auto p1 = testutil::haar_state(rng), p2 = testutil::haar_state(rng);
        const auto d = distinguishability(psi[0], psi[1], p1, p2);
        EXPECT_NEAR(d.D, distinguishability_closed_form(psi[0], psi[1], p1, p2), 1e-12);
        // Helstrom: L = 1/2 (1 + || |a|^2 P1 - |b|^2 P2 ||_1).
        const Operator2 diff =
            std::norm(psi[0]) * Operator2::projector(p1.vec()) - std::norm(psi[1]) * Operator2::projector(p2.vec());
        double trace_norm = 0;
        for (const auto &e : eig_hermitian(diff)) trace_norm += std::abs(e.value);
        EXPECT_NEAR(d.L, 0.5 * (1 + trace_norm), 1e-12);
    }
}

TEST(CoincidencePovm, OrthogonalMarkers) {
    const auto q1 = StateVector2::basis(0), q2 = StateVector2::basis(1);
    const auto h = coincidence_povm(q1, q2, BlochVector(0, 0, 1));
    EXPECT_LT(max_abs_diff(h.effect("1"), Operator2::identity()), 1e-15);
    EXPECT_LT(h.effect("2").max_abs(), 1e-15);
    EXPECT_THROW(coincidence_povm(q1, q2, BlochVector(0, 0, 0.5)), Error);
}

TEST(CoincidencePovm, EqualMarkers) {
    auto [p1, p2] = marker_states(kPi / 2);
    const auto h = coincidence_povm(p1, p2, BlochVector(0, 1, 0));
    EXPECT_LT(max_abs_diff(h.effect("1"), 0.5 * Operator2::identity()), 1e-15);
}

TEST(CoincidencePovm, MatchesDirectProbeReadout) {
    // p(coincidence) = |a|^2 |<r1|p1>|^2 + |b|^2 |<r2|p2>|^2 with r2 orthogonal to r1.
    std::mt19937_64 rng(71);
    for (int i = 0; i < 50; ++i) {
        const auto psi = testutil::haar_state(rng);
        const auto p1 = testutil::haar_state(rng), p2 = testutil::haar_state(rng), r1 = testutil::haar_state(rng);
        const auto r2 = perpendicular(r1);
        const auto h = coincidence_povm(p1, p2, bloch_from_state(r1));
        const double direct = std::norm(psi[0]) * std::norm(inner(r1.vec(), p1.vec())) +
                              std::norm(psi[1]) * std::norm(inner(r2.vec(), p2.vec()));
        EXPECT_NEAR(h.probabilities(psi)[0], direct, 1e-12);
    }
}

TEST(CoincidencePovm, VarianceAtOptimumIsOneMinusDSquared) {
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (int i = 0; i < 100; ++i) {
        const auto psi = testutil::haar_state(rng);
        auto [p1, p2] = marker_states(u(rng));
        const auto d = distinguishability(psi[0], psi[1], p1, p2);
        if (!d.r0) continue;
        const double var = outcome_variance(coincidence_povm(p1, p2, *d.r0), DensityOperator::pure(psi));
        EXPECT_NEAR(var, 1 - d.D * d.D, 1e-12);
    }
}

TEST(Visibility, Examples) {
    const auto q1 = StateVector2::basis(0), q2 = StateVector2::basis(1);
    EXPECT_NEAR(visibility_reduced(marked_photon_state(kS, kS, q1, q2)).value, 0.0, 1e-15);
    for (double th : {0.2, 0.7, 1.3}) {
        auto [p1, p2] = marker_states(th);
        EXPECT_NEAR(visibility_reduced(marked_photon_state(kS, kS, p1, p2)).value, std::sin(th), 1e-15);
    }
    EXPECT_NEAR(visibility_reduced(marked_photon_state(kS, kS, q1, q1)).value, 1.0, 1e-15);
}

TEST(Visibility, FullSphereIsBlochNorm) {
    EXPECT_NEAR(visibility_full_sphere(density_from_bloch({0.3, 0.4, 0})), 0.5, 1e-15);
}

TEST(ErasureDuality, Examples) {
    auto [p1, p2] = marker_states(kPi / 3);
    const auto [dual, dist] = erasure_duality(kS, kS, p1, p2);
    EXPECT_NEAR(dual.details.at("D"), 0.5, 1e-12);
    EXPECT_NEAR(dual.details.at("V_e"), std::sqrt(3.0) / 2, 1e-12);
    EXPECT_TRUE(dual.satisfied);
    EXPECT_TRUE(dist.satisfied);

    const auto q1 = StateVector2::basis(0), q2 = StateVector2::basis(1);
    const auto [o, _] = erasure_duality(kS, kS, q1, q2);
    EXPECT_NEAR(o.details.at("D"), 1.0, 1e-12);
    EXPECT_NEAR(o.details.at("V_e"), 0.0, 1e-12);
}

TEST(ErasureDuality, RandomIdentity) {
    std::mt19937_64 rng(79);
    for (int i = 0; i < 200; ++i) {
        const auto psi = testutil::haar_state(rng);
        const auto p1 = testutil::haar_state(rng), p2 = testutil::haar_state(rng);
        const auto [dual, dist] = erasure_duality(psi[0], psi[1], p1, p2);
        EXPECT_LE(dual.slack, 1e-12);
        EXPECT_LE(dist.slack, 1e-12);
        EXPECT_GE(dist.details.at("off_optimum_sum_z"), 1.0 - 1e-12);
    }
}

TEST(TotalStateDuality, PureAndMixed) {
    std::mt19937_64 rng(83);
    for (int i = 0; i < 50; ++i) {
        const auto psi = testutil::haar_state(rng);
        const auto p1 = testutil::haar_state(rng), p2 = testutil::haar_state(rng);
        const Vector<4> v = kron(Vector<2>{psi[0], 0.0}, p1.vec()) + kron(Vector<2>{0.0, psi[1]}, p2.vec());
        const auto pure = duality_of_total_state(Operator4::projector(v));
        EXPECT_NEAR(pure.D, distinguishability_closed_form(psi[0], psi[1], p1, p2), 1e-12);
        EXPECT_NEAR(pure.D * pure.D + pure.V_e * pure.V_e, 1.0, 1e-12);

        const Operator4 mixed = 0.5 * Operator4::projector(v) + 0.125 * Operator4::identity();
        const auto r = duality_inequality(0.8 * mixed + 0.05 * Operator4::identity());
        EXPECT_TRUE(r.satisfied);
    }
    EXPECT_THROW(duality_of_total_state(2.0 * Operator4::identity()), Error);
}

TEST(InaccuracyRelation, JointUnsharpness) {
    for (double th = 0; th < 1.6; th += 0.1) {
        const auto r = inaccuracy_relation(unsharp_x(std::sin(th)), unsharp_z(std::cos(th)));
        EXPECT_NEAR(r.lhs, 1.0, 1e-12);
        EXPECT_TRUE(r.satisfied);
    }
    EXPECT_NEAR(inaccuracy_relation(unsharp_x(0.3), unsharp_z(0.4)).lhs, 2 - 0.09 - 0.16, 1e-12);
}
