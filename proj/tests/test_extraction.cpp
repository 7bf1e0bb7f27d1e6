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

#include "mzpovm/extraction.hpp"
#include "test_util.hpp"

using namespace mzpovm;

namespace {

const double kPi = std::numbers::pi;
const double kS = 1.0 / std::numbers::sqrt2;
const std::vector<double> kAngles{0.0, kPi / 6, -kPi / 6, kPi / 4, -kPi / 4, kPi / 2, -kPi / 2, kPi};

double povm_diff(const DiscretePovm &a, const DiscretePovm &b) {
    EXPECT_EQ(a.size(), b.size());
    double m = 0;
    for (const auto &e : a.effects()) m = std::max(m, max_abs_diff(e.op, b.effect(e.label)));
    return m;
}

Operator2 half(double a, double x, double y, double z) {
    return from_pauli_components(0.5 * a, 0.5 * x, 0.5 * y, 0.5 * z);
}

}  // namespace

TEST(Extraction, PathObservable) {
    const auto p = extract_povm(scheme_for({Experiment::Path, 0.0, 0.0, 0.0}));
    EXPECT_LT(max_abs_diff(p.effect("1"), half(1, 0, 0, 1)), 1e-12);
    EXPECT_LT(max_abs_diff(p.effect("2"), half(1, 0, 0, -1)), 1e-12);
    EXPECT_EQ(validate(p).kind(), PovmKind::Sharp);
}

TEST(Extraction, InterferenceObservable) {
    const auto p = extract_povm(scheme_for({Experiment::Interference, -kPi / 2, 0.0, 0.0}));
    EXPECT_LT(max_abs_diff(p.effect("1"), half(1, 1, 0, 0)), 1e-12);
    EXPECT_LT(max_abs_diff(p.effect("2"), half(1, -1, 0, 0)), 1e-12);
}

TEST(Extraction, InterferenceGeneralPhase) {
    for (double d : kAngles) {
        const auto p = extract_povm(scheme_for({Experiment::Interference, d, 0.0, 0.0}));
        const Operator2 u = mz_evolution(d);
        const Operator2 p1{1, 0, 0, 0};
        EXPECT_LT(max_abs_diff(p.effect("1"), u.adjoint() * p1 * u), 1e-14);
        EXPECT_EQ(validate(p).kind(), PovmKind::Sharp);
    }
}

TEST(Extraction, MarkingFractionsOfPathProjections) {
    for (double d : kAngles) {
        const auto p = extract_povm(scheme_for({Experiment::Marking, d, 0.0, 0.0}));
        const double c2 = std::pow(std::cos(d / 2), 2), s2 = std::pow(std::sin(d / 2), 2);
        EXPECT_LT(max_abs_diff(p.effect("11"), Operator2{c2, 0, 0, 0}), 1e-12);
        EXPECT_LT(max_abs_diff(p.effect("21"), Operator2{s2, 0, 0, 0}), 1e-12);
        EXPECT_LT(max_abs_diff(p.effect("12"), Operator2{0, 0, 0, s2}), 1e-12);
        EXPECT_LT(max_abs_diff(p.effect("22"), Operator2{0, 0, 0, c2}), 1e-12);

        const auto m = with_marginals(p);
        EXPECT_LT(max_abs_diff(m.detector.effect("1"), half(1, 0, 0, std::cos(d))), 1e-12);
        EXPECT_EQ(validate(m.probe).kind(), PovmKind::Sharp);
    }
}

TEST(Extraction, MarkingInputOneCertainAtZeroPhase) {
    const auto p = extract_povm(scheme_for({Experiment::Marking, 0.0, 0.0, 0.0}));
    const auto pr = p.probabilities(StateVector2::basis(0));
    EXPECT_NEAR(pr[0], 1.0, 1e-15);
}

TEST(Extraction, ErasureLimit) {
    const auto m = with_marginals(extract_povm(scheme_for({Experiment::Erasure, -kPi / 2, 0.0, 0.0})));
    EXPECT_LT(max_abs_diff(m.coincidence.effect("1"), half(1, 1, 0, 0)), 1e-12);
    EXPECT_EQ(validate(m.coincidence).kind(), PovmKind::Sharp);
    EXPECT_EQ(validate(m.detector).kind(), PovmKind::Trivial);
    EXPECT_EQ(validate(m.probe).kind(), PovmKind::Trivial);
}

TEST(Extraction, ErasureCoincidenceDirection) {
    for (double d : kAngles)
        for (double g : kAngles) {
            const auto m = with_marginals(extract_povm(scheme_for({Experiment::Erasure, d, g, 0.0})));
            const double sd = std::sin(d);
            EXPECT_LT(max_abs_diff(m.coincidence.effect("1"), half(1, -sd * std::cos(g), -sd * std::sin(g), 0)),
                      1e-12);
        }
}

TEST(Extraction, QuantitativeAtQuarterTurn) {
    for (double th : kAngles) {
        const auto m = with_marginals(extract_povm(scheme_for({Experiment::Quantitative, -kPi / 2, 0.0, th})));
        EXPECT_LT(max_abs_diff(m.detector.effect("1"), half(1, std::sin(th), 0, 0)), 1e-12);
        EXPECT_LT(max_abs_diff(m.probe.effect("1"), half(1, 0, 0, std::cos(th))), 1e-12);
        EXPECT_EQ(validate(m.coincidence).kind(), PovmKind::Trivial);
    }
}

TEST(ClosedForm, MatchesExtractionOnGrid) {
    for (auto e : {Experiment::Marking, Experiment::Erasure, Experiment::Quantitative})
        for (double d : kAngles)
            for (double g : kAngles)
                for (double th : kAngles) {
                    const MzConfig cfg{e, d, g, th};
                    const auto ex = with_marginals(extract_povm(scheme_for(cfg)));
                    const auto cf = closed_form(cfg);
                    EXPECT_LT(povm_diff(ex.joint, cf.joint), 1e-10);
                    EXPECT_LT(povm_diff(ex.detector, cf.detector), 1e-10);
                    EXPECT_LT(povm_diff(ex.probe, cf.probe), 1e-10);
                    EXPECT_LT(povm_diff(ex.coincidence, cf.coincidence), 1e-10);
                }
}

TEST(ClosedForm, UnsupportedExperiments) {
    try {
        closed_form({Experiment::Path, 0, 0, 0});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedExperiment);
    }
}

TEST(Extraction, JointPovmsAreValidEverywhere) {
    for (auto e : {Experiment::Marking, Experiment::Erasure, Experiment::Quantitative})
        for (double d : kAngles)
            for (double th : kAngles) EXPECT_TRUE(validate(extract_povm(scheme_for({e, d, 0.3, th}))).valid);
}

TEST(Extraction, CompletionPhaseDoesNotMatter) {
    const MzConfig cfg{Experiment::Quantitative, 0.7, 0.0, 0.4};
    const auto ptr = *pointers_for(cfg);
    const auto a = extract_povm(scheme_for(cfg, probes_for(cfg), ptr.first, ptr.second, 1.0));
    const auto b = extract_povm(scheme_for(cfg, probes_for(cfg), ptr.first, ptr.second, std::polar(1.0, 2.1)));
    EXPECT_LT(povm_diff(a, b), 1e-14);
}

TEST(MeasurementScheme, RejectsInvalid) {
    const auto q1 = StateVector2::basis(0);
    const Operator4 full = Operator4::identity();
    try {
        MeasurementScheme(2.0 * full, q1, {{"1", full}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidScheme);
    }
    EXPECT_THROW(MeasurementScheme(full, q1, {{"1", 0.5 * full}, {"2", 0.5 * full}}), Error);
    EXPECT_THROW(MeasurementScheme(full, q1, {{"1", output_projection(1, Vector<2>{1, 0})}}), Error);
}

TEST(Conditional, ErasureFringesAndAntifringes) {
    const auto j = extract_povm(scheme_for({Experiment::Erasure, -kPi / 2, 0.0, 0.0}));
    const StateVector2 psi{kS, kS};
    const auto c1 = conditional_probability(j, "1", psi);
    const auto c2 = conditional_probability(j, "2", psi);
    EXPECT_NEAR(c1[0], 1.0, 1e-12);
    EXPECT_NEAR(c1[1], 0.0, 1e-12);
    EXPECT_NEAR(c2[0], 0.0, 1e-12);
    EXPECT_NEAR(c2[1], 1.0, 1e-12);
}

TEST(Conditional, TrivialProbeDenominatorIsHalf) {
    std::mt19937_64 rng(47);
    for (double d : kAngles) {
        const auto j = extract_povm(scheme_for({Experiment::Erasure, d, 0.2, 0.0}));
        const auto probe = marginal(j, group_by_probe());
        for (int i = 0; i < 10; ++i) {
            const auto psi = testutil::haar_state(rng);
            EXPECT_NEAR(probe.probabilities(psi)[0], 0.5, 1e-12);
        }
    }
}

TEST(Conditional, ZeroProbabilityCondition) {
    const auto j = extract_povm(scheme_for({Experiment::Marking, 0.0, 0.0, 0.0}));
    try {
        conditional_probability(j, "2", StateVector2::basis(0));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroProbabilityCondition);
    }
    EXPECT_THROW(conditional_probability(j, "3", StateVector2::basis(0)), Error);
}
