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

#include "mzpovm/extraction.hpp"

namespace mzpovm {

MeasurementScheme::MeasurementScheme(Operator4 unitary, StateVector2 probe_init, std::vector<LabeledProjection> outputs)
    : unitary_(unitary), probe_init_(probe_init), outputs_(std::move(outputs)) {
    if (!unitary_.is_finite() || !is_unitary(unitary_, tol::kIdentity))
        throw Error(ErrorKind::InvalidScheme, "coupling is not unitary within 1e-12");
    if (outputs_.empty()) throw Error(ErrorKind::InvalidScheme, "scheme has no outputs");
    Operator4 total;
    for (const LabeledProjection &m : outputs_) {
        if (!is_projection(m.projection))
            throw Error(ErrorKind::InvalidScheme, "output '" + m.label + "' is not a projection");
        total += m.projection;
    }
    if (max_abs_diff(total, Operator4::identity()) > tol::kStructural)
        throw Error(ErrorKind::InvalidScheme, "output projections do not sum to the identity");
}

MeasurementScheme scheme_for(const MzConfig &config, const ProbeTriple &probes, const StateVector2 &r1,
                             const StateVector2 &r2, Complex completion_phase) {
    const Operator4 u = tensor(mz_evolution(effective_delta(config)), Operator2::identity()) *
                        marking_unitary(probes, completion_phase);
    std::vector<LabeledProjection> outputs;
    // Paper display order: 11, 21, 12, 22.
    for (int l = 1; l <= 2; ++l) {
        const StateVector2 &r = l == 1 ? r1 : r2;
        for (int k = 1; k <= 2; ++k) {
            outputs.push_back({std::to_string(k) + std::to_string(l), output_projection(k, r.vec())});
        }
    }
    return MeasurementScheme(u, probes.p0, std::move(outputs));
}

MeasurementScheme scheme_for(const MzConfig &config) {
    const ProbeTriple probes = probes_for(config);
    if (const auto pointers = pointers_for(config)) {
        return scheme_for(config, probes, pointers->first, pointers->second);
    }
    const Operator4 u = tensor(mz_evolution(effective_delta(config)), Operator2::identity()) *
                        marking_unitary(probes);
    const Operator2 id = Operator2::identity();
    return MeasurementScheme(u, probes.p0,
                             {{"1", tensor(Operator2{1.0, 0.0, 0.0, 0.0}, id)},
                              {"2", tensor(Operator2{0.0, 0.0, 0.0, 1.0}, id)}});
}

DiscretePovm extract_povm(const MeasurementScheme &scheme) {
    const Vector<2> p0 = scheme.probe_init().vec();
    // U |j>|p0> for the two photon basis inputs.
    const std::array<Vector<4>, 2> images{scheme.unitary() * kron(Vector<2>{1.0, 0.0}, p0),
                                          scheme.unitary() * kron(Vector<2>{0.0, 1.0}, p0)};
    std::vector<Effect> effects;
    for (const LabeledProjection &m : scheme.outputs()) {
        Operator2 e;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) e(i, j) = sandwich(images[i], m.projection, images[j]);
        effects.push_back({m.label, e});
    }
    return DiscretePovm(std::move(effects));
}

ExperimentPovms with_marginals(DiscretePovm joint) {
    ExperimentPovms out{joint, marginal(joint, group_by_detector()), marginal(joint, group_by_probe()),
                        marginal(joint, group_by_coincidence())};
    return out;
}

namespace {

Effect quarter(const char *label, double a, double x, double y, double z) {
    return {label, from_pauli_components(0.25 * a, 0.25 * x, 0.25 * y, 0.25 * z)};
}

Effect half(const char *label, double a, double x, double y, double z) {
    return {label, from_pauli_components(0.5 * a, 0.5 * x, 0.5 * y, 0.5 * z)};
}

}  // namespace

ExperimentPovms closed_form(const MzConfig &config) {
    const double d = config.delta;
    const double sd = std::sin(d), cd = std::cos(d);
    switch (config.experiment) {
        case Experiment::Marking: {
            const double c2 = std::pow(std::cos(d / 2), 2), s2 = std::pow(std::sin(d / 2), 2);
            // Fractions of path projections.
            return {DiscretePovm({half("11", c2, 0, 0, c2), half("21", s2, 0, 0, s2), half("12", s2, 0, 0, -s2),
                                  half("22", c2, 0, 0, -c2)}),
                    DiscretePovm({half("1", 1, 0, 0, cd), half("2", 1, 0, 0, -cd)}),
                    DiscretePovm({half("1", 1, 0, 0, 1), half("2", 1, 0, 0, -1)}),
                    DiscretePovm({half("1", 2 * c2, 0, 0, 0), half("2", 2 * s2, 0, 0, 0)})};
        }
        case Experiment::Erasure: {
            const double cg = std::cos(config.gamma), sg = std::sin(config.gamma);
            const double nx = sd * cg, ny = sd * sg;
            return {DiscretePovm({quarter("11", 1, -nx, -ny, cd), quarter("21", 1, nx, ny, -cd),
                                  quarter("12", 1, nx, ny, cd), quarter("22", 1, -nx, -ny, -cd)}),
                    DiscretePovm({half("1", 1, 0, 0, cd), half("2", 1, 0, 0, -cd)}),
                    DiscretePovm({half("1", 1, 0, 0, 0), half("2", 1, 0, 0, 0)}),
                    DiscretePovm({half("1", 1, -nx, -ny, 0), half("2", 1, nx, ny, 0)})};
        }
        case Experiment::Quantitative: {
            const double ct = std::cos(config.theta), st = std::sin(config.theta);
            const double cc = ct * cd, ss = sd * st;
            return {DiscretePovm({quarter("11", 1 + cc, -ss, 0, cd + ct), quarter("21", 1 - cc, ss, 0, -(cd - ct)),
                                  quarter("12", 1 - cc, -ss, 0, cd - ct), quarter("22", 1 + cc, ss, 0, -(cd + ct))}),
                    DiscretePovm({half("1", 1, -ss, 0, cd), half("2", 1, ss, 0, -cd)}),
                    DiscretePovm({half("1", 1, 0, 0, ct), half("2", 1, 0, 0, -ct)}),
                    DiscretePovm({half("1", 1 + cc, 0, 0, 0), half("2", 1 - cc, 0, 0, 0)})};
        }
        case Experiment::Path:
        case Experiment::Interference: break;
    }
    throw Error(ErrorKind::UnsupportedExperiment,
                "no closed form for the " + std::string(experiment_name(config.experiment)) + " experiment");
}

std::vector<double> conditional_probability(const DiscretePovm &joint, const std::string &probe_label,
                                            const StateVector2 &psi) {
    if (probe_label != "1" && probe_label != "2")
        throw Error(ErrorKind::InvalidArgument, "probe outcome must be \"1\" or \"2\"");
    const Operator2 &e1 = joint.effect("1" + probe_label);
    const Operator2 &e2 = joint.effect("2" + probe_label);
    const double p1 = sandwich(psi.vec(), e1, psi.vec()).real();
    const double p2 = sandwich(psi.vec(), e2, psi.vec()).real();
    const double condition = p1 + p2;
    if (condition <= tol::kIdentity)
        throw Error(ErrorKind::ZeroProbabilityCondition, "probe outcome " + probe_label + " has zero probability");
    return {p1 / condition, p2 / condition};
}

}  // namespace mzpovm
