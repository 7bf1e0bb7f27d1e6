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

#include "mzpovm/interferometer.hpp"

#include <string>

namespace mzpovm {

std::string_view experiment_name(Experiment e) {
    switch (e) {
        case Experiment::Path: return "path";
        case Experiment::Interference: return "interference";
        case Experiment::Marking: return "marking";
        case Experiment::Erasure: return "erasure";
        case Experiment::Quantitative: return "quantitative";
    }
    return "path";
}

Experiment parse_experiment(std::string_view name) {
    for (Experiment e : {Experiment::Path, Experiment::Interference, Experiment::Marking, Experiment::Erasure,
                         Experiment::Quantitative}) {
        if (experiment_name(e) == name) return e;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown experiment '" + std::string(name) + "'");
}

double effective_delta(const MzConfig &config) {
    return config.experiment == Experiment::Path ? 0.0 : config.delta;
}

Operator2 mz_evolution(double delta) {
    const Complex i{0.0, 1.0};
    const Complex e = std::polar(1.0, delta);
    // Columns are the images of |1> and |2>.
    return Operator2{0.5 * (-e - 1.0), 0.5 * i * (1.0 - e),  //
                     0.5 * i * (e - 1.0), -0.5 * (1.0 + e)};
}

std::pair<StateVector2, StateVector2> marker_states(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {StateVector2{c, s}, StateVector2{s, c}};
}

Operator4 marking_unitary(const ProbeTriple &probes, Complex complement_phase) {
    if (std::abs(std::abs(complement_phase) - 1.0) > tol::kStructural)
        throw Error(ErrorKind::InvalidArgument, "completion phase must have unit modulus");
    const StateVector2 p0_perp = perpendicular(probes.p0);
    auto block = [&](const StateVector2 &pk) {
        return Operator2::outer(pk.vec(), probes.p0.vec()) +
               complement_phase * Operator2::outer(perpendicular(pk).vec(), p0_perp.vec());
    };
    const Operator2 path1{1.0, 0.0, 0.0, 0.0};
    const Operator2 path2{0.0, 0.0, 0.0, 1.0};
    return tensor(path1, block(probes.p1)) + tensor(path2, block(probes.p2));
}

StateVector4 final_state(const StateVector2 &psi, const ProbeTriple &probes, const MzConfig &config) {
    const Operator4 evolution = tensor(mz_evolution(effective_delta(config)), Operator2::identity());
    const Vector<4> initial = kron(psi.vec(), probes.p0.vec());
    return StateVector4(evolution * (marking_unitary(probes) * initial));
}

Operator4 output_projection(int k, const Vector<2> &pointer) {
    if (k != 1 && k != 2) throw Error(ErrorKind::InvalidArgument, "detector index must be 1 or 2");
    const StateVector2 r(pointer);
    const Operator2 path = k == 1 ? Operator2{1.0, 0.0, 0.0, 0.0} : Operator2{0.0, 0.0, 0.0, 1.0};
    return tensor(path, Operator2::projector(r.vec()));
}

ProbeTriple probes_for(const MzConfig &config) {
    const StateVector2 q1 = StateVector2::basis(0);
    const StateVector2 q2 = StateVector2::basis(1);
    switch (config.experiment) {
        case Experiment::Path:
        case Experiment::Interference: return {q1, q1, q1};
        case Experiment::Marking:
        case Experiment::Erasure: return {q1, q1, q2};
        case Experiment::Quantitative: {
            auto [p1, p2] = marker_states(config.theta);
            return {q1, p1, p2};
        }
    }
    return {q1, q1, q1};
}

std::optional<std::pair<StateVector2, StateVector2>> pointers_for(const MzConfig &config) {
    const Vector<2> q1{1.0, 0.0}, q2{0.0, 1.0};
    switch (config.experiment) {
        case Experiment::Path:
        case Experiment::Interference: return std::nullopt;
        case Experiment::Marking:
        case Experiment::Quantitative: return std::pair{StateVector2(q1), StateVector2(q2)};
        case Experiment::Erasure: {
            // (p1 +- e^{i gamma} p2)/sqrt 2 with p1 = |q1>, p2 = |q2>.
            const Complex phase = std::polar(1.0, config.gamma);
            const double h = 1.0 / std::sqrt(2.0);
            return std::pair{StateVector2{h, h * phase}, StateVector2{h, -h * phase}};
        }
    }
    return std::nullopt;
}

}  // namespace mzpovm
