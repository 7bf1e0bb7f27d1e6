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

// Mach-Zehnder optics, path-marking coupling and the compound output states.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzpovm/qubit.hpp"

namespace mzpovm {

enum class Experiment { Path, Interference, Marking, Erasure, Quantitative };

std::string_view experiment_name(Experiment e);
/// Throws InvalidArgument for unknown names.
Experiment parse_experiment(std::string_view name);

/// Angles in radians. Fields a given experiment does not use are kept but ignored.
struct MzConfig {
    Experiment experiment = Experiment::Path;
    double delta = 0.0;
    double gamma = 0.0;
    double theta = 0.0;
};

/// Phase actually applied by the interferometer. Path detection always runs
/// at delta = 0; every other experiment uses config.delta.
double effective_delta(const MzConfig &config);

/// Neutral probe state p0 and the markers p1, p2 attached to paths 1 and 2.
struct ProbeTriple {
    StateVector2 p0;
    StateVector2 p1;
    StateVector2 p2;
};

/// |1> -> ((-e^{id} - 1)|1> + i(e^{id} - 1)|2>)/2, |2> -> (i(1 - e^{id})|1> - (1 + e^{id})|2>)/2
Operator2 mz_evolution(double delta);

/// p1 = cos(t/2)|q1> + sin(t/2)|q2>, p2 = sin(t/2)|q1> + cos(t/2)|q2>; <p1|p2> = sin t.
std::pair<StateVector2, StateVector2> marker_states(double theta);

/// |1><1| (x) V1 + |2><2| (x) V2 with V_k = |p_k><p0| + c |p_k^perp><p0^perp|.
/// The complement phase c (|c| = 1) selects a completion off the input
/// subspace; the default c = 1 is the canonical one.
Operator4 marking_unitary(const ProbeTriple &probes, Complex complement_phase = 1.0);

/// (mz_evolution(delta) (x) I) . marking_unitary . (psi (x) p0)
StateVector4 final_state(const StateVector2 &psi, const ProbeTriple &probes, const MzConfig &config);

/// |k><k| (x) |r><r|, k in {1, 2}. Throws NotNormalized for a non-unit pointer.
Operator4 output_projection(int k, const Vector<2> &pointer);

/// Probe triple each experiment uses: p0 = |q1>; no marking for path and
/// interference, orthogonal markers |q1>, |q2> for marking and erasure,
/// tilted markers for quantitative erasure.
ProbeTriple probes_for(const MzConfig &config);

/// Probe pointer basis read out jointly with the detectors; empty for the
/// two experiments without a probe readout.
std::optional<std::pair<StateVector2, StateVector2>> pointers_for(const MzConfig &config);

}  // namespace mzpovm
