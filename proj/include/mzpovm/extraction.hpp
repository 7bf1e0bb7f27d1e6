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

// Measured input observables of measurement schemes.
//
// A scheme couples the photon to a probe prepared in p0 through a unitary U on
// the compound space and then measures a sharp output observable {M_kl}. The
// induced photon POVM has matrix elements
//     E_kl(i, j) = <i|<p0| U^dagger M_kl U |j>|p0>,
// so that <Psi_f|M_kl|Psi_f> = <psi|E_kl|psi> for every photon input psi.

#pragma once

#include <string>
#include <vector>

#include "mzpovm/interferometer.hpp"
#include "mzpovm/povm.hpp"

namespace mzpovm {

struct LabeledProjection {
    std::string label;
    Operator4 projection;
};

class MeasurementScheme {
   public:
    /// Throws InvalidScheme unless U is unitary (1e-12), every output is a
    /// projection and the outputs sum to I4 (1e-10).
    MeasurementScheme(Operator4 unitary, StateVector2 probe_init, std::vector<LabeledProjection> outputs);

    const Operator4 &unitary() const { return unitary_; }
    const StateVector2 &probe_init() const { return probe_init_; }
    const std::vector<LabeledProjection> &outputs() const { return outputs_; }

   private:
    Operator4 unitary_;
    StateVector2 probe_init_;
    std::vector<LabeledProjection> outputs_;
};

/// Scheme realizing an interferometer experiment. Path and interference read
/// only the detectors ("1", "2"); the others read detector and probe pointer
/// jointly ("11", "21", "12", "22").
MeasurementScheme scheme_for(const MzConfig &config);
/// Same, with an explicit probe triple and pointer basis (any experiment with a probe readout).
MeasurementScheme scheme_for(const MzConfig &config, const ProbeTriple &probes, const StateVector2 &r1,
                             const StateVector2 &r2, Complex completion_phase = 1.0);

DiscretePovm extract_povm(const MeasurementScheme &scheme);

/// Joint POVM together with its detector (F), probe (G) and coincidence (H) marginals.
struct ExperimentPovms {
    DiscretePovm joint;
    DiscretePovm detector;
    DiscretePovm probe;
    DiscretePovm coincidence;
};

/// Groups a four-outcome joint POVM into its three marginals.
ExperimentPovms with_marginals(DiscretePovm joint);

/// Analytic POVMs for the marking, erasure and quantitative experiments,
/// written out term by term. Throws UnsupportedExperiment otherwise.
ExperimentPovms closed_form(const MzConfig &config);

/// prob(D_k | probe outcome l) = <psi|E_kl|psi> / <psi|G_l|psi> for k = 1, 2.
/// probe_label is "1" or "2". Throws ZeroProbabilityCondition when the
/// denominator is at most 1e-12.
std::vector<double> conditional_probability(const DiscretePovm &joint, const std::string &probe_label,
                                            const StateVector2 &psi);

}  // namespace mzpovm
