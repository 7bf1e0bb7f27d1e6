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

// Uncertainty, duality and erasure relations evaluated as audit records.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzpovm/povm.hpp"
#include "mzpovm/qubit.hpp"

namespace mzpovm {

enum class RelationKind { Geq, Leq, Eq };

const char *relation_kind_name(RelationKind kind);

/// Tolerance applied when deciding RelationReport::satisfied.
inline constexpr double kRelationTolerance = 1e-9;

struct RelationReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    RelationKind kind = RelationKind::Eq;
    bool satisfied = false;
    /// Geq: lhs - rhs. Leq: rhs - lhs. Eq: |lhs - rhs|.
    double slack = 0.0;
    /// Named auxiliary quantities (alternative forms of a side, optimizers, ...).
    std::map<std::string, double> details;
};

RelationReport make_report(std::string name, double lhs, double rhs, RelationKind kind,
                           double tolerance = kRelationTolerance);

/// Var(sx) Var(sz) >= |<[sx,sz]>|^2/4 + (<{sx,sz}> - 2<sx><sz>)^2/4, every
/// term evaluated as a trace. Details: "identity_rhs" = <sy>^2 + <sx>^2<sz>^2,
/// "bloch_norm_sq" = |r|^2.
RelationReport variance_ur(const DensityOperator &rho);

/// -sum p log2 p over the outcome distribution, with 0 log 0 = 0.
double shannon_entropy(const DiscretePovm &p, const DensityOperator &rho);

/// H(A) + H(B) >= -2 log2 max |<psi|P_i Q_k|psi>| / (|P_i psi| |Q_k psi|).
/// Terms with |P_i psi| or |Q_k psi| below 1e-12 are skipped. Throws NotSharp.
RelationReport entropic_bound(const DiscretePovm &a, const DiscretePovm &b, const StateVector2 &psi);

/// Entropic triple (>= 2 bits), variance triple (>= 2), contrast triple (<= 1).
std::vector<RelationReport> triple_relations(const DensityOperator &rho);

struct Contrasts {
    double path;            // |<sz>|
    double interference_x;  // |<sx>|
    double interference_y;  // |<sy>|
    double visibility;      // sqrt(<sx>^2 + <sy>^2)
};

Contrasts contrasts(const DensityOperator &rho);

struct DistinguishabilityResult {
    /// Optimal pointer Bloch direction; empty when |alpha|^2 p1 - |beta|^2 p2 vanishes.
    std::optional<BlochVector> r0;
    /// Maximal probability of a correct path inference.
    double L = 0.5;
    /// 2L - 1.
    double D = 0.0;
};

/// Throws NotNormalized unless |alpha|^2 + |beta|^2 = 1 within 1e-10.
DistinguishabilityResult distinguishability(Complex alpha, Complex beta, const StateVector2 &p1,
                                            const StateVector2 &p2);

/// sqrt(1 - 4 |alpha|^2 |beta|^2 |<p1|p2>|^2)
double distinguishability_closed_form(Complex alpha, Complex beta, const StateVector2 &p1, const StateVector2 &p2);

/// Coincidence POVM for pointer direction r (r1 = r, r2 = -r):
/// H1 = (I (1 + r.(p1 - p2)/2) + r.(p1 + p2)/2 sz)/2, H2 = I - H1.
DiscretePovm coincidence_povm(const StateVector2 &p1, const StateVector2 &p2, const BlochVector &r);

/// Variance of the +-1 valued outcome of a two-outcome POVM: 1 - (<E1> - <E2>)^2.
double outcome_variance(const DiscretePovm &p, const DensityOperator &rho);

struct Visibility {
    double value;
    /// Optimal equatorial direction (cos d, sin d, 0).
    BlochVector n;
};

/// Maximal |tr(rho sigma_n)| over equatorial n; equals 2 |rho_12|.
Visibility visibility_reduced(const DensityOperator &rho_e);
/// Maximal |tr(rho sigma_n)| over the full sphere; equals |r|.
double visibility_full_sphere(const DensityOperator &rho);

/// Reduced photon state after marking: alpha|1>|p1> + beta|2>|p2> traced over the probe.
DensityOperator marked_photon_state(Complex alpha, Complex beta, const StateVector2 &p1, const StateVector2 &p2);

/// V_e^2 + D^2 = 1 and Var(H0, psi)|r0 + Var(sigma_n, rho_e)|opt = 1.
/// Details carry D, V_e, L and the off-optimum sum at r = +z (not asserted).
std::pair<RelationReport, RelationReport> erasure_duality(Complex alpha, Complex beta, const StateVector2 &p1,
                                                          const StateVector2 &p2);

struct TotalStateDuality {
    double D;
    double V_e;
};

/// D and V_e for an arbitrary (possibly mixed) photon-probe density operator.
/// Throws InvalidArgument unless rho is a density operator within 1e-10.
TotalStateDuality duality_of_total_state(const Operator4 &rho);

/// D^2 + V_e^2 <= 1 for an arbitrary photon-probe density operator.
RelationReport duality_inequality(const Operator4 &rho);

/// U_F + U_G >= 1 for two two-outcome POVMs measured jointly.
RelationReport inaccuracy_relation(const DiscretePovm &f, const DiscretePovm &g);

}  // namespace mzpovm
