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

// Discrete POVMs on the photon.
//
// Label convention for two-index POVMs: "kl" with k the detector index and l
// the probe (pointer) index, stored in the order 11, 21, 12, 22. Grouping by
// the first index yields the detector marginal, grouping by the second yields
// the probe marginal.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzpovm/qubit.hpp"

namespace mzpovm {

struct Effect {
    std::string label;
    Operator2 op;
};

/// Ordered, labeled family of 2x2 effects. Construction does not validate;
/// use validate() for the POVM conditions.
class DiscretePovm {
   public:
    DiscretePovm() = default;
    explicit DiscretePovm(std::vector<Effect> effects);

    std::size_t size() const { return effects_.size(); }
    const std::vector<Effect> &effects() const { return effects_; }
    const Effect &operator[](std::size_t i) const { return effects_[i]; }
    /// Throws InvalidArgument for unknown labels.
    const Operator2 &effect(const std::string &label) const;
    bool has_label(const std::string &label) const;

    /// tr[rho E] for each effect, in order.
    std::vector<double> probabilities(const DensityOperator &rho) const;
    std::vector<double> probabilities(const StateVector2 &psi) const;

   private:
    std::vector<Effect> effects_;
};

enum class PovmKind { Invalid, Trivial, Sharp, Unsharp };

const char *povm_kind_name(PovmKind kind);

struct PovmValidation {
    bool valid = false;
    bool sharp = false;
    bool trivial = false;
    /// Human-readable description of each broken invariant with its magnitude.
    std::vector<std::string> failures;
    /// Largest violation found: negative eigenvalue depth, excess over 1, or normalization defect.
    double worst_violation = 0.0;

    /// Trivial takes precedence over sharp (e.g. {I, O} reports Trivial).
    PovmKind kind() const;
};

PovmValidation validate(const DiscretePovm &p, double tolerance = tol::kStructural);

/// Column-stochastic matrix: entry (l, k) is the probability of reporting l given sharp outcome k.
class StochasticMatrix {
   public:
    /// Throws InvalidStochasticMatrix for negative entries or columns not summing to 1 within 1e-12.
    StochasticMatrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);

    static StochasticMatrix identity(std::size_t n);
    static StochasticMatrix uniform(std::size_t rows, std::size_t cols);
    /// (1/2) [[1+f, 1-f], [1-f, 1+f]]
    static StochasticMatrix binary_symmetric(double f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t l, std::size_t k) const { return w_[l * cols_ + k]; }

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> w_;
};

/// Spectral measure {(I + sigma)/2, (I - sigma)/2} labeled "1", "2".
DiscretePovm spectral_measure(Axis axis);
/// {(I + f sigma_x)/2, (I - f sigma_x)/2}
DiscretePovm unsharp_x(double f);
/// {(I + g sigma_z)/2, (I - g sigma_z)/2}
DiscretePovm unsharp_z(double g);

/// E_l = sum_k w(l, k) P_k; output labels "1".."m".
DiscretePovm smear(const DiscretePovm &sharp, const StochasticMatrix &w);

/// Each group: output label and the input labels summed into it.
using Grouping = std::vector<std::pair<std::string, std::vector<std::string>>>;

/// Throws NotAPartition unless the groups cover every label exactly once.
DiscretePovm marginal(const DiscretePovm &p, const Grouping &grouping);

Grouping group_by_detector();     // "1" = 11 + 12, "2" = 21 + 22
Grouping group_by_probe();        // "1" = 11 + 21, "2" = 12 + 22
Grouping group_by_coincidence();  // "1" = 11 + 22, "2" = 12 + 21

struct UnsharpPair {
    double f;
    double g;
};

/// Slack on f^2 + g^2 <= 1 shared by joint_xz and jointly_measurable.
inline constexpr double kJointBoundaryTolerance = 1e-10;

bool jointly_measurable(UnsharpPair pair);

/// E_11 = (I + f sx + g sz)/4, E_21 = (I - f sx + g sz)/4,
/// E_12 = (I + f sx - g sz)/4, E_22 = (I - f sx - g sz)/4.
/// Throws NotJointlyMeasurable when f^2 + g^2 > 1 + 1e-10.
DiscretePovm joint_xz(UnsharpPair pair);

/// First effect written as ((1 + b) I + u . sigma)/2; returns |b| + |u| clamped to [0, 1].
double contrast(const DiscretePovm &p);
/// 1 - contrast^2, the minimal variance of the +-1 valued outcome.
double unsharpness(const DiscretePovm &p);

}  // namespace mzpovm
