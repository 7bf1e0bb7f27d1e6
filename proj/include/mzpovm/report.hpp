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

// Machine-readable reports for a single experiment run and for parameter sweeps.

#pragma once

#include <cstddef>
#include <numbers>
#include <string>

#include "json.hpp"
#include "mzpovm/interferometer.hpp"
#include "mzpovm/qubit.hpp"

namespace mzpovm {

struct RunRequest {
    MzConfig config;
    Complex alpha{1.0 / std::numbers::sqrt2, 0.0};
    Complex beta{1.0 / std::numbers::sqrt2, 0.0};
};

/// Full report: direct output probabilities, extracted POVM, marginals with
/// classification, conditional probabilities and every applicable relation.
nlohmann::json run_report(const RunRequest &request);

/// Sorted keys, shortest round-trip floats, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json &j);

enum class SweepParameter { Delta, Gamma, Theta };

/// Throws InvalidArgument for unknown names.
SweepParameter parse_sweep_parameter(const std::string &name);

struct SweepRequest {
    RunRequest base;
    SweepParameter parameter = SweepParameter::Delta;
    double from = 0.0;
    double to = 1.0;
    std::size_t steps = 2;

    /// Throws InvalidArgument unless from < to and 2 <= steps <= 100000.
    void check() const;
};

/// Column order of sweep_csv.
inline constexpr const char *kSweepHeader =
    "param_value,p11,p12,p21,p22,F_contrast,G_contrast,H_contrast,C_P,C_Ix,D,V_e,duality_slack";

/// Header row then one row per step; quantities an experiment lacks are empty fields.
std::string sweep_csv(const SweepRequest &request);

}  // namespace mzpovm
