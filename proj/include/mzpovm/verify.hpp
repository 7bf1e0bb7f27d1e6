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

// Self-verification suite: every module invariant plus the oracle cross-checks.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mzpovm {

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::size_t samples = 100;
    /// Threshold for the oracle-backed checks (direct probabilities and closed forms).
    double tolerance = 1e-10;
    /// Fault injection: added as perturbation * I to the first effect of every
    /// POVM handed to the oracle-backed checks. Zero in normal runs.
    double perturbation = 0.0;
};

struct CheckResult {
    std::string module;
    std::string name;
    bool passed;
    /// Worst observed value of the checked quantity (deviation, defect or count).
    double measured;
    double threshold;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    /// One line per check plus a summary; contains no timing data.
    std::string table() const;
};

VerifyReport run_verification(const VerifyOptions &options);

}  // namespace mzpovm
