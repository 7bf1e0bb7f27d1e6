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

// Brute-force checks that never consult a closed form or an extracted POVM:
// direct compound-state probabilities, seeded random sampling and grid
// search over the Bloch sphere.
//
// Random numbers come from PCG32 (XSH-RR output, 64-bit LCG state with
// multiplier 6364136223846793005). Sample i of a run with seed s draws from
// the stream seeded with initstate = s, initseq = i, so every sample can be
// generated independently of the others. Doubles take 53 bits from two
// outputs: ((a >> 5) * 2^26 + (b >> 6)) / 2^53. Normals use the Box-Muller
// transform on (1 - u1, u2).

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mzpovm/extraction.hpp"
#include "mzpovm/interferometer.hpp"
#include "mzpovm/qubit.hpp"

namespace mzpovm {

class Pcg32 {
   public:
    Pcg32(std::uint64_t initstate, std::uint64_t initseq);

    std::uint32_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal pair via Box-Muller.
    std::pair<double, double> normal_pair();

   private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 0;
};

struct OracleConfig {
    std::uint64_t seed = 42;
    std::size_t samples = 100;
    /// Coarse angular step of grid_maximize, in (0, pi/8].
    double grid_resolution = 0.1;
    double tolerance = 1e-10;

    /// Throws InvalidArgument when a field is out of range.
    void check() const;
};

/// Haar-random qubit state number `index` of the stream family `seed`.
StateVector2 random_pure_state(std::uint64_t seed, std::uint64_t index);
/// Bloch vector uniform in the unit ball.
BlochVector random_bloch_in_ball(std::uint64_t seed, std::uint64_t index);

struct LabeledProbability {
    std::string label;
    double probability;
};

/// <Psi_f|M|Psi_f> for Psi_f = U (psi (x) p0), one entry per scheme output.
std::vector<LabeledProbability> direct_probabilities(const MeasurementScheme &scheme, const StateVector2 &psi);

/// Max over samples and outcomes of |direct - <psi|E|psi>| using the given POVM.
double cross_check(const MeasurementScheme &scheme, const DiscretePovm &povm, const OracleConfig &oracle);
/// Same, with the POVM extracted from the experiment's own scheme.
double cross_check(const MzConfig &config, const OracleConfig &oracle);

enum class SphereDomain { Sphere, Equator };

struct GridMaximum {
    double value;
    BlochVector argmax;
};

/// Latitude/longitude sweep at oracle.grid_resolution, then a local pattern
/// search whose step is halved 20 times. Objectives see unit Bloch vectors.
GridMaximum grid_maximize(const std::function<double(const BlochVector &)> &objective, const OracleConfig &oracle,
                          SphereDomain domain = SphereDomain::Sphere);

}  // namespace mzpovm
