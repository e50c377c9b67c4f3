/* Copyright 2026 The qfimax Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qfimax/rng.hpp"
#include "qfimax/spectra.hpp"
#include "qfimax/thermal.hpp"

namespace qfimax::verify {

struct SuiteResult {
  std::string name;
  long trials = 0;
  long failures = 0;
  bool passed() const { return failures == 0; }
};

/// Random state spectrum: flat Dirichlet weights, sorted decreasing.
Spectrum random_state_spectrum(Eigen::Index d, Rng& rng);

/// Random Hermitian matrix with Gaussian entries (GUE-type).
Eigen::MatrixXcd random_hermitian(Eigen::Index d, Rng& rng);

/// Degeneracy counts by direct convolution of the single-die distribution;
/// independent of the inclusion-exclusion formula it cross-checks.
DegeneracyTable dice_degeneracy_convolution(int n, double j);

/// Randomized property suites. `samples` counts random draws per dimension
/// where a suite sweeps dimensions. All suites are deterministic per seed.
SuiteResult run_pair_coeff_inequalities(std::uint64_t seed, long samples);
SuiteResult run_q_coefficient_conditions(std::uint64_t seed, long samples);
SuiteResult run_bloomfield_watson(std::uint64_t seed, long samples);
SuiteResult run_gap_majorization(std::uint64_t seed, long samples);
SuiteResult run_schur_monotonicity(std::uint64_t seed, long samples);
SuiteResult run_degeneracy_oracle();
SuiteResult run_optimal_state_saturation(std::uint64_t seed, long samples_per_dim);

/// The full battery with the per-suite default scaling of `samples`.
std::vector<SuiteResult> run_all(std::uint64_t seed, long samples);

}  // namespace qfimax::verify
