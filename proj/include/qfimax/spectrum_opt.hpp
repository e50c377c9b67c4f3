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
#include <vector>

#include <Eigen/Dense>

#include "qfimax/spectra.hpp"

namespace qfimax {

/// Maximize the spectral QFI bound over state spectra of fixed purity:
/// generator eigenvalues (decreasing) and a purity gamma in [1/d, 1].
struct PurityProblem {
  PurityProblem(Eigen::VectorXd h_eigs_in, double gamma_in);
  Eigen::VectorXd h_eigs;
  double gamma;
};

struct PuritySolution {
  Spectrum p;
  double value = 0.0;
  double kkt_residual = 0.0;
};

struct PurityScanRow {
  double gamma = 0.0;
  Eigen::VectorXd p;
  double value = 0.0;
};

/// Multi-start projected gradient ascent on the sphere-simplex intersection
/// {sum p = 1, sum p^2 = gamma, p >= 0}; spectra are kept sorted, which is a
/// valid projection because the objective is evaluated on the sorted vector.
/// Ties between converged candidates break toward the lexicographically
/// largest sorted spectrum. Deterministic per seed.
PuritySolution optimize_spectrum(const PurityProblem& prob, int restarts,
                                 std::uint64_t seed);

/// optimize_spectrum over a purity grid; points run in parallel with
/// deterministic per-point seeding and output order.
std::vector<PurityScanRow> purity_scan(const Eigen::VectorXd& h_eigs,
                                       const std::vector<double>& gammas,
                                       int restarts, std::uint64_t seed);

}  // namespace qfimax
