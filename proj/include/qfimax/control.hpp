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

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qfimax/qfi.hpp"
#include "qfimax/spectra.hpp"

namespace qfimax {

/// Parameter-dependent Hamiltonian family H_alpha(t) on [0, horizon].
/// The parameter derivative dH/dalpha may be supplied analytically;
/// otherwise it is taken by central finite difference in alpha.
struct TimeDependentHamiltonian {
  using Evaluator = std::function<Eigen::MatrixXcd(double t, double alpha)>;

  TimeDependentHamiltonian(Evaluator hamiltonian, double horizon,
                           Eigen::Index dim,
                           Evaluator alpha_derivative = nullptr);

  Eigen::MatrixXcd at(double t, double alpha) const;
  Eigen::MatrixXcd derivative_at(double t, double alpha) const;

  Evaluator hamiltonian;
  Evaluator alpha_derivative;  // may be null
  double horizon = 0.0;
  Eigen::Index dim = 0;
};

/// Instantaneous control unitaries applied at given times in (0, horizon).
struct PulseSchedule {
  PulseSchedule() = default;
  PulseSchedule(std::vector<double> times, std::vector<Eigen::MatrixXcd> unitaries);

  std::vector<double> pulse_times;
  std::vector<Eigen::MatrixXcd> pulse_unitaries;
};

/// Time-sampled eigensystem of dH/dalpha.
/// eigenvalues[i] holds the pointwise decreasing eigenvalues at times[i].
/// eigenvectors[i] columns form the continuity-tracked eigenvector family:
/// column k follows one smooth branch through crossings, labeled by the
/// decreasing order at the first time sample where the spectrum is split.
struct EigTrajectory {
  Eigen::VectorXd times;
  std::vector<Eigen::VectorXd> eigenvalues;
  std::vector<Eigen::MatrixXcd> eigenvectors;
  Eigen::Index dim() const {
    return eigenvalues.empty() ? 0 : eigenvalues.front().size();
  }
};

EigTrajectory sample_eig_trajectory(const TimeDependentHamiltonian& h,
                                    double alpha, int samples);

/// Control-assisted upper bound on the QFI:
/// (1/2) sum_k p_{k,d-k+1} (integral of mu_k(t) - mu_{d-k+1}(t))^2,
/// with the integral taken by the trapezoidal rule on the trajectory grid.
double k_alpha_bound(const Spectrum& p, const EigTrajectory& traj);

/// Time-ordered evolution over [0, horizon]: midpoint-rule product of step
/// exponentials with the pulse unitaries inserted at their scheduled times.
Eigen::MatrixXcd propagate(const TimeDependentHamiltonian& h,
                           const PulseSchedule& controls, double alpha,
                           long steps);

/// Generator i U_alpha^dag dU_alpha/dalpha of the full controlled evolution,
/// realized as a central finite difference and symmetrized.
HermitianOperator fd_generator(const TimeDependentHamiltonian& h,
                               const PulseSchedule& controls, double alpha,
                               double delta, long steps);

/// Simultaneous single-spin pi rotations about x on n spin-j particles, one
/// pulse per sign change of the modulation; each pulse swaps |j,m> with
/// |j,-m> up to phase. dim must equal (2j+1)^n.
PulseSchedule pi_pulse_schedule(const std::vector<double>& sign_change_times,
                                Eigen::Index dim, int n_spins, double j);

/// Prepares the mirrored-superposition initial state from the eigenvectors
/// of dH/dalpha at t=0, evolves with the given controls, and compares the
/// resulting QFI (via fd_generator) against k_alpha_bound. The ratio tends
/// to one with growing steps when the controls keep the evolved eigenvector
/// family aligned with the instantaneous eigenvectors of dH/dalpha.
QFIReport saturation_check(const Spectrum& p, const TimeDependentHamiltonian& h,
                           const PulseSchedule& controls, double alpha,
                           long steps);

}  // namespace qfimax
