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

#include "qfimax/control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "qfimax/spin.hpp"

namespace qfimax {

namespace {

using cd = std::complex<double>;

// Reorders and rephases the columns of `current` so that column k continues
// the branch of `previous` column k: greedy assignment on the largest
// overlaps, then a phase twist making each matched overlap real positive.
Eigen::MatrixXcd match_columns(const Eigen::MatrixXcd& previous,
                               const Eigen::MatrixXcd& current) {
  const Eigen::Index d = previous.cols();
  const Eigen::MatrixXcd overlap = previous.adjoint() * current;
  Eigen::MatrixXd weight = overlap.cwiseAbs();
  std::vector<bool> row_used(d, false), col_used(d, false);
  std::vector<Eigen::Index> assign(d, -1);
  for (Eigen::Index pick = 0; pick < d; ++pick) {
    Eigen::Index best_r = -1, best_c = -1;
    double best = -1.0;
    for (Eigen::Index r = 0; r < d; ++r) {
      if (row_used[r]) continue;
      for (Eigen::Index c = 0; c < d; ++c) {
        if (col_used[c]) continue;
        if (weight(r, c) > best) {
          best = weight(r, c);
          best_r = r;
          best_c = c;
        }
      }
    }
    row_used[best_r] = true;
    col_used[best_c] = true;
    assign[best_r] = best_c;
  }
  Eigen::MatrixXcd matched(previous.rows(), d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const Eigen::Index c = assign[r];
    cd phase(1.0, 0.0);
    const cd o = overlap(r, c);
    if (std::abs(o) > 1e-14) phase = std::conj(o) / std::abs(o);
    matched.col(r) = current.col(c) * phase;
  }
  return matched;
}

Eigen::MatrixXcd symmetrized(const Eigen::MatrixXcd& m) {
  return 0.5 * (m + m.adjoint());
}

}  // namespace

TimeDependentHamiltonian::TimeDependentHamiltonian(Evaluator hamiltonian_fn,
                                                   double horizon_in,
                                                   Eigen::Index dim_in,
                                                   Evaluator alpha_derivative_fn)
    : hamiltonian(std::move(hamiltonian_fn)),
      alpha_derivative(std::move(alpha_derivative_fn)),
      horizon(horizon_in),
      dim(dim_in) {
  if (!hamiltonian) throw std::invalid_argument("TimeDependentHamiltonian: no evaluator");
  if (!(horizon > 0.0)) throw std::invalid_argument("TimeDependentHamiltonian: horizon must be positive");
  if (dim < 1) throw std::invalid_argument("TimeDependentHamiltonian: dim must be >= 1");
}

Eigen::MatrixXcd TimeDependentHamiltonian::at(double t, double alpha) const {
  Eigen::MatrixXcd m = hamiltonian(t, alpha);
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("TimeDependentHamiltonian: evaluator dimension mismatch");
  return m;
}

Eigen::MatrixXcd TimeDependentHamiltonian::derivative_at(double t, double alpha) const {
  if (alpha_derivative) {
    Eigen::MatrixXcd m = alpha_derivative(t, alpha);
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("TimeDependentHamiltonian: derivative dimension mismatch");
    return m;
  }
  const double delta = 1e-6 * std::max(1.0, std::abs(alpha));
  return (at(t, alpha + delta) - at(t, alpha - delta)) / (2.0 * delta);
}

PulseSchedule::PulseSchedule(std::vector<double> times,
                             std::vector<Eigen::MatrixXcd> unitaries)
    : pulse_times(std::move(times)), pulse_unitaries(std::move(unitaries)) {
  if (pulse_times.size() != pulse_unitaries.size())
    throw std::invalid_argument("PulseSchedule: times/unitaries size mismatch");
  for (std::size_t i = 0; i + 1 < pulse_times.size(); ++i)
    if (!(pulse_times[i] < pulse_times[i + 1]))
      throw std::invalid_argument("PulseSchedule: times must be strictly increasing");
  for (const auto& u : pulse_unitaries) {
    if (u.rows() != u.cols() || u.rows() < 1)
      throw std::invalid_argument("PulseSchedule: pulse unitary must be square");
    const Eigen::MatrixXcd gram = u.adjoint() * u;
    if ((gram - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument("PulseSchedule: pulse matrix is not unitary");
  }
}

EigTrajectory sample_eig_trajectory(const TimeDependentHamiltonian& h,
                                    double alpha, int samples) {
  if (samples < 2)
    throw std::invalid_argument("sample_eig_trajectory: need at least 2 samples");
  const Eigen::Index d = h.dim;
  EigTrajectory traj;
  traj.times = Eigen::VectorXd::LinSpaced(samples, 0.0, h.horizon);
  traj.eigenvalues.reserve(samples);
  traj.eigenvectors.reserve(samples);
  double scale = 0.0;
  for (int i = 0; i < samples; ++i) {
    const HermitianOperator op(h.derivative_at(traj.times(i), alpha));
    traj.eigenvalues.push_back(op.eigenvalues());
    traj.eigenvectors.push_back(op.eigenvectors());
    scale = std::max(scale, op.eigenvalues().cwiseAbs().maxCoeff());
  }
  if (d == 1) return traj;

  // Anchor the branch labels at the first sample whose spectrum is split;
  // a fully degenerate dH/dalpha (e.g. at t=0) gets its labels from the
  // adjacent split sample, i.e. from the one-sided limit.
  const double split_tol = 1e-12 * std::max(1.0, scale);
  int anchor = 0;
  for (int i = 0; i < samples; ++i) {
    if (traj.eigenvalues[i](0) - traj.eigenvalues[i](d - 1) > split_tol) {
      anchor = i;
      break;
    }
  }
  for (int i = anchor + 1; i < samples; ++i)
    traj.eigenvectors[i] = match_columns(traj.eigenvectors[i - 1], traj.eigenvectors[i]);
  for (int i = anchor - 1; i >= 0; --i)
    traj.eigenvectors[i] = match_columns(traj.eigenvectors[i + 1], traj.eigenvectors[i]);
  return traj;
}

double k_alpha_bound(const Spectrum& p, const EigTrajectory& traj) {
  const Eigen::Index d = p.size();
  if (traj.times.size() < 2 || traj.eigenvalues.empty())
    throw std::invalid_argument("k_alpha_bound: empty trajectory grid");
  if (traj.dim() != d)
    throw std::invalid_argument("k_alpha_bound: dimension mismatch");
  double total = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    double integral = 0.0;
    for (Eigen::Index i = 0; i + 1 < traj.times.size(); ++i) {
      const double fa = traj.eigenvalues[i](k) - traj.eigenvalues[i](d - 1 - k);
      const double fb = traj.eigenvalues[i + 1](k) - traj.eigenvalues[i + 1](d - 1 - k);
      integral += 0.5 * (fa + fb) * (traj.times(i + 1) - traj.times(i));
    }
    total += pair_coeff(p, k, d - 1 - k) * integral * integral;
  }
  return 0.5 * total;
}

Eigen::MatrixXcd propagate(const TimeDependentHamiltonian& h,
                           const PulseSchedule& controls, double alpha,
                           long steps) {
  if (steps < 1) throw std::invalid_argument("propagate: steps must be >= 1");
  const double horizon = h.horizon;
  for (double t : controls.pulse_times)
    if (!(t > 0.0 && t < horizon))
      throw std::invalid_argument("propagate: pulse time outside (0, horizon)");

  std::vector<double> boundaries;
  boundaries.push_back(0.0);
  boundaries.insert(boundaries.end(), controls.pulse_times.begin(),
                    controls.pulse_times.end());
  boundaries.push_back(horizon);

  const Eigen::Index d = h.dim;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  for (std::size_t seg = 0; seg + 1 < boundaries.size(); ++seg) {
    const double a = boundaries[seg];
    const double b = boundaries[seg + 1];
    const long n = std::max<long>(1, std::llround(static_cast<double>(steps) * (b - a) / horizon));
    const double dt = (b - a) / static_cast<double>(n);
    for (long i = 0; i < n; ++i) {
      const double tm = a + (static_cast<double>(i) + 0.5) * dt;
      u = hermitian_expm(symmetrized(h.at(tm, alpha)), cd(0.0, -dt)) * u;
    }
    if (seg < controls.pulse_unitaries.size()) {
      if (controls.pulse_unitaries[seg].rows() != d)
        throw std::invalid_argument("propagate: pulse dimension mismatch");
      u = controls.pulse_unitaries[seg] * u;
    }
  }
  return u;
}

HermitianOperator fd_generator(const TimeDependentHamiltonian& h,
                               const PulseSchedule& controls, double alpha,
                               double delta, long steps) {
  if (!(delta > 0.0)) throw std::invalid_argument("fd_generator: delta must be positive");
  const Eigen::MatrixXcd u0 = propagate(h, controls, alpha, steps);
  const Eigen::MatrixXcd up = propagate(h, controls, alpha + delta, steps);
  const Eigen::MatrixXcd um = propagate(h, controls, alpha - delta, steps);
  const Eigen::MatrixXcd gen = cd(0.0, 1.0) * (u0.adjoint() * ((up - um) / (2.0 * delta)));
  return HermitianOperator(gen);
}

PulseSchedule pi_pulse_schedule(const std::vector<double>& sign_change_times,
                                Eigen::Index dim, int n_spins, double j) {
  if (n_spins < 1) throw std::invalid_argument("pi_pulse_schedule: n_spins must be >= 1");
  const Eigen::Index single = spin_dimension(j);
  Eigen::Index expected = 1;
  for (int i = 0; i < n_spins; ++i) expected *= single;
  if (expected != dim)
    throw std::invalid_argument("pi_pulse_schedule: dim must equal (2j+1)^n");
  if (sign_change_times.empty()) return PulseSchedule{};
  const Eigen::MatrixXcd pulse = kron_pow(pi_pulse_x(j), n_spins);
  std::vector<Eigen::MatrixXcd> unitaries(sign_change_times.size(), pulse);
  return PulseSchedule(sign_change_times, std::move(unitaries));
}

QFIReport saturation_check(const Spectrum& p, const TimeDependentHamiltonian& h,
                           const PulseSchedule& controls, double alpha,
                           long steps) {
  const int samples = static_cast<int>(std::min<long>(steps + 1, 200001));
  const EigTrajectory traj = sample_eig_trajectory(h, alpha, samples);
  const double bound = k_alpha_bound(p, traj);

  const DensityOperator rho(p, paired_superposition_basis(traj.eigenvectors.front()));
  const double delta = 1e-5 * std::max(1.0, std::abs(alpha));
  const HermitianOperator coarse = fd_generator(h, controls, alpha, delta, steps);
  const HermitianOperator fine = fd_generator(h, controls, alpha, 0.5 * delta, steps);
  // Richardson combination of the two central differences.
  const HermitianOperator gen((4.0 * fine.matrix() - coarse.matrix()) / 3.0);
  return make_qfi_report(qfi(rho, gen), bound);
}

}  // namespace qfimax
