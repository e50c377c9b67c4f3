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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "qfimax/control.hpp"
#include "qfimax/spin.hpp"
#include "qfimax/verify.hpp"
#include "test_util.hpp"

using namespace qfimax;
using namespace qfimax::testutil;
using cd = std::complex<double>;

namespace {

TimeDependentHamiltonian phase_shift(const Eigen::MatrixXcd& g, double horizon) {
  return TimeDependentHamiltonian(
      [g](double, double a) { return (a * g).eval(); }, horizon, g.rows(),
      [g](double, double) { return g; });
}

/// Spin-1/2 drive a*cos(omega t) Sz.
TimeDependentHamiltonian cos_amplitude_drive(double omega, double horizon) {
  const Eigen::MatrixXcd sz = spin_z(0.5);
  return TimeDependentHamiltonian(
      [sz, omega](double t, double a) { return (a * std::cos(omega * t) * sz).eval(); },
      horizon, 2,
      [sz, omega](double t, double) { return (std::cos(omega * t) * sz).eval(); });
}

/// Midpoint-rule accumulation of the generator integral
/// int U^dag(t) dH(t) U(t) dt; an independent quadrature route used as an
/// oracle for the finite-difference generator (no pulses).
Eigen::MatrixXcd integral_generator(const TimeDependentHamiltonian& h, double alpha,
                                    long steps) {
  const double dt = h.horizon / static_cast<double>(steps);
  const Eigen::Index d = h.dim;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  for (long i = 0; i < steps; ++i) {
    const double tm = (static_cast<double>(i) + 0.5) * dt;
    const Eigen::MatrixXcd step_h = h.at(tm, alpha);
    const Eigen::MatrixXcd u_mid = hermitian_expm(step_h, cd(0.0, -0.5 * dt)) * u;
    acc += u_mid.adjoint() * h.derivative_at(tm, alpha) * u_mid * dt;
    u = hermitian_expm(step_h, cd(0.0, -dt)) * u;
  }
  return acc;
}

}  // namespace

TEST_CASE("propagate: zero Hamiltonian gives the identity") {
  const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(2, 2);
  const TimeDependentHamiltonian h(
      [zero](double, double) { return zero; }, 1.0, 2);
  const Eigen::MatrixXcd u = propagate(h, PulseSchedule{}, 0.7, 100);
  CHECK((u - Eigen::MatrixXcd::Identity(2, 2)).norm() <= 1e-14);
}

TEST_CASE("propagate: constant Hamiltonian matches the closed-form exponential") {
  Rng rng(3);
  const Eigen::MatrixXcd g = verify::random_hermitian(3, rng);
  const double horizon = 1.7;
  const double alpha = 0.9;
  const TimeDependentHamiltonian h = phase_shift(g, horizon);
  const Eigen::MatrixXcd u = propagate(h, PulseSchedule{}, alpha, 2000);
  const Eigen::MatrixXcd expected =
      hermitian_expm(alpha * g, cd(0.0, -horizon));
  CHECK((u - expected).cwiseAbs().maxCoeff() <= 1e-8);
  CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <=
        1e-9);
}

TEST_CASE("propagate: a lone pulse on a silent system is the pulse itself") {
  const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(2, 2);
  const TimeDependentHamiltonian h(
      [zero](double, double) { return zero; }, 1.0, 2);
  const PulseSchedule pulses = pi_pulse_schedule({0.5}, 2, 1, 0.5);
  const Eigen::MatrixXcd u = propagate(h, pulses, 0.0, 64);
  CHECK((u - pulses.pulse_unitaries[0]).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("propagate: pulse times must lie inside the horizon") {
  const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(2, 2);
  const TimeDependentHamiltonian h(
      [zero](double, double) { return zero; }, 1.0, 2);
  CHECK_THROWS_AS(propagate(h, pi_pulse_schedule({1.5}, 2, 1, 0.5), 0.0, 16),
                  std::invalid_argument);
  CHECK_THROWS_AS(propagate(h, PulseSchedule{}, 0.0, 0), std::invalid_argument);
}

TEST_CASE("propagate is independent of alpha when H is") {
  Rng rng(5);
  const Eigen::MatrixXcd g = verify::random_hermitian(2, rng);
  const TimeDependentHamiltonian h(
      [g](double, double) { return g; }, 1.0, 2);
  const Eigen::MatrixXcd u1 = propagate(h, PulseSchedule{}, 0.1, 300);
  const Eigen::MatrixXcd u2 = propagate(h, PulseSchedule{}, 5.0, 300);
  CHECK((u1 - u2).norm() == 0.0);
}

TEST_CASE("fd_generator: phase shift gives T times the static generator") {
  Rng rng(7);
  const Eigen::MatrixXcd g = verify::random_hermitian(3, rng);
  const double horizon = 1.3;
  const TimeDependentHamiltonian h = phase_shift(g, horizon);
  const HermitianOperator gen = fd_generator(h, PulseSchedule{}, 0.8, 1e-5, 400);
  CHECK((gen.matrix() - horizon * g).cwiseAbs().maxCoeff() <= 1e-7);

  const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(2, 2);
  const TimeDependentHamiltonian silent(
      [zero](double, double) { return zero; }, 1.0, 2);
  const HermitianOperator null_gen =
      fd_generator(silent, PulseSchedule{}, 0.3, 1e-5, 50);
  CHECK(null_gen.matrix().cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("fd_generator agrees with the integral-accumulation oracle") {
  // Noncommuting drive: a (cos(nu t) Sz + sin(nu t) Sx).
  const Eigen::MatrixXcd sz = spin_z(0.5);
  const Eigen::MatrixXcd sx = spin_x(0.5);
  const double nu = 2.0;
  const TimeDependentHamiltonian h(
      [sz, sx, nu](double t, double a) {
        return (a * (std::cos(nu * t) * sz + std::sin(nu * t) * sx)).eval();
      },
      2.0, 2,
      [sz, sx, nu](double t, double) {
        return (std::cos(nu * t) * sz + std::sin(nu * t) * sx).eval();
      });
  const HermitianOperator fd = fd_generator(h, PulseSchedule{}, 0.6, 1e-5, 4000);
  const Eigen::MatrixXcd oracle = integral_generator(h, 0.6, 4000);
  CHECK((fd.matrix() - oracle).cwiseAbs().maxCoeff() <= 1e-5);
}

TEST_CASE("fd_generator: pulsed cos drive accumulates the rectified area") {
  const double omega = 1.0;
  const double horizon = 2.0 * M_PI / omega;
  const TimeDependentHamiltonian h = cos_amplitude_drive(omega, horizon);
  const PulseSchedule pulses =
      pi_pulse_schedule({0.5 * M_PI / omega, 1.5 * M_PI / omega}, 2, 1, 0.5);
  const HermitianOperator gen = fd_generator(h, pulses, 1.0, 1e-5, 4000);
  const double g_area = 4.0 / omega;  // integral of |cos| over one period
  CHECK(gen.eigenvalues()(0) == doctest::Approx(0.5 * g_area).epsilon(1e-6));
  CHECK(gen.eigenvalues()(1) == doctest::Approx(-0.5 * g_area).epsilon(1e-6));
}

TEST_CASE("pi pulses swap the spin-z basis states up to phase") {
  for (double j : {0.5, 1.0, 1.5}) {
    const Eigen::MatrixXcd pulse = pi_pulse_x(j);
    const Eigen::Index d = pulse.rows();
    for (Eigen::Index col = 0; col < d; ++col)
      for (Eigen::Index row = 0; row < d; ++row) {
        const double mag = std::abs(pulse(row, col));
        if (row == d - 1 - col)
          CHECK(mag == doctest::Approx(1.0).epsilon(1e-10));
        else
          CHECK(mag <= 1e-10);
      }
  }
  CHECK(pi_pulse_schedule({}, 4, 2, 0.5).pulse_times.empty());
  CHECK_THROWS_AS(pi_pulse_schedule({0.1}, 3, 2, 0.5), std::invalid_argument);
}

TEST_CASE("trajectory: smooth rotating family keeps continuity and constant gaps") {
  const Eigen::MatrixXcd sz = spin_z(0.5);
  const Eigen::MatrixXcd sx = spin_x(0.5);
  const double nu = 3.0;
  const TimeDependentHamiltonian h(
      [sz, sx, nu](double t, double a) {
        return (a * (std::cos(nu * t) * sz + std::sin(nu * t) * sx)).eval();
      },
      1.0, 2,
      [sz, sx, nu](double t, double) {
        return (std::cos(nu * t) * sz + std::sin(nu * t) * sx).eval();
      });
  const EigTrajectory traj = sample_eig_trajectory(h, 1.0, 257);
  for (std::size_t i = 0; i < traj.eigenvalues.size(); ++i) {
    CHECK(traj.eigenvalues[i](0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(traj.eigenvalues[i](1) == doctest::Approx(-0.5).epsilon(1e-12));
    if (i > 0)
      for (Eigen::Index k = 0; k < 2; ++k) {
        const double overlap = std::abs(
            (traj.eigenvectors[i - 1].col(k).adjoint() * traj.eigenvectors[i].col(k))(0));
        CHECK(overlap >= 0.9);
      }
  }
}

TEST_CASE("trajectory: eigenvalue crossing keeps branches smooth, ordering pointwise") {
  // dH = (1 - 2t) Sz: the two eigenvalues cross at t = 1/2.
  const Eigen::MatrixXcd sz = spin_z(0.5);
  const TimeDependentHamiltonian h(
      [sz](double t, double a) { return (a * (1.0 - 2.0 * t) * sz).eval(); }, 1.0, 2,
      [sz](double t, double) { return ((1.0 - 2.0 * t) * sz).eval(); });
  const EigTrajectory traj = sample_eig_trajectory(h, 1.0, 101);
  for (const auto& mu : traj.eigenvalues) CHECK(mu(0) >= mu(1));
  // The tracked branch stays on the same coordinate vector through the
  // crossing instead of jumping with the sorted order.
  const Eigen::VectorXcd first = traj.eigenvectors.front().col(0);
  const Eigen::VectorXcd last = traj.eigenvectors.back().col(0);
  CHECK(std::abs((first.adjoint() * last)(0)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("k_alpha_bound reduces to the static maximum for phase shifts") {
  Rng rng(11);
  const Eigen::MatrixXcd g = verify::random_hermitian(4, rng);
  const double horizon = 2.5;
  const TimeDependentHamiltonian h = phase_shift(g, horizon);
  const Spectrum p = verify::random_state_spectrum(4, rng);
  const EigTrajectory traj = sample_eig_trajectory(h, 0.4, 65);
  const HermitianOperator g_op(g);
  const double expected = max_qfi(p, Spectrum::ordered(horizon * g_op.eigenvalues()));
  CHECK(k_alpha_bound(p, traj) == doctest::Approx(expected).epsilon(1e-10));

  EigTrajectory empty;
  CHECK_THROWS_AS(k_alpha_bound(p, empty), std::invalid_argument);
}

TEST_CASE("saturation: phase shift needs no control") {
  Rng rng(13);
  const Eigen::MatrixXcd g = verify::random_hermitian(3, rng);
  const Spectrum p = verify::random_state_spectrum(3, rng);
  const TimeDependentHamiltonian h = phase_shift(g, 1.2);
  const QFIReport report = saturation_check(p, h, PulseSchedule{}, 0.7, 2000);
  CHECK(report.ratio == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("saturation: pulsed cos drive reaches the bound, unpulsed does not") {
  const double omega = 1.0;
  const double horizon = 2.0 * M_PI / omega;
  const TimeDependentHamiltonian h = cos_amplitude_drive(omega, horizon);
  const Spectrum p = state({0.75, 0.25});
  const PulseSchedule pulses =
      pi_pulse_schedule({0.5 * M_PI / omega, 1.5 * M_PI / omega}, 2, 1, 0.5);

  const QFIReport with_pulses = saturation_check(p, h, pulses, 1.0, 4000);
  CHECK(with_pulses.ratio >= 1.0 - 1e-4);
  CHECK(with_pulses.ratio <= 1.0 + 1e-5);

  const QFIReport without = saturation_check(p, h, PulseSchedule{}, 1.0, 4000);
  CHECK(without.value < with_pulses.value);
  CHECK(without.ratio < 0.01);  // the accumulated area cancels over a period
}

TEST_CASE("random pulse protocols never beat the bound") {
  Rng rng(17);
  const double omega = 1.0;
  const double horizon = 2.0 * M_PI / omega;
  const TimeDependentHamiltonian h = cos_amplitude_drive(omega, horizon);
  for (int trial = 0; trial < 8; ++trial) {
    const Spectrum p = verify::random_state_spectrum(2, rng);
    std::vector<double> times{horizon * (0.1 + 0.4 * rng.uniform()),
                              horizon * (0.6 + 0.3 * rng.uniform())};
    std::vector<Eigen::MatrixXcd> unitaries{haar_random_unitary(2, rng),
                                            haar_random_unitary(2, rng)};
    const PulseSchedule random_pulses(times, unitaries);
    const EigTrajectory traj = sample_eig_trajectory(h, 1.0, 2049);
    const double bound = k_alpha_bound(p, traj);
    const HermitianOperator gen = fd_generator(h, random_pulses, 1.0, 1e-5, 2048);
    const DensityOperator rho(p, haar_random_unitary(2, rng));
    CHECK(qfi(rho, gen) <= bound + 1e-8 * std::max(1.0, bound));
  }
}

TEST_CASE("frequency estimation: bound scales as the fourth power of time") {
  const double omega = 1.0;
  const double amplitude = 1.0;
  const Eigen::MatrixXcd sz = spin_z(0.5);
  const Spectrum p = state({0.75, 0.25});
  std::vector<std::pair<double, double>> series;
  for (int m = 0; m <= 3; ++m) {
    const double horizon = 2.0 * M_PI / omega * std::pow(2.0, m);
    const TimeDependentHamiltonian h(
        [sz, amplitude](double t, double a) {
          return (amplitude * std::cos(a * t) * sz).eval();
        },
        horizon, 2,
        [sz, amplitude](double t, double a) {
          return (-amplitude * t * std::sin(a * t) * sz).eval();
        });
    const EigTrajectory traj = sample_eig_trajectory(h, omega, 4097);
    series.emplace_back(horizon, k_alpha_bound(p, traj));
  }
  const double slope = scaling_exponent(series);
  CHECK(slope >= 3.9);
  CHECK(slope <= 4.05);
}
