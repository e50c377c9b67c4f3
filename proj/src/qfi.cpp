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

#include "qfimax/qfi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qfimax {

namespace {

constexpr double kUnitaryTol = 1e-10;

using cd = std::complex<double>;

void check_square_finite(const Eigen::MatrixXcd& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  if (!m.allFinite())
    throw std::invalid_argument(std::string(who) + ": non-finite entry");
}

double qfi_in_basis(const Eigen::MatrixXd& coeffs, const Eigen::MatrixXcd& basis,
                    const Eigen::MatrixXcd& h) {
  const Eigen::MatrixXcd m = basis.adjoint() * h * basis;
  const Eigen::Index d = m.rows();
  double total = 0.0;
  for (Eigen::Index k = 0; k < d; ++k)
    for (Eigen::Index l = 0; l < d; ++l) total += coeffs(k, l) * std::norm(m(k, l));
  return 2.0 * total;
}

Eigen::MatrixXcd random_hermitian_direction(Eigen::Index d, Rng& rng) {
  Eigen::MatrixXcd a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = cd(rng.gaussian(), rng.gaussian());
  Eigen::MatrixXcd x = 0.5 * (a + a.adjoint());
  const double n = x.norm();
  if (n > 0.0) x /= n;
  return x;
}

}  // namespace

HermitianOperator::HermitianOperator(Eigen::MatrixXcd matrix) {
  check_square_finite(matrix, "HermitianOperator");
  matrix_ = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("HermitianOperator: eigendecomposition failed");
  // Solver order is ascending; flip to decreasing.
  eigenvalues_ = solver.eigenvalues().reverse();
  eigenvectors_ = solver.eigenvectors().rowwise().reverse();
}

DensityOperator::DensityOperator(Spectrum spectrum, Eigen::MatrixXcd basis)
    : spectrum_(std::move(spectrum)), basis_(std::move(basis)) {
  check_square_finite(basis_, "DensityOperator");
  if (basis_.rows() != spectrum_.size())
    throw std::invalid_argument("DensityOperator: basis/spectrum size mismatch");
  const Eigen::Index d = basis_.rows();
  const Eigen::MatrixXcd gram = basis_.adjoint() * basis_;
  if ((gram - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > kUnitaryTol)
    throw std::invalid_argument("DensityOperator: basis is not unitary");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (spectrum_[i] < -kSpectrumValidTol)
      throw std::invalid_argument("DensityOperator: negative probability");
    sum += spectrum_[i];
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("DensityOperator: spectrum does not sum to one");
}

Eigen::MatrixXcd DensityOperator::matrix() const {
  return basis_ * spectrum_.values().asDiagonal() * basis_.adjoint();
}

QFIReport make_qfi_report(double value, double bound) {
  QFIReport report;
  report.value = value;
  report.bound = bound;
  report.ratio = bound > 0.0 ? value / bound : 1.0;
  return report;
}

double qfi(const DensityOperator& rho, const HermitianOperator& h) {
  if (rho.dim() != h.dim())
    throw std::invalid_argument("qfi: dimension mismatch");
  return qfi_in_basis(coeff_matrix(rho.spectrum()), rho.basis(), h.matrix());
}

double max_qfi(const Spectrum& p, const Spectrum& h_eigs) {
  const Eigen::Index d = p.size();
  if (d != h_eigs.size()) throw std::invalid_argument("max_qfi: length mismatch");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (p[i] < -kSpectrumValidTol)
      throw std::invalid_argument("max_qfi: p is not a state spectrum");
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("max_qfi: p is not a state spectrum");
  double total = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    const double gap = h_eigs[k] - h_eigs[d - 1 - k];
    total += pair_coeff(p, k, d - 1 - k) * gap * gap;
  }
  return 0.5 * total;
}

Eigen::MatrixXcd paired_superposition_basis(const Eigen::MatrixXcd& vectors,
                                            const std::vector<double>& phases) {
  check_square_finite(vectors, "paired_superposition_basis");
  const Eigen::Index d = vectors.rows();
  const std::size_t pairs = static_cast<std::size_t>(d / 2);
  if (!phases.empty() && phases.size() != pairs)
    throw std::invalid_argument(
        "paired_superposition_basis: phases must have floor(d/2) entries");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd basis(d, d);
  for (Eigen::Index k = 0; k < d / 2; ++k) {
    const Eigen::Index mirror = d - 1 - k;
    const cd phase =
        phases.empty() ? cd(1.0, 0.0)
                       : std::exp(cd(0.0, phases[static_cast<std::size_t>(k)]));
    basis.col(k) = inv_sqrt2 * (vectors.col(k) + phase * vectors.col(mirror));
    basis.col(mirror) = inv_sqrt2 * (vectors.col(k) - phase * vectors.col(mirror));
  }
  if (d % 2 == 1) basis.col(d / 2) = vectors.col(d / 2);
  return basis;
}

DensityOperator optimal_state(const Spectrum& p, const HermitianOperator& h,
                              const std::vector<double>& phases) {
  if (p.size() != h.dim())
    throw std::invalid_argument("optimal_state: dimension mismatch");
  return DensityOperator(p, paired_superposition_basis(h.eigenvectors(), phases));
}

double offdiag_block_sqnorm(const HermitianOperator& h,
                            const Eigen::MatrixXcd& basis, Eigen::Index k) {
  check_square_finite(basis, "offdiag_block_sqnorm");
  const Eigen::Index d = h.dim();
  if (basis.rows() != d)
    throw std::invalid_argument("offdiag_block_sqnorm: dimension mismatch");
  if (k < 1 || k > d - 1)
    throw std::out_of_range("offdiag_block_sqnorm: block index out of range");
  const Eigen::MatrixXcd m = basis.adjoint() * h.matrix() * basis;
  return m.topRightCorner(k, d - k).squaredNorm();
}

Eigen::MatrixXcd haar_random_unitary(Eigen::Index d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("haar_random_unitary: d must be >= 1");
  Eigen::MatrixXcd z(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) z(i, j) = cd(rng.gaussian(), rng.gaussian());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  // Multiplying column j by the phase of R_jj makes the distribution Haar.
  const Eigen::MatrixXcd& qrm = qr.matrixQR();
  for (Eigen::Index j = 0; j < d; ++j) {
    const cd r = qrm(j, j);
    const double mag = std::abs(r);
    q.col(j) *= mag > 0.0 ? r / mag : cd(1.0, 0.0);
  }
  return q;
}

Eigen::MatrixXcd haar_random_unitary(Eigen::Index d, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(d, rng);
}

Eigen::MatrixXcd hermitian_expm(const Eigen::MatrixXcd& h, cd factor) {
  check_square_finite(h, "hermitian_expm");
  const Eigen::MatrixXcd sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_expm: eigendecomposition failed");
  const Eigen::Index d = sym.rows();
  Eigen::VectorXcd phases(d);
  for (Eigen::Index i = 0; i < d; ++i)
    phases(i) = std::exp(factor * solver.eigenvalues()(i));
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

QFIReport brute_force_max(const Spectrum& p, const HermitianOperator& h,
                          long budget, std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("brute_force_max: budget must be >= 1");
  const Eigen::Index d = h.dim();
  if (p.size() != d) throw std::invalid_argument("brute_force_max: dimension mismatch");
  const double bound = max_qfi(p, h.eigenvalue_spectrum());
  const Eigen::MatrixXd coeffs = coeff_matrix(p);
  Rng rng(seed);

  long evals = 0;
  const auto evaluate = [&](const Eigen::MatrixXcd& basis) {
    ++evals;
    return qfi_in_basis(coeffs, basis, h.matrix());
  };
  // Stop once the spectral bound is matched to well below any tolerance a
  // caller could reasonably ask for.
  const double target = bound - 1e-7 * std::max(1.0, bound);

  Eigen::MatrixXcd best_u = Eigen::MatrixXcd::Identity(d, d);
  double best_v = evaluate(best_u);
  Eigen::MatrixXcd second_u = best_u;
  double second_v = best_v;

  const long sample_budget = std::max<long>(1, budget / 3);
  while (evals < sample_budget && best_v < target) {
    const Eigen::MatrixXcd u = haar_random_unitary(d, rng);
    const double v = evaluate(u);
    if (v > best_v) {
      second_u = best_u;
      second_v = best_v;
      best_u = u;
      best_v = v;
    } else if (v > second_v) {
      second_u = u;
      second_v = v;
    }
  }

  constexpr int kDirectionsPerStep = 20;
  constexpr double kInitialStep = 0.3;
  constexpr double kFinalStep = 1e-5;
  constexpr double kStepDecay = 0.6;
  for (const auto& start : {std::make_pair(best_u, best_v),
                            std::make_pair(second_u, second_v)}) {
    Eigen::MatrixXcd u = start.first;
    double v = start.second;
    double step = kInitialStep;
    while (step > kFinalStep && evals < budget && v < target) {
      Eigen::MatrixXcd best_cand;
      double best_cand_v = v;
      for (int dir = 0; dir < kDirectionsPerStep && evals < budget; ++dir) {
        const Eigen::MatrixXcd x = random_hermitian_direction(d, rng);
        const Eigen::MatrixXcd cand = hermitian_expm(x, cd(0.0, step)) * u;
        const double cv = evaluate(cand);
        if (cv > best_cand_v) {
          best_cand_v = cv;
          best_cand = cand;
        }
      }
      if (best_cand_v > v) {
        u = best_cand;
        v = best_cand_v;
      } else {
        step *= kStepDecay;
      }
    }
    if (v > best_v) best_v = v;
    if (evals >= budget || best_v >= target) break;
  }

  return make_qfi_report(best_v, bound);
}

}  // namespace qfimax
