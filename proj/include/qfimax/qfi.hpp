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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qfimax/rng.hpp"
#include "qfimax/spectra.hpp"

namespace qfimax {

/// Dense complex Hermitian matrix with an eager eigendecomposition.
/// The input is symmetrized on construction; eigenvalues are stored in
/// decreasing order with matching orthonormal eigenvector columns.
class HermitianOperator {
 public:
  explicit HermitianOperator(Eigen::MatrixXcd matrix);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  /// Eigenvalues in decreasing order.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  /// Orthonormal eigenvectors; column k belongs to eigenvalues()[k].
  const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }
  Spectrum eigenvalue_spectrum() const {
    return Spectrum::ordered(eigenvalues_);
  }

 private:
  Eigen::MatrixXcd matrix_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

/// Mixed state stored spectrally: probabilities plus the unitary whose
/// columns are the corresponding eigenvectors. Never re-diagonalized.
class DensityOperator {
 public:
  DensityOperator(Spectrum spectrum, Eigen::MatrixXcd basis);

  Eigen::Index dim() const { return basis_.rows(); }
  const Spectrum& spectrum() const { return spectrum_; }
  const Eigen::MatrixXcd& basis() const { return basis_; }
  /// Dense matrix sum_k p_k |psi_k><psi_k| (for interop and tests).
  Eigen::MatrixXcd matrix() const;

 private:
  Spectrum spectrum_;
  Eigen::MatrixXcd basis_;
};

/// Value of a quantum Fisher information evaluation next to the spectral
/// upper bound it is compared against. ratio is value/bound, or 1 when the
/// bound vanishes.
struct QFIReport {
  double value = 0.0;
  double bound = 0.0;
  double ratio = 1.0;
};

QFIReport make_qfi_report(double value, double bound);

/// Quantum Fisher information of rho under the unitary family generated by
/// h: 2 sum_{k,l} p_{k,l} |<psi_k|h|psi_l>|^2.
double qfi(const DensityOperator& rho, const HermitianOperator& h);

/// Maximal QFI over all unitary preparations of a state with spectrum p
/// under a generator with eigenvalues h_eigs:
/// (1/2) sum_k p_{k,d-k+1} (h_k - h_{d-k+1})^2.
double max_qfi(const Spectrum& p, const Spectrum& h_eigs);

/// Basis of mirrored-pair superpositions (v_k +- e^{i chi_k} v_{d-1-k})/sqrt(2)
/// built from the columns of an orthonormal matrix; the middle column is
/// kept as-is for odd d. phases must be empty or of length floor(d/2).
Eigen::MatrixXcd paired_superposition_basis(const Eigen::MatrixXcd& vectors,
                                            const std::vector<double>& phases = {});

/// The state that attains max_qfi: spectrum p over the paired-superposition
/// basis of the generator's eigenvectors.
DensityOperator optimal_state(const Spectrum& p, const HermitianOperator& h,
                              const std::vector<double>& phases = {});

/// Squared Hilbert-Schmidt norm of the off-diagonal block (rows 0..k-1,
/// columns k..d-1) of h expressed in the given basis; 1 <= k <= d-1.
/// Bounded by (1/4) sum_{i<min(k,d-k)} (h_i - h_{d-1-i})^2 for any
/// orthonormal basis (Bloomfield-Watson inequality).
double offdiag_block_sqnorm(const HermitianOperator& h,
                            const Eigen::MatrixXcd& basis, Eigen::Index k);

/// Haar-distributed random unitary (QR of a complex Ginibre matrix with the
/// R-diagonal phase correction).
Eigen::MatrixXcd haar_random_unitary(Eigen::Index d, Rng& rng);
Eigen::MatrixXcd haar_random_unitary(Eigen::Index d, std::uint64_t seed);

/// exp(factor * h) for Hermitian h, via the eigendecomposition.
Eigen::MatrixXcd hermitian_expm(const Eigen::MatrixXcd& h,
                                std::complex<double> factor);

/// Derivative-free search for the largest QFI over unitary preparations:
/// Haar sampling followed by pattern search along random Hermitian
/// directions with a geometrically decaying step. Deterministic per seed.
/// The report carries the spectral bound; value never exceeds it.
QFIReport brute_force_max(const Spectrum& p, const HermitianOperator& h,
                          long budget, std::uint64_t seed);

}  // namespace qfimax
