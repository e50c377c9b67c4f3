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

#include <Eigen/Dense>

namespace qfimax {

/// Entries whose magnitude is below this are treated as exact zeros in the
/// 0/0 branch of pair_coeff. Eigensolvers routinely return values of this
/// size for rank-deficient states.
inline constexpr double kSpectrumZeroTol = 1e-14;

/// Validation tolerance for state spectra (sum, ordering, nonnegativity).
inline constexpr double kSpectrumValidTol = 1e-12;

/// A weakly decreasing real vector: state probabilities or the ordered
/// eigenvalues of a Hermitian operator. Immutable after construction.
class Spectrum {
 public:
  /// Builds a state spectrum. The input is stably sorted in decreasing
  /// order, entries in (-1e-12, 0) are clamped to zero, the sum must equal
  /// one within 1e-12, and the result is renormalized.
  static Spectrum state(Eigen::VectorXd probabilities);

  /// Wraps an already weakly decreasing vector (e.g. operator eigenvalues);
  /// throws std::invalid_argument if the ordering is violated beyond 1e-12.
  static Spectrum ordered(Eigen::VectorXd values);

  const Eigen::VectorXd& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }
  double operator[](Eigen::Index i) const { return values_(i); }

 private:
  explicit Spectrum(Eigen::VectorXd values) : values_(std::move(values)) {}
  Eigen::VectorXd values_;
};

using CoeffMatrix = Eigen::MatrixXd;
using GapVector = Eigen::VectorXd;

/// Coefficient (p_i - p_j)^2 / (p_i + p_j), with value 0 when both entries
/// vanish. Symmetric in (i, j); indices are zero-based.
double pair_coeff(const Spectrum& p, Eigen::Index i, Eigen::Index j);

/// All pair coefficients as a symmetric matrix with zero diagonal.
CoeffMatrix coeff_matrix(const Spectrum& p);

/// Nearest-neighbor coefficients q_{k,k+1} >= 0 (k = 0..d-2) such that the
/// partial sums q_{i,j} = sum_{k=i}^{j-1} q_{k,k+1} dominate every pair
/// coefficient, q_{i,j} >= p_{i,j}, with equality on the centrally mirrored
/// pairs j = d-1-i. Built iteratively from the innermost pair outward, once
/// for even and once for odd d.
Eigen::VectorXd build_q_coefficients(const Spectrum& p);

/// Vector of mirrored eigenvalue gaps (x_i - x_{d-1-i}, i = 0..ceil(d/2)-1).
/// Always nonnegative and weakly decreasing.
GapVector gap_vector(const Spectrum& x);

/// True iff x is weakly majorized by y: every partial sum of the decreasing
/// rearrangement of x is bounded by the corresponding sum for y, up to tol.
bool weakly_majorized(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                      double tol = 0.0);

/// sum_i p_i * (i-th largest entry of x)^2 for nonnegative x. Increasing
/// and Schur convex for any nonnegative decreasing weight vector p.
double phi_p(const Spectrum& p, const Eigen::VectorXd& x);

}  // namespace qfimax
