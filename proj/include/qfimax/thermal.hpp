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

#include <boost/multiprecision/cpp_int.hpp>

#include "qfimax/qfi.hpp"

namespace qfimax {

using BigInt = boost::multiprecision::cpp_int;

/// N spin-j particles, each in the thermal state exp(beta S_z)/Z.
struct SpinEnsemble {
  SpinEnsemble(int n_in, double j_in, double beta_in);
  int n;
  double j;
  double beta;
};

/// Multiplicities q(k) of the total-S_z eigenvalues k of n spin-j particles,
/// indexed in unit steps k = -n*j, ..., n*j. Exact integers.
class DegeneracyTable {
 public:
  DegeneracyTable(int n, double j, std::vector<BigInt> counts);

  /// Number of entries, 2*n*j + 1.
  Eigen::Index size() const { return static_cast<Eigen::Index>(counts_.size()); }
  /// k value of slot i (half-integer when 2*n*j is odd).
  double k_value(Eigen::Index i) const { return -max_k_ + static_cast<double>(i); }
  const BigInt& count(Eigen::Index i) const { return counts_[static_cast<std::size_t>(i)]; }
  const std::vector<BigInt>& counts() const { return counts_; }
  BigInt total() const;

 private:
  double max_k_;
  std::vector<BigInt> counts_;
};

/// beta = ln((1+P)/(1-P)) for a polarization P in [0, 1).
double beta_from_polarization(double P);

/// Z = sum_{m=-j}^{j} exp(beta m).
double partition_function(double j, double beta);
double log_partition_function(double j, double beta);

/// <S_z> of a thermal spin, d(ln Z)/d(beta).
double sz_expectation(double j, double beta);
/// <S_z^2> of a thermal spin, (d^2 Z/d beta^2)/Z.
double sz_second_moment(double j, double beta);

/// Thermal spin state exp(beta S_z)/Z, diagonal in the S_z basis with the
/// spectrum sorted decreasing.
DensityOperator thermal_state(double j, double beta);

/// q(k) by the inclusion-exclusion binomial formula for the number of ways
/// to roll a sum k with n fair dice of 2j+1 sides valued -j..j; binomial
/// coefficients with a negative argument count as zero.
DegeneracyTable dice_degeneracy(int n, double j);

/// Integral of |f| over [0, T]: the domain is split at the sign changes of
/// f so that each panel is smooth, then integrated by adaptive Simpson.
double modulation_g(const std::function<double(double)>& f, double T);

/// Control-assisted maximal QFI of the thermal ensemble for amplitude
/// estimation with time-integrated modulation g:
/// g^2 sum_k q(k) sinh^2(beta k) (2k)^2 / (Z^N cosh(beta k)),
/// evaluated in the log domain to survive large N, j, beta.
double thermal_max_qfi(const SpinEnsemble& e, double g);

/// Lower bounds on thermal_max_qfi(e, 1):
/// lower_bound_lb drops the 1/cosh term; lower_bound_mb further relaxes the
/// beta=0 subtraction. thermal_max_qfi >= lower_bound_lb >= lower_bound_mb.
double lower_bound_lb(const SpinEnsemble& e);
double lower_bound_mb(const SpinEnsemble& e);

/// Least-squares slope of log(value) against log(size).
double scaling_exponent(const std::vector<std::pair<double, double>>& series);

}  // namespace qfimax
