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

#include "qfimax/spin.hpp"

#include <cmath>
#include <stdexcept>

#include "qfimax/qfi.hpp"

namespace qfimax {

Eigen::Index spin_dimension(double j) {
  const double two_j = 2.0 * j;
  if (!(j > 0.0) || std::abs(two_j - std::round(two_j)) > 1e-9)
    throw std::invalid_argument("spin_dimension: j must be a positive half-integer");
  return static_cast<Eigen::Index>(std::llround(two_j)) + 1;
}

Eigen::MatrixXcd spin_z(double j) {
  const Eigen::Index d = spin_dimension(j);
  Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) sz(k, k) = j - static_cast<double>(k);
  return sz;
}

Eigen::MatrixXcd spin_x(double j) {
  const Eigen::Index d = spin_dimension(j);
  Eigen::MatrixXcd sx = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index k = 0; k + 1 < d; ++k) {
    const double m = j - static_cast<double>(k + 1);  // lower state of the pair
    const double amp = 0.5 * std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    sx(k, k + 1) = amp;
    sx(k + 1, k) = amp;
  }
  return sx;
}

Eigen::MatrixXcd pi_pulse_x(double j) {
  return hermitian_expm(spin_x(j), std::complex<double>(0.0, -M_PI));
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

Eigen::MatrixXcd kron_pow(const Eigen::MatrixXcd& a, int n) {
  if (n < 1) throw std::invalid_argument("kron_pow: n must be >= 1");
  Eigen::MatrixXcd out = a;
  for (int i = 1; i < n; ++i) out = kron(out, a);
  return out;
}

Eigen::MatrixXcd total_sz(int n, double j) {
  if (n < 1) throw std::invalid_argument("total_sz: n must be >= 1");
  const Eigen::Index d = spin_dimension(j);
  const Eigen::MatrixXcd sz = spin_z(j);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  Eigen::Index dim_total = 1;
  for (int i = 0; i < n; ++i) dim_total *= d;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_total, dim_total);
  for (int site = 0; site < n; ++site) {
    Eigen::MatrixXcd term = site == 0 ? sz : id;
    for (int i = 1; i < n; ++i) term = kron(term, i == site ? sz : id);
    out += term;
  }
  return out;
}

}  // namespace qfimax
