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

#include "qfimax/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qfimax {

Spectrum Spectrum::state(Eigen::VectorXd probabilities) {
  const Eigen::Index d = probabilities.size();
  if (d < 1) throw std::invalid_argument("Spectrum: empty vector");
  std::stable_sort(probabilities.data(), probabilities.data() + d,
                   [](double a, double b) { return a > b; });
  for (Eigen::Index i = 0; i < d; ++i) {
    if (!std::isfinite(probabilities(i)))
      throw std::invalid_argument("Spectrum: non-finite entry");
    if (probabilities(i) < -kSpectrumValidTol)
      throw std::invalid_argument("Spectrum: negative probability");
    if (probabilities(i) < 0.0) probabilities(i) = 0.0;
  }
  const double sum = probabilities.sum();
  if (std::abs(sum - 1.0) > kSpectrumValidTol)
    throw std::invalid_argument("Spectrum: probabilities must sum to one");
  probabilities /= sum;
  return Spectrum(std::move(probabilities));
}

Spectrum Spectrum::ordered(Eigen::VectorXd values) {
  const Eigen::Index d = values.size();
  if (d < 1) throw std::invalid_argument("Spectrum: empty vector");
  for (Eigen::Index i = 0; i < d; ++i) {
    if (!std::isfinite(values(i)))
      throw std::invalid_argument("Spectrum: non-finite entry");
    if (i + 1 < d && values(i + 1) > values(i) + kSpectrumValidTol)
      throw std::invalid_argument("Spectrum: values not weakly decreasing");
  }
  return Spectrum(std::move(values));
}

double pair_coeff(const Spectrum& p, Eigen::Index i, Eigen::Index j) {
  const Eigen::Index d = p.size();
  if (i < 0 || j < 0 || i >= d || j >= d)
    throw std::out_of_range("pair_coeff: index out of range");
  const double pi = p[i];
  const double pj = p[j];
  if (std::abs(pi) < kSpectrumZeroTol && std::abs(pj) < kSpectrumZeroTol)
    return 0.0;
  const double diff = pi - pj;
  return diff * diff / (pi + pj);
}

CoeffMatrix coeff_matrix(const Spectrum& p) {
  const Eigen::Index d = p.size();
  CoeffMatrix c = CoeffMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      const double value = pair_coeff(p, i, j);
      c(i, j) = value;
      c(j, i) = value;
    }
  return c;
}

Eigen::VectorXd build_q_coefficients(const Spectrum& p) {
  const Eigen::Index d = p.size();
  if (d < 2) throw std::invalid_argument("build_q_coefficients: need d >= 2");
  for (Eigen::Index i = 0; i < d; ++i)
    if (p[i] < -kSpectrumValidTol)
      throw std::invalid_argument("build_q_coefficients: negative entry");

  const auto pc = [&p](Eigen::Index i, Eigen::Index j) {
    return pair_coeff(p, i, j);
  };
  Eigen::VectorXd q = Eigen::VectorXd::Zero(d - 1);  // q(k) = q_{k,k+1}

  // Innermost block, then two-step outward expansion. The new outer pair
  // (lo-1, hi+1) fixes its two nearest-neighbor coefficients so that the
  // telescoped sum hits the new central coefficient exactly.
  Eigen::Index lo, hi;
  if (d % 2 == 0) {
    lo = d / 2 - 1;
    hi = d / 2;
    q(lo) = pc(lo, hi);
  } else {
    const Eigen::Index center = (d - 1) / 2;
    lo = center - 1;
    hi = center + 1;
    q(lo) = pc(lo, hi) - pc(center, hi);
    q(center) = pc(center, hi);
  }
  while (lo > 0) {
    const Eigen::Index nlo = lo - 1;
    const Eigen::Index nhi = hi + 1;
    q(nlo) = pc(nlo, nhi) - pc(lo, nhi);
    q(hi) = pc(lo, nhi) - pc(lo, hi);
    lo = nlo;
    hi = nhi;
  }

  // Ties between adjacent eigenvalues can leave roundoff-size negatives.
  for (Eigen::Index k = 0; k + 1 < d; ++k) {
    if (q(k) < -kSpectrumValidTol)
      throw std::invalid_argument(
          "build_q_coefficients: input is not a valid decreasing spectrum");
    if (q(k) < 0.0) q(k) = 0.0;
  }
  return q;
}

GapVector gap_vector(const Spectrum& x) {
  const Eigen::Index d = x.size();
  const Eigen::Index half = (d + 1) / 2;
  GapVector gaps(half);
  for (Eigen::Index i = 0; i < half; ++i) gaps(i) = x[i] - x[d - 1 - i];
  return gaps;
}

bool weakly_majorized(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                      double tol) {
  if (x.size() != y.size())
    throw std::invalid_argument("weakly_majorized: length mismatch");
  std::vector<double> xs(x.data(), x.data() + x.size());
  std::vector<double> ys(y.data(), y.data() + y.size());
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    if (sx > sy + tol) return false;
  }
  return true;
}

double phi_p(const Spectrum& p, const Eigen::VectorXd& x) {
  if (p.size() != x.size())
    throw std::invalid_argument("phi_p: length mismatch");
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] < 0.0) throw std::invalid_argument("phi_p: negative weight");
  std::vector<double> xs(x.data(), x.data() + x.size());
  for (double v : xs)
    if (v < 0.0) throw std::invalid_argument("phi_p: negative entry in x");
  std::sort(xs.begin(), xs.end(), std::greater<>());
  double total = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    total += p[i] * xs[static_cast<std::size_t>(i)] * xs[static_cast<std::size_t>(i)];
  return total;
}

}  // namespace qfimax
