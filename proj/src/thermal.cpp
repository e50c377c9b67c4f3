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

#include "qfimax/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qfimax/spin.hpp"

namespace qfimax {

namespace {

constexpr double kLn2 = 0.6931471805599453;

void check_spin(double j) { spin_dimension(j); }

void check_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("thermal: beta must be finite and >= 0");
}

/// Thermal weights exp(beta(m - j)) / sum, m = j, j-1, ..., -j.
Eigen::VectorXd thermal_weights(double j, double beta) {
  const Eigen::Index d = spin_dimension(j);
  Eigen::VectorXd w(d);
  for (Eigen::Index k = 0; k < d; ++k)
    w(k) = std::exp(-beta * static_cast<double>(k));
  return w / w.sum();
}

double log_bigint(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  const unsigned bits = boost::multiprecision::msb(v);
  if (bits < 1020) return std::log(v.convert_to<double>());
  const unsigned shift = bits - 52;
  const double top = BigInt(v >> shift).convert_to<double>();
  return std::log(top) + static_cast<double>(shift) * kLn2;
}

/// log(sinh^2(x)/cosh(x)) for x > 0, stable for both tiny and huge x.
double log_sinh2_over_cosh(double x) {
  if (x > 0.5) {
    const double log_sinh = x + std::log1p(-std::exp(-2.0 * x)) - kLn2;
    const double log_cosh = x + std::log1p(std::exp(-2.0 * x)) - kLn2;
    return 2.0 * log_sinh - log_cosh;
  }
  const double s = std::sinh(x);
  return std::log(s * s / std::cosh(x));
}

/// Exact binomial coefficient; zero when a < 0, b < 0 or a < b.
BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  for (long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double b, double fa, double fm, double fb,
                        double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = g(lm);
  const double frm = g(rm);
  if (!std::isfinite(flm) || !std::isfinite(frm))
    throw std::invalid_argument("modulation_g: non-finite sample of f");
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double refined = left + right;
  if (depth <= 0 || std::abs(refined - whole) <= 15.0 * eps)
    return refined + (refined - whole) / 15.0;
  return adaptive_simpson(g, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         adaptive_simpson(g, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

double integrate_panel(const std::function<double(double)>& g, double a,
                       double b, double eps) {
  const double fa = g(a);
  const double m = 0.5 * (a + b);
  const double fm = g(m);
  const double fb = g(b);
  if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb))
    throw std::invalid_argument("modulation_g: non-finite sample of f");
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(g, a, b, fa, fm, fb, whole, eps, 48);
}

}  // namespace

SpinEnsemble::SpinEnsemble(int n_in, double j_in, double beta_in)
    : n(n_in), j(j_in), beta(beta_in) {
  if (n < 1) throw std::invalid_argument("SpinEnsemble: n must be >= 1");
  check_spin(j);
  check_beta(beta);
}

DegeneracyTable::DegeneracyTable(int n, double j, std::vector<BigInt> counts)
    : max_k_(n * j), counts_(std::move(counts)) {
  const auto expected = static_cast<std::size_t>(std::llround(2.0 * n * j)) + 1;
  if (counts_.size() != expected)
    throw std::invalid_argument("DegeneracyTable: wrong number of entries");
}

BigInt DegeneracyTable::total() const {
  BigInt sum = 0;
  for (const auto& c : counts_) sum += c;
  return sum;
}

double beta_from_polarization(double P) {
  if (!(P >= 0.0)) throw std::domain_error("beta_from_polarization: P must be >= 0");
  if (!(P < 1.0))
    throw std::domain_error("beta_from_polarization: P must be < 1 (beta diverges)");
  return std::log((1.0 + P) / (1.0 - P));
}

double log_partition_function(double j, double beta) {
  check_spin(j);
  check_beta(beta);
  const double d = 2.0 * j + 1.0;
  if (beta == 0.0) return std::log(d);
  // Z = e^{beta j} (1 - e^{-beta d}) / (1 - e^{-beta}).
  return beta * j + std::log(-std::expm1(-beta * d)) - std::log(-std::expm1(-beta));
}

double partition_function(double j, double beta) {
  return std::exp(log_partition_function(j, beta));
}

double sz_expectation(double j, double beta) {
  check_spin(j);
  check_beta(beta);
  const Eigen::VectorXd w = thermal_weights(j, beta);
  double mean = 0.0;
  for (Eigen::Index k = 0; k < w.size(); ++k)
    mean += (j - static_cast<double>(k)) * w(k);
  return mean;
}

double sz_second_moment(double j, double beta) {
  check_spin(j);
  check_beta(beta);
  const Eigen::VectorXd w = thermal_weights(j, beta);
  double second = 0.0;
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    const double m = j - static_cast<double>(k);
    second += m * m * w(k);
  }
  return second;
}

DensityOperator thermal_state(double j, double beta) {
  const Eigen::VectorXd w = thermal_weights(j, beta);
  const Eigen::Index d = w.size();
  return DensityOperator(Spectrum::state(w), Eigen::MatrixXcd::Identity(d, d));
}

DegeneracyTable dice_degeneracy(int n, double j) {
  if (n < 1) throw std::invalid_argument("dice_degeneracy: n must be >= 1");
  check_spin(j);
  const long sides = std::lround(2.0 * j) + 1;
  const long slots = std::lround(2.0 * n * j) + 1;
  std::vector<BigInt> counts(static_cast<std::size_t>(slots));
  for (long i = 0; i < slots; ++i) {
    // i is the shifted sum k + n*j, ranging over 0 .. n(2j).
    BigInt q = 0;
    for (long l = 0; l <= n; ++l) {
      const BigInt term = binomial(n, l) * binomial(i + n - 1 - l * sides, n - 1);
      q += (l % 2 == 0) ? term : -term;
    }
    counts[static_cast<std::size_t>(i)] = q;
  }
  return DegeneracyTable(n, j, std::move(counts));
}

double modulation_g(const std::function<double(double)>& f, double T) {
  if (!(T > 0.0)) throw std::invalid_argument("modulation_g: T must be positive");
  const auto abs_f = [&f](double t) { return std::abs(f(t)); };

  // Locate the sign changes of f so |f| is smooth on every panel.
  constexpr int kScan = 4096;
  std::vector<double> cuts;
  cuts.push_back(0.0);
  double prev_t = 0.0;
  double prev_v = f(0.0);
  if (!std::isfinite(prev_v))
    throw std::invalid_argument("modulation_g: non-finite sample of f");
  for (int i = 1; i <= kScan; ++i) {
    const double t = T * static_cast<double>(i) / kScan;
    const double v = f(t);
    if (!std::isfinite(v))
      throw std::invalid_argument("modulation_g: non-finite sample of f");
    if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
      double lo = prev_t, hi = t, flo = prev_v;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo < 0.0) == (fm < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      cuts.push_back(0.5 * (lo + hi));
    }
    prev_t = t;
    prev_v = v;
  }
  cuts.push_back(T);

  double rough = 0.0;
  for (int i = 0; i < kScan; ++i)
    rough += std::abs(f(T * (i + 0.5) / kScan)) * (T / kScan);
  const double eps_total = 1e-10 * (rough + std::numeric_limits<double>::min());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double len = cuts[i + 1] - cuts[i];
    if (len <= 0.0) continue;
    total += integrate_panel(abs_f, cuts[i], cuts[i + 1], eps_total * len / T);
  }
  return total;
}

double thermal_max_qfi(const SpinEnsemble& e, double g) {
  if (!(g >= 0.0)) throw std::invalid_argument("thermal_max_qfi: g must be >= 0");
  if (e.beta == 0.0 || g == 0.0) return 0.0;
  const DegeneracyTable table = dice_degeneracy(e.n, e.j);
  const double log_zn = e.n * log_partition_function(e.j, e.beta);

  std::vector<double> log_terms;
  log_terms.reserve(static_cast<std::size_t>(table.size()));
  for (Eigen::Index i = 0; i < table.size(); ++i) {
    const double k = table.k_value(i);
    if (k == 0.0) continue;
    const double x = e.beta * std::abs(k);
    log_terms.push_back(log_bigint(table.count(i)) + log_sinh2_over_cosh(x) +
                        2.0 * std::log(2.0 * std::abs(k)) - log_zn);
  }
  const double peak = *std::max_element(log_terms.begin(), log_terms.end());
  double sum = 0.0;
  for (double lt : log_terms) sum += std::exp(lt - peak);
  return g * g * std::exp(peak) * sum;
}

double lower_bound_lb(const SpinEnsemble& e) {
  const double mean = sz_expectation(e.j, e.beta);
  const double second = sz_second_moment(e.j, e.beta);
  const double n = static_cast<double>(e.n);
  const double var_term = e.j * (e.j + 1.0) / 3.0;
  const double z_ratio_pow =
      std::exp(n * (std::log(2.0 * e.j + 1.0) - log_partition_function(e.j, e.beta)));
  return 4.0 * (n * (n - 1.0) * mean * mean + n * second - n * var_term * z_ratio_pow);
}

double lower_bound_mb(const SpinEnsemble& e) {
  const double n = static_cast<double>(e.n);
  const double var_term = e.j * (e.j + 1.0) / 3.0;
  if (e.beta == 0.0) return -4.0 / 3.0 * n * e.j * (e.j + 1.0);
  const double mean = sz_expectation(e.j, e.beta);
  const double second = sz_second_moment(e.j, e.beta);
  return 4.0 * (n * (n - 1.0) * mean * mean + n * second - n * var_term);
}

double scaling_exponent(const std::vector<std::pair<double, double>>& series) {
  if (series.size() < 3)
    throw std::invalid_argument("scaling_exponent: need at least 3 points");
  double sx = 0.0, sy = 0.0;
  for (const auto& [size, value] : series) {
    if (!(size > 0.0) || !(value > 0.0))
      throw std::invalid_argument("scaling_exponent: sizes and values must be positive");
    sx += std::log(size);
    sy += std::log(value);
  }
  const double mx = sx / static_cast<double>(series.size());
  const double my = sy / static_cast<double>(series.size());
  double cov = 0.0, var = 0.0;
  for (const auto& [size, value] : series) {
    const double dx = std::log(size) - mx;
    cov += dx * (std::log(value) - my);
    var += dx * dx;
  }
  if (var == 0.0) throw std::invalid_argument("scaling_exponent: degenerate sizes");
  return cov / var;
}

}  // namespace qfimax
