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

#include "qfimax/verify.hpp"

#include <atomic>
#include <cmath>

#include "qfimax/parallel.hpp"
#include "qfimax/qfi.hpp"

namespace qfimax::verify {

namespace {

constexpr double kSlack = 1e-12;

// Distinct stream tags so the suites do not replay each other's draws.
enum : std::uint64_t {
  kTagLemma = 0x10000000,
  kTagProp = 0x20000000,
  kTagBloom = 0x30000000,
  kTagMajor = 0x40000000,
  kTagSchur = 0x50000000,
  kTagSaturation = 0x60000000,
};

}  // namespace

Spectrum random_state_spectrum(Eigen::Index d, Rng& rng) {
  Eigen::VectorXd p(d);
  for (Eigen::Index i = 0; i < d; ++i)
    p(i) = -std::log(1.0 - rng.uniform());
  p /= p.sum();
  return Spectrum::state(std::move(p));
}

Eigen::MatrixXcd random_hermitian(Eigen::Index d, Rng& rng) {
  Eigen::MatrixXcd a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      a(i, j) = std::complex<double>(rng.gaussian(), rng.gaussian());
  return 0.5 * (a + a.adjoint());
}

DegeneracyTable dice_degeneracy_convolution(int n, double j) {
  const auto sides = static_cast<std::size_t>(std::llround(2.0 * j)) + 1;
  std::vector<BigInt> counts(sides, BigInt(1));
  for (int roll = 1; roll < n; ++roll) {
    std::vector<BigInt> next(counts.size() + sides - 1, BigInt(0));
    for (std::size_t a = 0; a < counts.size(); ++a)
      for (std::size_t b = 0; b < sides; ++b) next[a + b] += counts[a];
    counts.swap(next);
  }
  return DegeneracyTable(n, j, std::move(counts));
}

SuiteResult run_pair_coeff_inequalities(std::uint64_t seed, long samples) {
  std::atomic<long> failures{0};
  long trials = 0;
  for (Eigen::Index d = 3; d <= 8; ++d) trials += samples;
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t idx) {
    const Eigen::Index d = 3 + static_cast<Eigen::Index>(idx / static_cast<std::size_t>(samples));
    Rng rng(Rng::mix(seed ^ kTagLemma, idx));
    const Spectrum p = random_state_spectrum(d, rng);
    const CoeffMatrix c = coeff_matrix(p);
    bool ok = true;
    for (Eigen::Index i = 0; i < d && ok; ++i)
      for (Eigen::Index jj = i + 1; jj < d && ok; ++jj)
        for (Eigen::Index l = jj + 1; l < d && ok; ++l)
          if (c(i, l) < c(i, jj) + c(jj, l) - kSlack) ok = false;
    for (Eigen::Index i = 0; i + 2 < d && ok; ++i)
      for (Eigen::Index k = i + 2; k < d && ok; ++k)
        for (Eigen::Index l = k + 1; l < d && ok; ++l)
          if (c(i, l) - c(i + 1, l) < c(i, k) - c(i + 1, k) - kSlack) ok = false;
    for (Eigen::Index i = 0; i < d && ok; ++i)
      for (Eigen::Index jj = i + 1; jj < d && ok; ++jj)
        for (Eigen::Index l = jj + 2; l < d && ok; ++l)
          if (c(i, l) - c(i, l - 1) < c(jj, l) - c(jj, l - 1) - kSlack) ok = false;
    if (!ok) ++failures;
  });
  return {"pair-coeff-inequalities", trials, failures.load()};
}

SuiteResult run_q_coefficient_conditions(std::uint64_t seed, long samples) {
  std::atomic<long> failures{0};
  long trials = 0;
  for (Eigen::Index d = 2; d <= 8; ++d) trials += samples;
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t idx) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(idx / static_cast<std::size_t>(samples));
    Rng rng(Rng::mix(seed ^ kTagProp, idx));
    const Spectrum p = random_state_spectrum(d, rng);
    const Eigen::VectorXd q = build_q_coefficients(p);
    bool ok = true;
    for (Eigen::Index k = 0; k + 1 < d && ok; ++k)
      if (q(k) < 0.0) ok = false;
    for (Eigen::Index i = 0; i < d && ok; ++i) {
      double telescoped = 0.0;
      for (Eigen::Index jj = i + 1; jj < d && ok; ++jj) {
        telescoped += q(jj - 1);
        const double pij = pair_coeff(p, i, jj);
        if (jj == d - 1 - i) {
          if (std::abs(telescoped - pij) > kSlack) ok = false;
        } else if (telescoped < pij - kSlack) {
          ok = false;
        }
      }
    }
    if (!ok) ++failures;
  });
  return {"q-coefficient-conditions", trials, failures.load()};
}

SuiteResult run_bloomfield_watson(std::uint64_t seed, long samples) {
  std::atomic<long> failures{0};
  parallel_for(static_cast<std::size_t>(samples), [&](std::size_t idx) {
    Rng rng(Rng::mix(seed ^ kTagBloom, idx));
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.next_u64() % 7);  // 2..8
    const HermitianOperator h(random_hermitian(d, rng));
    const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng.next_u64() % static_cast<std::uint64_t>(d - 1));
    const Eigen::MatrixXcd basis = haar_random_unitary(d, rng);

    const Eigen::Index mirrored = std::min(k, d - k);
    double block_bound = 0.0;
    for (Eigen::Index i = 0; i < mirrored; ++i) {
      const double gap = h.eigenvalues()(i) - h.eigenvalues()(d - 1 - i);
      block_bound += 0.25 * gap * gap;
    }
    bool ok = offdiag_block_sqnorm(h, basis, k) <=
              block_bound + kSlack * std::max(1.0, block_bound);
    const double at_paired =
        offdiag_block_sqnorm(h, paired_superposition_basis(h.eigenvectors()), k);
    if (std::abs(at_paired - block_bound) > 1e-10) ok = false;
    if (!ok) ++failures;
  });
  return {"bloomfield-watson", samples, failures.load()};
}

SuiteResult run_gap_majorization(std::uint64_t seed, long samples) {
  std::atomic<long> failures{0};
  parallel_for(static_cast<std::size_t>(samples), [&](std::size_t idx) {
    Rng rng(Rng::mix(seed ^ kTagMajor, idx));
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.next_u64() % 7);
    const Eigen::MatrixXcd a = random_hermitian(d, rng);
    const Eigen::MatrixXcd b = random_hermitian(d, rng);
    const auto gaps = [](const Eigen::MatrixXcd& m) {
      return gap_vector(HermitianOperator(m).eigenvalue_spectrum());
    };
    const Eigen::VectorXd sum_gaps = gaps(a) + gaps(b);
    const double tol = kSlack * (1.0 + a.norm() + b.norm());
    if (!weakly_majorized(gaps(a + b), sum_gaps, tol)) ++failures;
  });
  return {"gap-weak-majorization", samples, failures.load()};
}

SuiteResult run_schur_monotonicity(std::uint64_t seed, long samples) {
  std::atomic<long> failures{0};
  parallel_for(static_cast<std::size_t>(samples), [&](std::size_t idx) {
    Rng rng(Rng::mix(seed ^ kTagSchur, idx));
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.next_u64() % 7);
    const Spectrum p = random_state_spectrum(d, rng);

    Eigen::VectorXd y(d);
    for (Eigen::Index i = 0; i < d; ++i) y(i) = 2.0 * rng.uniform();
    // x = shrink * (convex mixture of permutations of y)  =>  x <_w y.
    Eigen::VectorXd x = Eigen::VectorXd::Zero(d);
    double weight_sum = 0.0;
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(d));
    for (int mix = 0; mix < 3; ++mix) {
      for (Eigen::Index i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i;
      for (Eigen::Index i = d - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[rng.next_u64() % static_cast<std::uint64_t>(i + 1)]);
      const double w = rng.uniform() + 1e-3;
      weight_sum += w;
      for (Eigen::Index i = 0; i < d; ++i) x(i) += w * y(perm[static_cast<std::size_t>(i)]);
    }
    x *= rng.uniform() / weight_sum;

    bool ok = weakly_majorized(x, y, kSlack);
    const double scale = 1.0 + phi_p(p, y);
    if (phi_p(p, x) > phi_p(p, y) + kSlack * scale) ok = false;
    // Elementwise monotonicity on a shrunken copy.
    Eigen::VectorXd z = y;
    for (Eigen::Index i = 0; i < d; ++i) z(i) *= rng.uniform();
    if (phi_p(p, z) > phi_p(p, y) + kSlack * scale) ok = false;
    if (!ok) ++failures;
  });
  return {"schur-monotonicity", samples, failures.load()};
}

SuiteResult run_degeneracy_oracle() {
  long trials = 0;
  long failures = 0;
  for (int n = 1; n <= 8; ++n) {
    for (double j : {0.5, 1.0, 1.5, 2.0}) {
      ++trials;
      const DegeneracyTable formula = dice_degeneracy(n, j);
      const DegeneracyTable convolved = dice_degeneracy_convolution(n, j);
      bool ok = formula.size() == convolved.size();
      for (Eigen::Index i = 0; ok && i < formula.size(); ++i) {
        if (formula.count(i) != convolved.count(i)) ok = false;
        if (formula.count(i) != formula.count(formula.size() - 1 - i)) ok = false;
      }
      BigInt expected_total = 1;
      for (int r = 0; r < n; ++r) expected_total *= std::llround(2.0 * j) + 1;
      if (formula.total() != expected_total) ok = false;
      if (!ok) ++failures;
    }
  }
  return {"degeneracy-oracle", trials, failures};
}

SuiteResult run_optimal_state_saturation(std::uint64_t seed, long samples_per_dim) {
  std::atomic<long> failures{0};
  const long trials = samples_per_dim * 5;  // d = 2..6
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t idx) {
    const Eigen::Index d =
        2 + static_cast<Eigen::Index>(idx / static_cast<std::size_t>(samples_per_dim));
    Rng rng(Rng::mix(seed ^ kTagSaturation, idx));
    const Spectrum p = random_state_spectrum(d, rng);
    const HermitianOperator h(random_hermitian(d, rng));
    const double bound = max_qfi(p, h.eigenvalue_spectrum());
    const double attained = qfi(optimal_state(p, h), h);
    if (std::abs(attained - bound) > 1e-10) ++failures;
  });
  return {"optimal-state-saturation", trials, failures.load()};
}

std::vector<SuiteResult> run_all(std::uint64_t seed, long samples) {
  std::vector<SuiteResult> results;
  results.push_back(run_pair_coeff_inequalities(seed, samples));
  results.push_back(run_q_coefficient_conditions(seed, samples));
  results.push_back(run_bloomfield_watson(seed, samples));
  results.push_back(run_gap_majorization(seed, samples));
  results.push_back(run_schur_monotonicity(seed, samples));
  results.push_back(run_degeneracy_oracle());
  results.push_back(run_optimal_state_saturation(seed, std::max<long>(1, samples / 100)));
  return results;
}

}  // namespace qfimax::verify
