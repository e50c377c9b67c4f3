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

#include "qfimax/spectrum_opt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qfimax/parallel.hpp"
#include "qfimax/rng.hpp"

namespace qfimax {

namespace {

double objective(const Eigen::VectorXd& sorted_p, const Eigen::VectorXd& h) {
  const Eigen::Index d = sorted_p.size();
  double total = 0.0;
  for (Eigen::Index k = 0; k < d / 2; ++k) {
    const Eigen::Index m = d - 1 - k;
    const double a = sorted_p(k);
    const double b = sorted_p(m);
    if (a < kSpectrumZeroTol && b < kSpectrumZeroTol) continue;
    const double gap = h(k) - h(m);
    total += (a - b) * (a - b) / (a + b) * gap * gap;
  }
  return total;
}

Eigen::VectorXd gradient(const Eigen::VectorXd& sorted_p, const Eigen::VectorXd& h) {
  const Eigen::Index d = sorted_p.size();
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(d);
  for (Eigen::Index k = 0; k < d / 2; ++k) {
    const Eigen::Index m = d - 1 - k;
    const double a = sorted_p(k);
    const double b = sorted_p(m);
    if (a + b < kSpectrumZeroTol) continue;
    const double gap = h(k) - h(m);
    const double c = gap * gap;
    const double denom = (a + b) * (a + b);
    grad(k) += c * (a - b) * (a + 3.0 * b) / denom;
    grad(m) -= c * (a - b) * (3.0 * a + b) / denom;
  }
  return grad;
}

/// Projection onto {sum p = 1, sum p^2 = gamma}, alternated with clipping
/// at p >= 0 and descending sort. The equality pair has the closed form
/// "shift to the centroid plane, then rescale radially".
Eigen::VectorXd project_feasible(Eigen::VectorXd p, double gamma) {
  const Eigen::Index d = p.size();
  const double radius = std::sqrt(std::max(0.0, gamma - 1.0 / static_cast<double>(d)));
  for (int pass = 0; pass < 200; ++pass) {
    p.array() += (1.0 - p.sum()) / static_cast<double>(d);
    Eigen::VectorXd w = p.array() - 1.0 / static_cast<double>(d);
    double norm = w.norm();
    if (norm < 1e-15) {
      // Degenerate direction: leave the centroid along a sorted ramp.
      for (Eigen::Index i = 0; i < d; ++i)
        w(i) = static_cast<double>(d - 1 - 2 * i);
      w.array() -= w.mean();
      norm = w.norm();
    }
    p = (w * (radius / norm)).array() + 1.0 / static_cast<double>(d);
    bool clipped = false;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (p(i) < 0.0) {
        p(i) = 0.0;
        clipped = true;
      }
    }
    std::sort(p.data(), p.data() + d, std::greater<>());
    if (!clipped && std::abs(p.sum() - 1.0) < 1e-13) break;
  }
  return p;
}

double kkt_residual_at(const Eigen::VectorXd& p, const Eigen::VectorXd& grad) {
  const Eigen::Index d = p.size();
  std::vector<Eigen::Index> inactive;
  for (Eigen::Index i = 0; i < d; ++i)
    if (p(i) > 1e-10) inactive.push_back(i);
  if (inactive.size() < 3) return 0.0;  // constraints pin the point
  Eigen::VectorXd g(inactive.size()), n1(inactive.size()), n2(inactive.size());
  for (std::size_t i = 0; i < inactive.size(); ++i) {
    g(static_cast<Eigen::Index>(i)) = grad(inactive[i]);
    n1(static_cast<Eigen::Index>(i)) = 1.0;
    n2(static_cast<Eigen::Index>(i)) = p(inactive[i]);
  }
  n1.normalize();
  n2 -= n1.dot(n2) * n1;
  if (n2.norm() > 1e-14) n2.normalize(); else n2.setZero();
  g -= n1.dot(g) * n1;
  g -= n2.dot(g) * n2;
  return g.norm();
}

struct Candidate {
  Eigen::VectorXd p;
  double value = -1.0;
};

Candidate ascend(Eigen::VectorXd p, const Eigen::VectorXd& h, double gamma) {
  p = project_feasible(std::move(p), gamma);
  double value = objective(p, h);
  double step = 0.1;
  for (int iter = 0; iter < 4000 && step > 1e-14; ++iter) {
    const Eigen::VectorXd trial = project_feasible(p + step * gradient(p, h), gamma);
    const double trial_value = objective(trial, h);
    if (trial_value > value) {
      p = trial;
      value = trial_value;
      step *= 1.3;
    } else {
      step *= 0.5;
    }
  }
  return {std::move(p), value};
}

bool lex_greater(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) > b(i) + 1e-15) return true;
    if (a(i) < b(i) - 1e-15) return false;
  }
  return false;
}

}  // namespace

PurityProblem::PurityProblem(Eigen::VectorXd h_eigs_in, double gamma_in)
    : h_eigs(std::move(h_eigs_in)), gamma(gamma_in) {
  const Eigen::Index d = h_eigs.size();
  if (d < 2) throw std::invalid_argument("PurityProblem: need dimension >= 2");
  for (Eigen::Index i = 0; i + 1 < d; ++i)
    if (h_eigs(i + 1) > h_eigs(i) + 1e-12)
      throw std::invalid_argument("PurityProblem: generator eigenvalues must be decreasing");
  const double lo = 1.0 / static_cast<double>(d);
  if (!(gamma >= lo - 1e-12) || !(gamma <= 1.0 + 1e-12))
    throw std::invalid_argument("PurityProblem: gamma outside [1/d, 1]");
  gamma = std::clamp(gamma, lo, 1.0);
}

PuritySolution optimize_spectrum(const PurityProblem& prob, int restarts,
                                 std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("optimize_spectrum: restarts must be >= 1");
  const Eigen::Index d = prob.h_eigs.size();
  const double gamma = prob.gamma;

  // Boundary purities have closed-form solutions; return them exactly.
  if (gamma >= 1.0 - 1e-12) {
    Eigen::VectorXd pure = Eigen::VectorXd::Zero(d);
    pure(0) = 1.0;
    const double gap = prob.h_eigs(0) - prob.h_eigs(d - 1);
    return {Spectrum::state(pure), gap * gap, 0.0};
  }
  if (gamma <= 1.0 / static_cast<double>(d) + 1e-12) {
    const Eigen::VectorXd uniform =
        Eigen::VectorXd::Constant(d, 1.0 / static_cast<double>(d));
    return {Spectrum::state(uniform), 0.0, 0.0};
  }

  Candidate best;
  Rng rng(seed);
  for (int r = 0; r < restarts; ++r) {
    Eigen::VectorXd init(d);
    if (r == 0) {
      // Deterministic warm start leaning toward the pure vertex.
      for (Eigen::Index i = 0; i < d; ++i)
        init(i) = std::exp(-2.0 * static_cast<double>(i));
    } else {
      for (Eigen::Index i = 0; i < d; ++i) init(i) = std::abs(rng.gaussian());
    }
    init /= init.sum();
    Candidate cand = ascend(std::move(init), prob.h_eigs, gamma);
    if (cand.value > best.value + 1e-9 ||
        (cand.value > best.value - 1e-9 && lex_greater(cand.p, best.p))) {
      best = std::move(cand);
    }
  }

  PuritySolution solution{Spectrum::state(best.p), best.value,
                          kkt_residual_at(best.p, gradient(best.p, prob.h_eigs))};
  return solution;
}

std::vector<PurityScanRow> purity_scan(const Eigen::VectorXd& h_eigs,
                                       const std::vector<double>& gammas,
                                       int restarts, std::uint64_t seed) {
  std::vector<PurityScanRow> rows(gammas.size());
  parallel_for(gammas.size(), [&](std::size_t i) {
    const PurityProblem prob(h_eigs, gammas[i]);
    const PuritySolution sol =
        optimize_spectrum(prob, restarts, Rng::mix(seed, i));
    rows[i] = {gammas[i], sol.p.values(), sol.value};
  });
  return rows;
}

}  // namespace qfimax
