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

/// 2j+1 after checking that 2j is a positive integer.
Eigen::Index spin_dimension(double j);

/// S_z in the |j,m> basis ordered m = j, j-1, ..., -j (diagonal, decreasing).
Eigen::MatrixXcd spin_z(double j);

/// S_x via the standard ladder matrix elements.
Eigen::MatrixXcd spin_x(double j);

/// exp(-i pi S_x): maps |j,m> to |j,-m> up to a sign.
Eigen::MatrixXcd pi_pulse_x(double j);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
Eigen::MatrixXcd kron_pow(const Eigen::MatrixXcd& a, int n);

/// Total S_z of n spin-j particles on the (2j+1)^n tensor space.
Eigen::MatrixXcd total_sz(int n, double j);

}  // namespace qfimax
