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

#include <ostream>
#include <string>
#include <vector>

namespace qfimax {

/// Tabular scan result for CSV emission: comma separated, LF line ends,
/// a schema comment, an optional free-form comment block, a header row,
/// and numeric cells printed with 17 significant digits.
struct ScanTable {
  std::string schema;
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void write_csv(std::ostream& out) const;
};

/// Doubles as decimal text with 17 significant digits (round-trip exact).
std::string format_double(double value);

}  // namespace qfimax
