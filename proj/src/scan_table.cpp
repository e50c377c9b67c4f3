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

#include "qfimax/scan_table.hpp"

#include <cstdio>
#include <stdexcept>

namespace qfimax {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void ScanTable::write_csv(std::ostream& out) const {
  out << "# schema: " << schema << "\n";
  for (const auto& comment : comments) out << "# " << comment << "\n";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c > 0) out << ",";
    out << columns[c];
  }
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != columns.size())
      throw std::logic_error("ScanTable: row width does not match header");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ",";
      out << format_double(row[c]);
    }
    out << "\n";
  }
}

}  // namespace qfimax
