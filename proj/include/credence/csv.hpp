// Copyright 2026 The Credence Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Numeric CSV with a header row, 17-significant-digit values and LF line
// endings, so emitted files round-trip bit for bit and serve as goldens.

#ifndef CREDENCE_CSV_HPP_
#define CREDENCE_CSV_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace credence {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Shortest decimal form that parses back to the same double (up to 17
// significant digits).
std::string format_full(double v);

void write_csv(std::ostream& os, const Table& table);
void write_csv(const std::string& path, const Table& table);  // throws IoError

Table read_csv(std::istream& is);
Table read_csv(const std::string& path);  // throws IoError

}  // namespace credence

#endif  // CREDENCE_CSV_HPP_
