// Copyright 2026 The QSS Authors
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

#ifndef QSS_LOOKUP_H_
#define QSS_LOOKUP_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qss::net {

// Half-open range [lower, upper) mapped to an integer score.
struct LookupRow {
  double lower = 0.0;
  double upper = 0.0;
  int score = 0;
};

// Score table for one channel parameter. Rows are sorted, disjoint and
// contiguous, so they cover [rows.front().lower, rows.back().upper) exactly.
class LookupTable {
 public:
  LookupTable(std::string parameter, std::vector<LookupRow> rows);

  const std::string& parameter() const { return parameter_; }
  const std::vector<LookupRow>& rows() const { return rows_; }

  std::optional<int> match(double value) const;

 private:
  std::string parameter_;
  std::vector<LookupRow> rows_;
};

class LookupTableSet {
 public:
  // Only the decoding-error table, with the default ranges below.
  static LookupTableSet with_defaults();

  void put(LookupTable table);
  const LookupTable* find(const std::string& parameter) const;
  const std::map<std::string, LookupTable>& tables() const { return tables_; }

 private:
  std::map<std::string, LookupTable> tables_;
};

// Decoding-error probability epsilon -> score, anchored on
// 1e-2 -> 3, 1e-6 -> 4, 1e-10 -> 5 with boundaries at the geometric midpoints
// 1e-4 and 1e-8.
LookupTable default_epsilon_table();

}  // namespace qss::net

#endif  // QSS_LOOKUP_H_
