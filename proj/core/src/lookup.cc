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

#include "qss/lookup.h"

#include <algorithm>
#include <cmath>

#include "qss/error.h"

namespace qss::net {

LookupTable::LookupTable(std::string parameter, std::vector<LookupRow> rows)
    : parameter_(std::move(parameter)), rows_(std::move(rows)) {
  const std::string field = "lookup." + parameter_;
  if (rows_.empty()) throw ConfigError(field, "table has no rows");
  std::sort(rows_.begin(), rows_.end(),
            [](const LookupRow& a, const LookupRow& b) { return a.lower < b.lower; });
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const LookupRow& r = rows_[i];
    if (!std::isfinite(r.lower) || !(r.lower < r.upper)) {
      throw ConfigError(field, "row " + std::to_string(i) + " has an empty range");
    }
    if (i > 0 && rows_[i - 1].upper != r.lower) {
      throw ConfigError(field, rows_[i - 1].upper > r.lower
                                   ? "ranges overlap"
                                   : "ranges leave a gap");
    }
  }
}

std::optional<int> LookupTable::match(double value) const {
  for (const LookupRow& r : rows_) {
    if (value >= r.lower && value < r.upper) return r.score;
  }
  return std::nullopt;
}

LookupTableSet LookupTableSet::with_defaults() {
  LookupTableSet set;
  set.put(default_epsilon_table());
  return set;
}

void LookupTableSet::put(LookupTable table) {
  std::string key = table.parameter();
  tables_.insert_or_assign(std::move(key), std::move(table));
}

const LookupTable* LookupTableSet::find(const std::string& parameter) const {
  auto it = tables_.find(parameter);
  return it == tables_.end() ? nullptr : &it->second;
}

LookupTable default_epsilon_table() {
  return LookupTable("epsilon", {
                                    {0.0, 1e-8, 5},
                                    {1e-8, 1e-4, 4},
                                    {1e-4, 1.0, 3},
                                });
}

}  // namespace qss::net
