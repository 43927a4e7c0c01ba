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

#ifndef QSS_REPORT_H_
#define QSS_REPORT_H_

#include <string>
#include <string_view>

#include "qss/round.h"

namespace qss::protocol {

inline constexpr std::string_view kReportSchema = "qss-report-1";

// JSON document for one round. Field order is fixed:
//   schema, kind, config, secret, backend, selection, players, phases,
//   sharing, search, attacker, cheaters, fines, reconstructed, verdict,
//   abort_reason, detail, events
// Output is a pure function of the report, so equal reports serialize to
// identical bytes.
std::string report_json(const RoundReport& report, int indent = 2);

}  // namespace qss::protocol

#endif  // QSS_REPORT_H_
