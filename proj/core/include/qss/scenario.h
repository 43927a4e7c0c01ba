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

#ifndef QSS_SCENARIO_H_
#define QSS_SCENARIO_H_

#include <string>
#include <string_view>
#include <vector>

#include "qss/adversary.h"
#include "qss/lookup.h"
#include "qss/netgraph.h"
#include "qss/rng.h"
#include "qss/round.h"

namespace qss::harness {

struct EdgeSpec {
  std::string u;
  std::string v;
  net::EdgeParams params;
};

// Parsed scenario file. Format: flat "key = value" lines grouped in
// sections, '#' starts a comment.
//
//   [round]        d, t, n, secret, j, kappa, tau0, tau_swap, hash_bits, mode,
//                  search, restart_budget, penalties, dealer, kem, seed
//   [network]      node = <id>            (repeatable)
//                  edge = u, v, alpha, epsilon[, name=value ...]  (repeatable)
//   [adversary]    kind, targets, disturbance, disable_edges, drop_attempts,
//                  f, forge, trojan
//   [lookup.<p>]   row = lower, upper, score  (repeatable)
//
// Without a [network] section every trial draws a random connected network
// of n players.
struct Scenario {
  protocol::RoundConfig round;
  AdversaryModel adversary;
  bool has_network = false;
  std::vector<std::string> nodes;
  std::vector<EdgeSpec> edges;
  net::LookupTableSet tables = net::LookupTableSet::with_defaults();

  // The configured network, or a random one drawn from rng.
  net::QuantumNetwork build_network(Rng& rng) const;
};

// Throws ConfigError naming "section.key" for unknown or malformed entries.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);

}  // namespace qss::harness

#endif  // QSS_SCENARIO_H_
