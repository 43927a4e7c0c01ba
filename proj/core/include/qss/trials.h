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

#ifndef QSS_TRIALS_H_
#define QSS_TRIALS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "qss/round.h"
#include "qss/scenario.h"

namespace qss::harness {

// Integer tallies over many rounds. Rates are derived on demand, so merging
// is exact, associative and order-independent.
struct TrialMetrics {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t cheat_detected = 0;
  std::uint64_t cheat_succeeded = 0;
  std::map<std::string, std::uint64_t> aborts;  // by reason

  std::uint64_t attacked = 0;         // rounds with an active adversary
  std::uint64_t attack_detected = 0;
  std::uint64_t intercepted_streams = 0;
  std::uint64_t all_guessed_streams = 0;
  std::uint64_t escaped_streams = 0;
  std::uint64_t decoys_checked = 0;
  std::uint64_t decoy_mismatches = 0;
  std::uint64_t restarts = 0;
  std::uint64_t replaced_players = 0;
  std::uint64_t replays = 0;
  std::uint64_t replays_rejected = 0;
  std::uint64_t extractions = 0;
  std::uint64_t exact_extractions = 0;
  std::uint64_t grover_iterations = 0;

  void add(const protocol::RoundReport& report);
  void merge(const TrialMetrics& other);

  std::uint64_t total_aborts() const;
  // success + aborts + cheat outcomes == trials.
  bool conserved() const;

  double success_rate() const;
  double detection_rate() const;
  double all_guess_rate() const;
  double escape_rate() const;
  double cheat_success_rate() const;
  double decoy_error_rate() const;
  double exact_min_rate() const;
  double replay_rejection_rate() const;

  friend bool operator==(const TrialMetrics&, const TrialMetrics&) = default;
};

struct TrialOptions {
  std::uint64_t master_seed = 1;
  std::size_t trials = 100;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Trial i uses seed derive_seed(master_seed, i) for its network, deployment
// and round, so results do not depend on the thread count.
TrialMetrics run_trials(const Scenario& scenario, const TrialOptions& options);

// One seeded round of the scenario, as `qss run` performs it.
protocol::RoundReport run_scenario_round(const Scenario& scenario, std::uint64_t seed);

std::string metrics_json(const TrialMetrics& m, const Scenario& scenario,
                         const TrialOptions& options, int indent = 2);
std::string metrics_csv(const TrialMetrics& m);

}  // namespace qss::harness

#endif  // QSS_TRIALS_H_
