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

#ifndef QSS_ROUND_H_
#define QSS_ROUND_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qss/adversary.h"
#include "qss/distribution.h"
#include "qss/grover.h"
#include "qss/kem.h"
#include "qss/netgraph.h"
#include "qss/particle_stream.h"
#include "qss/registration.h"
#include "qss/rng.h"

namespace qss::protocol {

struct RoundConfig {
  std::uint64_t d = 5;
  std::size_t t = 3;
  std::size_t n = 6;  // players in a generated network
  std::optional<std::uint64_t> secret;  // drawn per round when absent
  double kappa = 0.5;
  std::size_t j = 8;  // stream length: one entangled slot plus j - 1 decoys
  double tau0 = 0.02;
  double tau_swap = 0.03;
  DistributionMode mode = DistributionMode::broker;
  unsigned hash_bits = 0;  // commitment truncation, 0 = full digest
  std::uint64_t seed = 1;
  net::SearchMode search = net::SearchMode::simulated;
  std::size_t restart_budget = 3;
  bool penalties = false;
  std::string dealer = "D";
  std::string kem = std::string(auth::X25519Kem::kSchemeId);

  // Throws ConfigError naming the offending "round.<key>".
  void validate() const;
};

// A dealer-run network with every player already registered.
struct Deployment {
  net::QuantumNetwork network{0.5};
  std::shared_ptr<const auth::Kem> kem;
  std::shared_ptr<auth::CertificationAuthority> ca;
  std::map<std::string, auth::PlayerCredentials> credentials;
  std::map<std::string, auth::Transcript> registration_transcripts;

  // Registers every non-dealer node with a fresh CA. A KEM that reports
  // insecure_for_testing() is refused unless allow_insecure is set. When kem
  // is null the scheme named by cfg.kem is used.
  static Deployment provision(net::QuantumNetwork network, const RoundConfig& cfg,
                              Rng& rng, std::shared_ptr<const auth::Kem> kem = nullptr,
                              bool allow_insecure = false);
};

enum class Verdict { success, abort, cheat_detected, cheat_succeeded };
enum class AbortReason { none, topology, authentication, availability, integrity };

std::string_view to_string(Verdict v);
std::string_view to_string(AbortReason r);

struct PhaseRecord {
  std::string phase;
  std::string status;
  std::string detail;
};

// Message-level trace used for phase-ordering checks.
struct RoundEvent {
  std::string kind;  // e.g. "measurement_received", "aggregate_sent"
  std::string actor;
  std::string subject;
};

struct PlayerReport {
  std::string id;
  std::string pseudonym;
  double cost = 0.0;
  std::size_t hops = 0;
  std::size_t swaps = 0;
  std::uint64_t abscissa = 0;
  std::string auth_status;
  std::uint64_t shadow = 0;
  std::vector<double> decoy_error_rates;  // one per sharing attempt
  std::optional<std::uint64_t> measurement;  // as submitted
  bool forged = false;
  std::optional<std::uint64_t> reconstructed;
  std::optional<bool> hash_ok;
};

struct AttackerSummary {
  std::string kind = "none";
  std::vector<std::string> targets;
  std::size_t intercepted_streams = 0;
  std::size_t all_guessed_streams = 0;
  std::size_t escaped_streams = 0;  // intercepted and still accepted
  std::size_t decoys_seen = 0;
  std::size_t correct_guesses = 0;
  std::size_t dropped_streams = 0;
  bool entangled_touched = false;
  bool detected = false;
  std::string replay_status;
  bool trojan = false;
};

struct RoundReport {
  RoundConfig config;
  std::uint64_t secret = 0;
  std::string backend;  // "state_vector" or "sampled"
  std::vector<std::string> initial_selection;
  std::vector<std::string> replaced;
  std::vector<PlayerReport> players;
  std::vector<PhaseRecord> phases;
  std::size_t sharing_attempts = 0;
  std::size_t restarts = 0;
  std::size_t decoys_checked = 0;
  std::size_t decoy_mismatches = 0;
  std::uint64_t grover_iterations = 0;
  std::uint64_t extractions = 0;
  std::uint64_t exact_extractions = 0;
  AttackerSummary attacker;
  std::vector<std::string> cheaters;
  std::vector<Fine> fines;
  std::optional<std::uint64_t> reconstructed;
  Verdict verdict = Verdict::abort;
  AbortReason reason = AbortReason::none;
  std::string detail;
  std::vector<RoundEvent> events;
};

// One full round. Fully determined by (cfg, deployment, adversary, rng state).
// The deployment's registry is copied, so concurrent rounds on one
// deployment are safe.
RoundReport run_round(const RoundConfig& cfg, const Deployment& deployment,
                      const harness::AdversaryModel& adversary, Rng& rng);

}  // namespace qss::protocol

#endif  // QSS_ROUND_H_
