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

#ifndef QSS_ADVERSARY_H_
#define QSS_ADVERSARY_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qss/particle_stream.h"
#include "qss/qsim.h"
#include "qss/rng.h"

namespace qss::harness {

enum class AdversaryKind {
  none,
  intercept_resend,
  entangle_forward,
  dos,
  replay,
  collusion,
  trojan,
};

std::string_view to_string(AdversaryKind kind);
// Throws ConfigError("adversary.kind") on an unknown name.
AdversaryKind parse_adversary_kind(std::string_view name);

// Replacement value for a forged measurement given the honest one.
using Forger = std::function<std::uint64_t(std::uint64_t honest, std::uint64_t d, Rng&)>;

// Uniform over Z_d without the honest value.
std::uint64_t forge_uniform(std::uint64_t honest, std::uint64_t d, Rng& rng);

struct AdversaryModel {
  AdversaryKind kind = AdversaryKind::none;

  // Node ids, "selected:<k>" (1-based rank in the initial selection) or
  // "all". Empty means the kind's default.
  std::vector<std::string> targets;

  // entangle_forward: chance that a forwarded decoy is disturbed.
  double disturbance = 0.0;

  // dos: disable the targets' edges after the first selection.
  bool disable_edges = true;
  // dos: number of sharing attempts in which the targets' streams are dropped.
  std::size_t drop_attempts = 0;

  // collusion: number of forging players, 1 <= f < t.
  std::size_t colluders = 1;
  Forger forger = forge_uniform;

  // Annotates reports only; no physical model.
  bool trojan = false;

  // Throws ConfigError for parameters that cannot apply at threshold t.
  void validate(std::size_t t) const;
};

struct AttackerLog {
  std::size_t decoys_seen = 0;
  std::size_t correct_guesses = 0;  // full preparation (basis and value) guessed
  std::size_t disturbed = 0;
  bool entangled_touched = false;
  qsim::Basis entangled_basis = qsim::Basis::computational;
  bool dropped = false;

  // Every decoy's preparation guessed exactly. True for an empty stream.
  bool all_guessed() const { return correct_guesses == decoys_seen; }
};

// Tampers with `stream` in place.
//   intercept_resend: for every slot, guess one of the four preparations,
//     measure in the guessed basis and resend the post-measurement state.
//   entangle_forward: forward every decoy, disturbing each with the
//     configured probability.
//   dos: drop every slot.
// Other kinds leave the stream untouched.
AttackerLog apply_adversary(protocol::ParticleStream& stream,
                            const AdversaryModel& model, Rng& rng);

}  // namespace qss::harness

#endif  // QSS_ADVERSARY_H_
