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

#include "qss/adversary.h"

#include <array>
#include <utility>

#include "qss/error.h"

namespace qss::harness {
namespace {

constexpr std::array<std::pair<AdversaryKind, std::string_view>, 7> kNames{{
    {AdversaryKind::none, "none"},
    {AdversaryKind::intercept_resend, "intercept_resend"},
    {AdversaryKind::entangle_forward, "entangle_forward"},
    {AdversaryKind::dos, "dos"},
    {AdversaryKind::replay, "replay"},
    {AdversaryKind::collusion, "collusion"},
    {AdversaryKind::trojan, "trojan"},
}};

}  // namespace

std::string_view to_string(AdversaryKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

AdversaryKind parse_adversary_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw ConfigError("adversary.kind", "unknown adversary '" + std::string(name) + "'");
}

std::uint64_t forge_uniform(std::uint64_t honest, std::uint64_t d, Rng& rng) {
  if (d < 2) throw PreconditionError("forge_uniform: need d >= 2");
  const std::uint64_t r = rng.uniform(d - 1);
  return r >= honest ? r + 1 : r;
}

void AdversaryModel::validate(std::size_t t) const {
  if (disturbance < 0.0 || disturbance > 1.0) {
    throw ConfigError("adversary.disturbance", "must lie in [0, 1]");
  }
  if (kind == AdversaryKind::collusion && (colluders < 1 || colluders >= t)) {
    throw ConfigError("adversary.f", "collusion needs 1 <= f < t (f=" +
                                         std::to_string(colluders) +
                                         ", t=" + std::to_string(t) + ")");
  }
  if (kind == AdversaryKind::collusion && !forger) {
    throw ConfigError("adversary.forge", "no forging strategy");
  }
}

AttackerLog apply_adversary(protocol::ParticleStream& stream,
                            const AdversaryModel& model, Rng& rng) {
  AttackerLog log;
  switch (model.kind) {
    case AdversaryKind::intercept_resend:
      for (protocol::StreamSlot& slot : stream.slots) {
        const qsim::DecoyParticle guess = qsim::prepare_decoy(rng);
        if (slot.kind == protocol::SlotKind::entangled) {
          log.entangled_touched = true;
          log.entangled_basis = guess.basis;
          continue;
        }
        if (slot.kind != protocol::SlotKind::decoy) continue;
        ++log.decoys_seen;
        if (guess == slot.state) ++log.correct_guesses;
        const std::uint8_t outcome = qsim::measure_decoy(slot.state, guess.basis, rng);
        slot.state = {guess.basis, outcome};
      }
      break;
    case AdversaryKind::entangle_forward:
      for (protocol::StreamSlot& slot : stream.slots) {
        if (slot.kind != protocol::SlotKind::decoy) continue;
        ++log.decoys_seen;
        if (model.disturbance > 0.0 && rng.unit() < model.disturbance) {
          slot.state = qsim::prepare_decoy(rng);
          ++log.disturbed;
        }
      }
      break;
    case AdversaryKind::dos:
      for (protocol::StreamSlot& slot : stream.slots) slot.kind = protocol::SlotKind::missing;
      log.dropped = true;
      break;
    case AdversaryKind::none:
    case AdversaryKind::replay:
    case AdversaryKind::collusion:
    case AdversaryKind::trojan:
      break;
  }
  return log;
}

}  // namespace qss::harness
