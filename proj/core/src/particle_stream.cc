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

#include "qss/particle_stream.h"

#include "qss/error.h"

namespace qss::protocol {

Bytes StreamManifest::encode() const {
  Bytes body;
  for (const qsim::DecoyParticle& p : prepared) {
    body.push_back(static_cast<std::uint8_t>(p.basis));
    body.push_back(p.value);
  }
  return auth::encode_fields({auth::encode_u64(entangled_position), body});
}

StreamManifest StreamManifest::decode(ByteView bytes) {
  const auto fields = auth::decode_fields(bytes);
  if (fields.size() != 2 || fields[1].size() % 2 != 0) {
    throw WireFormatError("malformed stream manifest");
  }
  StreamManifest m;
  m.entangled_position = auth::decode_u64(fields[0]);
  for (std::size_t i = 0; i < fields[1].size(); i += 2) {
    const std::uint8_t basis = fields[1][i];
    const std::uint8_t value = fields[1][i + 1];
    if (basis > 1 || value > 1) throw WireFormatError("bad decoy state in manifest");
    m.prepared.push_back({static_cast<qsim::Basis>(basis), value});
  }
  if (m.entangled_position >= m.prepared.size()) {
    throw WireFormatError("entangled position out of range");
  }
  return m;
}

ParticleStream build_particle_stream(std::size_t ghz_qudit, std::size_t j,
                                     auth::SecureChannel& dealer_channel, Rng& rng) {
  if (j < 1) throw PreconditionError("stream length must be at least 1");
  ParticleStream s;
  s.ghz_qudit = ghz_qudit;
  StreamManifest m;
  m.entangled_position = rng.uniform(j);
  s.slots.resize(j);
  m.prepared.resize(j);
  for (std::size_t k = 0; k < j; ++k) {
    if (k == m.entangled_position) {
      s.slots[k].kind = SlotKind::entangled;
      continue;
    }
    const qsim::DecoyParticle p = qsim::prepare_decoy(rng);
    s.slots[k] = {SlotKind::decoy, p};
    m.prepared[k] = p;
  }
  s.manifest = auth::seal_message(dealer_channel, auth::MessageType::stream_manifest,
                                  m.encode(), rng);
  return s;
}

double decoy_tolerance(double tau0, double tau_swap, std::size_t swaps) {
  return tau0 + tau_swap * static_cast<double>(swaps);
}

StreamCheck verify_stream(const ParticleStream& received,
                          const auth::SecureChannel& player_channel,
                          std::size_t swaps, double tau0, double tau_swap, Rng& rng) {
  StreamCheck c;
  c.threshold = decoy_tolerance(tau0, tau_swap, swaps);
  const auto plain = auth::open_message(player_channel, received.manifest);
  if (!plain) {
    c.status = StreamStatus::manifest_invalid;
    return c;
  }
  StreamManifest m;
  try {
    m = StreamManifest::decode(*plain);
  } catch (const WireFormatError&) {
    c.status = StreamStatus::manifest_invalid;
    return c;
  }
  if (m.prepared.size() != received.slots.size()) {
    c.status = StreamStatus::missing_particle;
    return c;
  }
  for (const StreamSlot& slot : received.slots) {
    if (slot.kind == SlotKind::missing) {
      c.status = StreamStatus::missing_particle;
      return c;
    }
  }
  if (received.slots[m.entangled_position].kind != SlotKind::entangled) {
    c.status = StreamStatus::rejected;
    return c;
  }
  for (std::size_t k = 0; k < received.slots.size(); ++k) {
    if (k == m.entangled_position) continue;
    const qsim::DecoyParticle& expected = m.prepared[k];
    ++c.decoys;
    if (qsim::measure_decoy(received.slots[k].state, expected.basis, rng) !=
        expected.value) {
      ++c.mismatches;
    }
  }
  c.error_rate = c.decoys == 0 ? 0.0
                               : static_cast<double>(c.mismatches) /
                                     static_cast<double>(c.decoys);
  c.status = c.error_rate <= c.threshold ? StreamStatus::accepted
                                         : StreamStatus::rejected;
  return c;
}

}  // namespace qss::protocol
