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

#ifndef QSS_PARTICLE_STREAM_H_
#define QSS_PARTICLE_STREAM_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qss/aead.h"
#include "qss/bytes.h"
#include "qss/qsim.h"
#include "qss/rng.h"
#include "qss/wire.h"

namespace qss::protocol {

enum class SlotKind : std::uint8_t { decoy = 0, entangled = 1, missing = 2 };

// One particle in flight. `state` is the physical decoy state for decoy
// slots and is unused for the entangled slot.
struct StreamSlot {
  SlotKind kind = SlotKind::decoy;
  qsim::DecoyParticle state;
};

// Classical side information for one stream: the entangled position and the
// prepared state of every slot (the entry at the entangled position is a
// placeholder).
struct StreamManifest {
  std::size_t entangled_position = 0;
  std::vector<qsim::DecoyParticle> prepared;

  Bytes encode() const;
  // Throws WireFormatError on malformed input or an out-of-range position.
  static StreamManifest decode(ByteView bytes);

  friend bool operator==(const StreamManifest&, const StreamManifest&) = default;
};

struct ParticleStream {
  std::size_t ghz_qudit = 0;  // which register qudit rides in the entangled slot
  std::vector<StreamSlot> slots;
  auth::WireMessage manifest;  // stream_manifest, sealed

  std::size_t length() const { return slots.size(); }
  std::size_t decoys() const { return slots.empty() ? 0 : slots.size() - 1; }
};

// j - 1 decoys uniform over the four BB84 states and the entangled slot at a
// uniform position. The manifest is sealed on `dealer_channel`. j >= 1.
ParticleStream build_particle_stream(std::size_t ghz_qudit, std::size_t j,
                                     auth::SecureChannel& dealer_channel, Rng& rng);

double decoy_tolerance(double tau0, double tau_swap, std::size_t swaps);

enum class StreamStatus { accepted, rejected, missing_particle, manifest_invalid };

struct StreamCheck {
  StreamStatus status = StreamStatus::accepted;
  std::size_t decoys = 0;
  std::size_t mismatches = 0;
  double error_rate = 0.0;
  double threshold = 0.0;

  bool accepted() const { return status == StreamStatus::accepted; }
};

// Opens the manifest on `player_channel`, measures every decoy in its
// declared basis and accepts iff mismatches / (j - 1) <= tau0 + tau_swap *
// swaps. The entangled slot is never touched. A missing slot anywhere or an
// unauthenticated manifest is reported without measuring.
StreamCheck verify_stream(const ParticleStream& received,
                          const auth::SecureChannel& player_channel,
                          std::size_t swaps, double tau0, double tau_swap, Rng& rng);

}  // namespace qss::protocol

#endif  // QSS_PARTICLE_STREAM_H_
