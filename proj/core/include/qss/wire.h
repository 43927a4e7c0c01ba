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

#ifndef QSS_WIRE_H_
#define QSS_WIRE_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "qss/aead.h"
#include "qss/bytes.h"

namespace qss::auth {

// Classical message framing:
//
//   message := type (1 byte) || field*
//   field   := length (4 bytes, big-endian) || bytes
//
// Fields appear in the fixed order listed per type. "sealed(x)" is the
// AES-256-GCM ciphertext||tag of x under the session key, always preceded by
// its 12-byte AEAD nonce as a separate field; the associated data is the
// ASCII string "QSS-v1|msg|<type in decimal>".
enum class MessageType : std::uint8_t {
  // Registration handshake.
  ca_public_key = 1,    // [scheme_id, ca_public_key]
  encapsulation = 2,    // [ciphertext]
  nonce_challenge = 3,  // [aead_nonce, sealed(fields[challenge_nonce])]
  nonce_echo = 4,       // [aead_nonce, sealed(fields[challenge_nonce, name])]
  ok = 5,               // [aead_nonce, sealed("Ok")]
  personal_info = 6,    // [aead_nonce, sealed(info)]
  player_key = 7,       // [aead_nonce, sealed(fields[player_key, nonce])]

  // Per-round authentication.
  round_encapsulation = 0x11,  // [player_id, ciphertext]
  round_challenge = 0x12,      // [aead_nonce, sealed(fields[nonce])]
  round_response = 0x13,       // [aead_nonce, sealed(fields[nonce, proof])]

  // Protocol payloads.
  polynomial_slice = 0x20,  // [aead_nonce, sealed(fields[x, c_0, ..., c_{t-1}])]
  stream_manifest = 0x21,   // [aead_nonce, sealed(manifest)]
  measurement = 0x22,       // [aead_nonce, sealed(fields[player_id, M_i])]
  aggregate = 0x23,         // [aead_nonce, sealed(fields[M_1..M_t, digest])]
};

struct WireMessage {
  MessageType type{};
  std::vector<Bytes> fields;

  Bytes encode() const;
  // Throws WireFormatError on truncation, trailing bytes, or an unknown type.
  static WireMessage decode(ByteView wire);

  // Expects exactly `count` fields; throws WireFormatError otherwise.
  const WireMessage& expect(MessageType t, std::size_t count) const;
};

Bytes encode_fields(const std::vector<Bytes>& fields);
std::vector<Bytes> decode_fields(ByteView data);

Bytes associated_data(MessageType type);

// [aead_nonce, ciphertext] for a sealed payload of the given type.
WireMessage seal_message(SecureChannel& channel, MessageType type,
                         ByteView plaintext, Rng& rng);
// Opens fields[0..1] of a message built by seal_message. nullopt on failure.
std::optional<Bytes> open_message(const SecureChannel& channel,
                                  const WireMessage& message);

Bytes encode_u64(std::uint64_t v);
std::uint64_t decode_u64(ByteView b);

}  // namespace qss::auth

#endif  // QSS_WIRE_H_
