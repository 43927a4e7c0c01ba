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

#include "qss/wire.h"

#include <algorithm>
#include <string>

#include "qss/error.h"

namespace qss::auth {
namespace {

bool known_type(std::uint8_t t) {
  return (t >= 1 && t <= 7) || (t >= 0x11 && t <= 0x13) || (t >= 0x20 && t <= 0x23);
}

}  // namespace

Bytes encode_fields(const std::vector<Bytes>& fields) {
  Bytes out;
  for (const Bytes& f : fields) {
    append_u32_be(out, static_cast<std::uint32_t>(f.size()));
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

std::vector<Bytes> decode_fields(ByteView data) {
  std::vector<Bytes> fields;
  std::size_t pos = 0;
  while (pos < data.size()) {
    const std::uint32_t len = read_u32_be(data, pos);
    pos += 4;
    if (len > data.size() - pos) throw WireFormatError("field overruns message");
    fields.emplace_back(data.begin() + static_cast<std::ptrdiff_t>(pos),
                        data.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return fields;
}

Bytes WireMessage::encode() const {
  Bytes out{static_cast<std::uint8_t>(type)};
  const Bytes body = encode_fields(fields);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

WireMessage WireMessage::decode(ByteView wire) {
  if (wire.empty()) throw WireFormatError("empty message");
  if (!known_type(wire[0])) {
    throw WireFormatError("unknown message type " + std::to_string(wire[0]));
  }
  WireMessage m;
  m.type = static_cast<MessageType>(wire[0]);
  m.fields = decode_fields(wire.subspan(1));
  return m;
}

const WireMessage& WireMessage::expect(MessageType t, std::size_t count) const {
  if (type != t) {
    throw WireFormatError("expected message type " +
                          std::to_string(static_cast<int>(t)) + ", got " +
                          std::to_string(static_cast<int>(type)));
  }
  if (fields.size() != count) {
    throw WireFormatError("message type " + std::to_string(static_cast<int>(t)) +
                          " expects " + std::to_string(count) + " fields");
  }
  return *this;
}

Bytes associated_data(MessageType type) {
  return to_bytes("QSS-v1|msg|" + std::to_string(static_cast<int>(type)));
}

WireMessage seal_message(SecureChannel& channel, MessageType type,
                         ByteView plaintext, Rng& rng) {
  const SealedMessage s = channel.seal(plaintext, associated_data(type), rng);
  return WireMessage{type, {Bytes(s.nonce.begin(), s.nonce.end()), s.ciphertext}};
}

std::optional<Bytes> open_message(const SecureChannel& channel,
                                  const WireMessage& message) {
  if (message.fields.size() < 2 || message.fields[0].size() != crypto::kGcmNonceBytes) {
    return std::nullopt;
  }
  SealedMessage s;
  std::copy(message.fields[0].begin(), message.fields[0].end(), s.nonce.begin());
  s.ciphertext = message.fields[1];
  return channel.open(s, associated_data(message.type));
}

Bytes encode_u64(std::uint64_t v) {
  Bytes out(8);
  for (int i = 7; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v & 0xff);
    v >>= 8;
  }
  return out;
}

std::uint64_t decode_u64(ByteView b) {
  if (b.size() != 8) throw WireFormatError("expected an 8-byte integer");
  std::uint64_t v = 0;
  for (std::uint8_t c : b) v = (v << 8) | c;
  return v;
}

}  // namespace qss::auth
