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

#ifndef QSS_AEAD_H_
#define QSS_AEAD_H_

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>

#include "qss/bytes.h"
#include "qss/crypto.h"
#include "qss/rng.h"

namespace qss::auth {

using AeadNonce = std::array<std::uint8_t, crypto::kGcmNonceBytes>;

// 256-bit symmetric key derived one-way from a KEM shared secret:
// SHA3-256("QSS-v1|session" || ss).
class SessionKey {
 public:
  static SessionKey derive(ByteView shared_secret);

  ByteView bytes() const { return key_; }

  friend bool operator==(const SessionKey&, const SessionKey&) = default;

 private:
  SessionKey() = default;
  std::array<std::uint8_t, crypto::kAesKeyBytes> key_{};
};

inline constexpr std::string_view kSessionLabel = "QSS-v1|session";

struct SealedMessage {
  AeadNonce nonce{};
  Bytes ciphertext;  // includes the 16-byte tag
};

// AES-256-GCM under one session key, tracking every nonce it has sealed with
// so that a (key, nonce) pair is never used twice.
class SecureChannel {
 public:
  explicit SecureChannel(SessionKey key) : key_(key) {}

  const SessionKey& key() const { return key_; }

  // Fresh random nonce from rng; redraws on the (negligible) chance of a clash.
  SealedMessage seal(ByteView plaintext, ByteView associated_data, Rng& rng);

  // Throws NonceReuseError if `nonce` was already used by this channel.
  SealedMessage seal_with_nonce(const AeadNonce& nonce, ByteView plaintext,
                                ByteView associated_data);

  std::optional<Bytes> open(const SealedMessage& message,
                            ByteView associated_data) const;

  std::size_t nonces_used() const { return used_.size(); }

 private:
  SessionKey key_;
  std::set<AeadNonce> used_;
};

}  // namespace qss::auth

#endif  // QSS_AEAD_H_
