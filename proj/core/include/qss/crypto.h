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

#ifndef QSS_CRYPTO_H_
#define QSS_CRYPTO_H_

#include <array>
#include <cstddef>
#include <optional>

#include "qss/bytes.h"

namespace qss::crypto {

inline constexpr std::size_t kSha3Bytes = 32;

std::array<std::uint8_t, kSha3Bytes> sha3_256(ByteView data);
std::array<std::uint8_t, kSha3Bytes> sha3_256(std::initializer_list<ByteView> parts);

inline constexpr std::size_t kAesKeyBytes = 32;
inline constexpr std::size_t kGcmNonceBytes = 12;
inline constexpr std::size_t kGcmTagBytes = 16;

// AES-256-GCM. Output is ciphertext || tag.
Bytes aes256gcm_seal(ByteView key, ByteView nonce, ByteView plaintext,
                     ByteView associated_data);

// Returns nullopt on any authentication failure.
std::optional<Bytes> aes256gcm_open(ByteView key, ByteView nonce,
                                    ByteView sealed, ByteView associated_data);

// X25519 scalar multiplication helpers for the shipped KEM.
inline constexpr std::size_t kX25519Bytes = 32;
std::array<std::uint8_t, kX25519Bytes> x25519_public(ByteView private_key);
std::array<std::uint8_t, kX25519Bytes> x25519_shared(ByteView private_key,
                                                     ByteView peer_public);

}  // namespace qss::crypto

#endif  // QSS_CRYPTO_H_
