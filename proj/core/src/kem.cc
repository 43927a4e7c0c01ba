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

#include "qss/kem.h"

#include "qss/crypto.h"
#include "qss/error.h"

namespace qss::auth {
namespace {

constexpr std::string_view kDeriveLabel = "QSS-v1|kem|x25519";
constexpr std::string_view kRejectLabel = "QSS-v1|kem|reject";

Bytes derive(ByteView dh, ByteView ciphertext, ByteView public_key) {
  const Bytes label = to_bytes(kDeriveLabel);
  const auto h = crypto::sha3_256({label, dh, ciphertext, public_key});
  return Bytes(h.begin(), h.end());
}

}  // namespace

KemKeyPair X25519Kem::keygen(Rng& rng) const {
  Bytes sk = rng.bytes(crypto::kX25519Bytes);
  const auto pk = crypto::x25519_public(sk);
  KemKeyPair kp;
  kp.public_key.assign(pk.begin(), pk.end());
  // Secret key carries the public key so decapsulation can bind it.
  kp.secret_key = concat({sk, kp.public_key});
  kp.scheme_id = std::string(kSchemeId);
  return kp;
}

Encapsulation X25519Kem::encapsulate(ByteView public_key, Rng& rng) const {
  if (public_key.size() != crypto::kX25519Bytes) {
    throw PreconditionError("x25519 public key must be 32 bytes");
  }
  const Bytes eph = rng.bytes(crypto::kX25519Bytes);
  const auto eph_pub = crypto::x25519_public(eph);
  const auto dh = crypto::x25519_shared(eph, public_key);
  Encapsulation out;
  out.ciphertext.assign(eph_pub.begin(), eph_pub.end());
  out.shared_secret = derive(dh, out.ciphertext, public_key);
  return out;
}

Bytes X25519Kem::decapsulate(ByteView secret_key, ByteView ciphertext) const {
  if (secret_key.size() != 2 * crypto::kX25519Bytes) {
    throw PreconditionError("x25519 secret key must be 64 bytes");
  }
  const ByteView sk = secret_key.first(crypto::kX25519Bytes);
  const ByteView pk = secret_key.subspan(crypto::kX25519Bytes);
  if (ciphertext.size() != crypto::kX25519Bytes) {
    const Bytes label = to_bytes(kRejectLabel);
    const auto h = crypto::sha3_256({label, sk, ciphertext});
    return Bytes(h.begin(), h.end());
  }
  const auto dh = crypto::x25519_shared(sk, ciphertext);
  return derive(dh, ciphertext, pk);
}

std::unique_ptr<Kem> make_kem(std::string_view scheme_id) {
  if (scheme_id == X25519Kem::kSchemeId || scheme_id == "x25519") {
    return std::make_unique<X25519Kem>();
  }
  throw ConfigError("round.kem", "unknown KEM scheme '" + std::string(scheme_id) + "'");
}

}  // namespace qss::auth
