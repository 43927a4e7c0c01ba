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

#ifndef QSS_KEM_H_
#define QSS_KEM_H_

#include <memory>
#include <string>
#include <string_view>

#include "qss/bytes.h"
#include "qss/rng.h"

namespace qss::auth {

struct KemKeyPair {
  Bytes public_key;
  Bytes secret_key;
  std::string scheme_id;
};

struct Encapsulation {
  Bytes ciphertext;
  Bytes shared_secret;  // never transmitted
};

// Key encapsulation contract: decapsulate(sk, encapsulate(pk).ciphertext)
// equals encapsulate(pk).shared_secret for a matching pair. A malformed or
// tampered ciphertext yields a different secret (implicit rejection) rather
// than an error; the handshake's key-confirmation step detects it.
class Kem {
 public:
  virtual ~Kem() = default;

  virtual std::string_view scheme_id() const = 0;
  virtual KemKeyPair keygen(Rng& rng) const = 0;
  virtual Encapsulation encapsulate(ByteView public_key, Rng& rng) const = 0;
  virtual Bytes decapsulate(ByteView secret_key, ByteView ciphertext) const = 0;

  // Test doubles return true; the round driver refuses them unless the caller
  // opts in explicitly.
  virtual bool insecure_for_testing() const { return false; }
};

// DHKEM over X25519 with SHA3-256 key derivation. All randomness is drawn
// from the supplied Rng, so runs are reproducible from a seed. This is the
// classical stand-in behind the Kem contract; a lattice KEM plugs in through
// the same interface.
class X25519Kem final : public Kem {
 public:
  static constexpr std::string_view kSchemeId = "x25519-dhkem-sha3";

  std::string_view scheme_id() const override { return kSchemeId; }
  KemKeyPair keygen(Rng& rng) const override;
  Encapsulation encapsulate(ByteView public_key, Rng& rng) const override;
  Bytes decapsulate(ByteView secret_key, ByteView ciphertext) const override;
};

// Factory for the schemes compiled into the library.
std::unique_ptr<Kem> make_kem(std::string_view scheme_id);

}  // namespace qss::auth

#endif  // QSS_KEM_H_
