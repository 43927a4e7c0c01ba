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

#ifndef QSS_TESTS_SUPPORT_TEST_KEM_H_
#define QSS_TESTS_SUPPORT_TEST_KEM_H_

#include <string_view>

#include "qss/kem.h"

namespace qss::testing {

// Deterministic, deliberately insecure KEM for reproducible transcripts.
// The public key equals the secret key and the ciphertext is the
// encapsulation randomness masked with it. Never use outside tests.
class TestKem final : public auth::Kem {
 public:
  static constexpr std::string_view kSchemeId = "insecure-test-kem";

  std::string_view scheme_id() const override { return kSchemeId; }
  auth::KemKeyPair keygen(Rng& rng) const override;
  auth::Encapsulation encapsulate(ByteView public_key, Rng& rng) const override;
  Bytes decapsulate(ByteView secret_key, ByteView ciphertext) const override;
  bool insecure_for_testing() const override { return true; }
};

}  // namespace qss::testing

#endif  // QSS_TESTS_SUPPORT_TEST_KEM_H_
