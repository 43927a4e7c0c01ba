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

#include "qss/aead.h"

#include "qss/error.h"

namespace qss::auth {

SessionKey SessionKey::derive(ByteView shared_secret) {
  const Bytes label = to_bytes(kSessionLabel);
  SessionKey k;
  k.key_ = crypto::sha3_256({label, shared_secret});
  return k;
}

SealedMessage SecureChannel::seal(ByteView plaintext, ByteView associated_data,
                                  Rng& rng) {
  AeadNonce nonce;
  do {
    rng.fill(nonce);
  } while (used_.contains(nonce));
  return seal_with_nonce(nonce, plaintext, associated_data);
}

SealedMessage SecureChannel::seal_with_nonce(const AeadNonce& nonce,
                                             ByteView plaintext,
                                             ByteView associated_data) {
  if (!used_.insert(nonce).second) {
    throw NonceReuseError("AEAD nonce " + to_hex(nonce) +
                          " already used under this session key");
  }
  SealedMessage m;
  m.nonce = nonce;
  m.ciphertext = crypto::aes256gcm_seal(key_.bytes(), nonce, plaintext,
                                        associated_data);
  return m;
}

std::optional<Bytes> SecureChannel::open(const SealedMessage& message,
                                         ByteView associated_data) const {
  return crypto::aes256gcm_open(key_.bytes(), message.nonce, message.ciphertext,
                                associated_data);
}

}  // namespace qss::auth
