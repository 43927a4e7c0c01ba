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

#ifndef QSS_REGISTRATION_H_
#define QSS_REGISTRATION_H_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qss/aead.h"
#include "qss/bytes.h"
#include "qss/error.h"
#include "qss/kem.h"
#include "qss/rng.h"
#include "qss/wire.h"

namespace qss::auth {

inline constexpr std::size_t kChallengeNonceBytes = 16;
inline constexpr std::size_t kPlayerKeyBytes = 32;

enum class HandshakeStatus {
  ok,
  ca_not_trusted,          // hierarchical CA check refused the CA key
  decapsulation_mismatch,  // peers hold different shared secrets
  nonce_mismatch,          // echoed nonce is not the one just issued
  duplicate_registration,
  invalid_personal_info,
  unknown_player,
  proof_mismatch,  // round proof does not match the registered player key
  malformed_message,
};

std::string_view to_string(HandshakeStatus s);

class HandshakeAbort : public Error {
 public:
  HandshakeAbort(HandshakeStatus status, const std::string& what)
      : Error(what), status_(status) {}
  HandshakeStatus status() const { return status_; }

 private:
  HandshakeStatus status_;
};

struct PlayerRecord {
  enum class Status { active, revoked };

  std::string player_id;
  Bytes registered_key;  // the CA-issued player key
  std::uint64_t registration_time = 0;  // CA logical clock
  Status status = Status::active;
};

enum class Direction { to_player, to_ca };

struct TranscriptEntry {
  Direction direction;
  Bytes wire;
};

using Transcript = std::vector<TranscriptEntry>;

// Validates the personal-information payload of a registration.
using InfoValidator = std::function<bool(const std::string& name, ByteView info)>;
// Player-side authenticity check of the CA public key against a superior CA.
using CaTrustOracle = std::function<bool(ByteView ca_public_key)>;
// In-flight hook: may rewrite or inspect each message before delivery.
using WireTap = std::function<void(TranscriptEntry&)>;

// Dealer acting as certification authority. Holds the KEM key pair, the
// player registry and the set of every challenge nonce it has issued.
// Registry commits are serialized by an internal mutex; copies are independent
// snapshots.
class CertificationAuthority {
 public:
  CertificationAuthority(const Kem& kem, Rng& rng, InfoValidator validator = {});
  CertificationAuthority(const CertificationAuthority& other);
  CertificationAuthority& operator=(const CertificationAuthority& other);

  const Kem& kem() const { return *kem_; }
  const Bytes& public_key() const { return keys_.public_key; }
  const Bytes& secret_key() const { return keys_.secret_key; }

  std::optional<PlayerRecord> find(const std::string& player_id) const;
  std::size_t registered() const;
  std::vector<PlayerRecord> snapshot() const;

  // Fresh challenge nonce, never handed out before by this CA.
  Bytes issue_nonce(Rng& rng);
  bool validate_info(const std::string& name, ByteView info) const;

  // Adds the record; throws HandshakeAbort(duplicate_registration) if the id is
  // already present.
  void commit(PlayerRecord record);

 private:
  const Kem* kem_;
  KemKeyPair keys_;
  InfoValidator validator_;
  mutable std::mutex mu_;
  std::map<std::string, PlayerRecord> registry_;
  std::set<Bytes> issued_nonces_;
  std::uint64_t clock_ = 0;
};

// CA side of the seven-message registration handshake.
class CaRegistrationSession {
 public:
  explicit CaRegistrationSession(CertificationAuthority& ca) : ca_(&ca) {}

  Bytes hello() const;                                 // message 1
  Bytes on_encapsulation(ByteView wire, Rng& rng);     // 2 -> 3
  Bytes on_echo(ByteView wire, Rng& rng);              // 4 -> 5
  Bytes on_personal_info(ByteView wire, Rng& rng);     // 6 -> 7

  const std::optional<SecureChannel>& channel() const { return channel_; }
  const std::optional<PlayerRecord>& record() const { return record_; }

 private:
  CertificationAuthority* ca_;
  std::optional<SecureChannel> channel_;
  Bytes expected_nonce_;
  std::string name_;
  std::optional<PlayerRecord> record_;
};

struct PlayerIdentity {
  std::string name;
  Bytes personal_info;
};

// Player side of the registration handshake.
class PlayerRegistrationSession {
 public:
  PlayerRegistrationSession(PlayerIdentity identity, const Kem& kem,
                            CaTrustOracle trust = {});

  Bytes on_hello(ByteView wire, Rng& rng);      // 1 -> 2
  Bytes on_challenge(ByteView wire, Rng& rng);  // 3 -> 4
  Bytes on_ok(ByteView wire, Rng& rng);         // 5 -> 6
  void on_player_key(ByteView wire);            // 7

  const std::optional<SecureChannel>& channel() const { return channel_; }
  const Bytes& player_key() const { return player_key_; }
  const Bytes& ca_public_key() const { return ca_public_key_; }

 private:
  PlayerIdentity identity_;
  const Kem* kem_;
  CaTrustOracle trust_;
  Bytes ca_public_key_;
  std::optional<SecureChannel> channel_;
  Bytes player_key_;
};

// What a registered player keeps for later rounds.
struct PlayerCredentials {
  std::string player_id;
  Bytes player_key;
  Bytes ca_public_key;
};

struct RegistrationResult {
  HandshakeStatus status = HandshakeStatus::ok;
  std::string detail;
  std::optional<PlayerRecord> record;
  std::optional<SessionKey> ca_session_key;
  std::optional<SessionKey> player_session_key;
  std::optional<PlayerCredentials> credentials;
  Transcript transcript;

  bool ok() const { return status == HandshakeStatus::ok; }
};

RegistrationResult run_registration(CertificationAuthority& ca,
                                    const PlayerIdentity& player, Rng& rng,
                                    CaTrustOracle trust = {}, WireTap tap = {});

// Feeds the recorded player-to-CA messages of `recorded` into a fresh CA
// session, as an attacker replaying a captured transcript would.
RegistrationResult replay_registration(CertificationAuthority& ca,
                                       const Transcript& recorded, Rng& rng);

// SHA3-256("QSS-v1|round-proof" || player_key || nonce || round_id as u64be).
Bytes round_proof(ByteView player_key, ByteView nonce, std::uint64_t round_id);

struct RoundAuthentication {
  HandshakeStatus status = HandshakeStatus::ok;
  std::string detail;
  std::optional<SessionKey> dealer_key;
  std::optional<SessionKey> player_key;
  Transcript transcript;

  bool ok() const { return status == HandshakeStatus::ok; }
};

// Start-of-round mutual authentication: the player encapsulates a fresh
// shared secret to the CA key, the CA challenges with a fresh nonce, and the
// player answers with a proof keyed by its CA-issued player key. Both sides
// derive the round session key from the fresh secret.
RoundAuthentication authenticate_round(CertificationAuthority& ca,
                                       const PlayerCredentials& player,
                                       std::uint64_t round_id, Rng& rng,
                                       WireTap tap = {});

}  // namespace qss::auth

#endif  // QSS_REGISTRATION_H_
