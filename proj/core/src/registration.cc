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

#include "qss/registration.h"

#include <utility>

#include "qss/crypto.h"

namespace qss::auth {
namespace {

constexpr std::string_view kOk = "Ok";
constexpr std::string_view kProofLabel = "QSS-v1|round-proof";

[[noreturn]] void abort_with(HandshakeStatus s, const std::string& what) {
  throw HandshakeAbort(s, what);
}

Bytes open_or_abort(const std::optional<SecureChannel>& channel,
                    const WireMessage& m, const char* step) {
  if (!channel) abort_with(HandshakeStatus::malformed_message, "no channel yet");
  auto pt = open_message(*channel, m);
  if (!pt) {
    abort_with(HandshakeStatus::decapsulation_mismatch,
               std::string("cannot open ") + step);
  }
  return *pt;
}

}  // namespace

Bytes round_proof(ByteView player_key, ByteView nonce, std::uint64_t round_id) {
  const Bytes label = to_bytes(kProofLabel);
  const Bytes rid = encode_u64(round_id);
  const auto d = crypto::sha3_256({label, player_key, nonce, rid});
  return Bytes(d.begin(), d.end());
}

std::string_view to_string(HandshakeStatus s) {
  switch (s) {
    case HandshakeStatus::ok: return "ok";
    case HandshakeStatus::ca_not_trusted: return "ca_not_trusted";
    case HandshakeStatus::decapsulation_mismatch: return "decapsulation_mismatch";
    case HandshakeStatus::nonce_mismatch: return "nonce_mismatch";
    case HandshakeStatus::duplicate_registration: return "duplicate_registration";
    case HandshakeStatus::invalid_personal_info: return "invalid_personal_info";
    case HandshakeStatus::unknown_player: return "unknown_player";
    case HandshakeStatus::proof_mismatch: return "proof_mismatch";
    case HandshakeStatus::malformed_message: return "malformed_message";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// CertificationAuthority

CertificationAuthority::CertificationAuthority(const Kem& kem, Rng& rng,
                                               InfoValidator validator)
    : kem_(&kem), keys_(kem.keygen(rng)), validator_(std::move(validator)) {}

CertificationAuthority::CertificationAuthority(const CertificationAuthority& other)
    : kem_(other.kem_), keys_(other.keys_), validator_(other.validator_) {
  std::lock_guard<std::mutex> lock(other.mu_);
  registry_ = other.registry_;
  issued_nonces_ = other.issued_nonces_;
  clock_ = other.clock_;
}

CertificationAuthority& CertificationAuthority::operator=(
    const CertificationAuthority& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mu_, other.mu_);
  kem_ = other.kem_;
  keys_ = other.keys_;
  validator_ = other.validator_;
  registry_ = other.registry_;
  issued_nonces_ = other.issued_nonces_;
  clock_ = other.clock_;
  return *this;
}

std::optional<PlayerRecord> CertificationAuthority::find(
    const std::string& player_id) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = registry_.find(player_id);
  if (it == registry_.end()) return std::nullopt;
  return it->second;
}

std::size_t CertificationAuthority::registered() const {
  std::lock_guard<std::mutex> lock(mu_);
  return registry_.size();
}

std::vector<PlayerRecord> CertificationAuthority::snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<PlayerRecord> out;
  out.reserve(registry_.size());
  for (const auto& [id, rec] : registry_) out.push_back(rec);
  return out;
}

Bytes CertificationAuthority::issue_nonce(Rng& rng) {
  std::lock_guard<std::mutex> lock(mu_);
  for (;;) {
    Bytes n = rng.bytes(kChallengeNonceBytes);
    if (issued_nonces_.insert(n).second) return n;
  }
}

bool CertificationAuthority::validate_info(const std::string& name,
                                           ByteView info) const {
  if (!validator_) return true;
  return validator_(name, info);
}

void CertificationAuthority::commit(PlayerRecord record) {
  std::lock_guard<std::mutex> lock(mu_);
  if (registry_.count(record.player_id) != 0) {
    abort_with(HandshakeStatus::duplicate_registration,
               "player '" + record.player_id + "' is already registered");
  }
  for (const auto& [id, rec] : registry_) {
    if (rec.registered_key == record.registered_key) {
      abort_with(HandshakeStatus::duplicate_registration, "player key reused");
    }
  }
  record.registration_time = ++clock_;
  registry_.emplace(record.player_id, std::move(record));
}

// ---------------------------------------------------------------------------
// CA session

Bytes CaRegistrationSession::hello() const {
  return WireMessage{MessageType::ca_public_key,
                     {to_bytes(ca_->kem().scheme_id()), ca_->public_key()}}
      .encode();
}

Bytes CaRegistrationSession::on_encapsulation(ByteView wire, Rng& rng) {
  const WireMessage m = WireMessage::decode(wire);
  m.expect(MessageType::encapsulation, 1);
  const Bytes ss = ca_->kem().decapsulate(ca_->secret_key(), m.fields[0]);
  channel_.emplace(SessionKey::derive(ss));
  expected_nonce_ = ca_->issue_nonce(rng);
  return seal_message(*channel_, MessageType::nonce_challenge,
                      encode_fields({expected_nonce_}), rng)
      .encode();
}

Bytes CaRegistrationSession::on_echo(ByteView wire, Rng& rng) {
  const WireMessage m = WireMessage::decode(wire);
  m.expect(MessageType::nonce_echo, 2);
  const auto fields = decode_fields(open_or_abort(channel_, m, "nonce echo"));
  if (fields.size() != 2) abort_with(HandshakeStatus::malformed_message, "bad echo");
  if (expected_nonce_.empty() || fields[0].size() != expected_nonce_.size() ||
      !equal_ct(fields[0], expected_nonce_)) {
    abort_with(HandshakeStatus::nonce_mismatch,
               "echoed nonce does not match the challenge (replay or MITM)");
  }
  expected_nonce_.clear();
  name_ = qss::to_string(fields[1]);
  if (name_.empty()) abort_with(HandshakeStatus::malformed_message, "empty name");
  if (ca_->find(name_)) {
    abort_with(HandshakeStatus::duplicate_registration,
               "player '" + name_ + "' is already registered");
  }
  return seal_message(*channel_, MessageType::ok, to_bytes(kOk), rng).encode();
}

Bytes CaRegistrationSession::on_personal_info(ByteView wire, Rng& rng) {
  if (name_.empty()) abort_with(HandshakeStatus::malformed_message, "out of order");
  const WireMessage m = WireMessage::decode(wire);
  m.expect(MessageType::personal_info, 2);
  const Bytes info = open_or_abort(channel_, m, "personal info");
  if (!ca_->validate_info(name_, info)) {
    abort_with(HandshakeStatus::invalid_personal_info, "CA rejected personal info");
  }
  PlayerRecord rec;
  rec.player_id = name_;
  rec.registered_key = rng.bytes(kPlayerKeyBytes);
  ca_->commit(rec);
  record_ = ca_->find(name_);
  const Bytes nonce = ca_->issue_nonce(rng);
  return seal_message(*channel_, MessageType::player_key,
                      encode_fields({rec.registered_key, nonce}), rng)
      .encode();
}

// ---------------------------------------------------------------------------
// Player session

PlayerRegistrationSession::PlayerRegistrationSession(PlayerIdentity identity,
                                                     const Kem& kem,
                                                     CaTrustOracle trust)
    : identity_(std::move(identity)), kem_(&kem), trust_(std::move(trust)) {}

Bytes PlayerRegistrationSession::on_hello(ByteView wire, Rng& rng) {
  const WireMessage m = WireMessage::decode(wire);
  m.expect(MessageType::ca_public_key, 2);
  if (qss::to_string(m.fields[0]) != kem_->scheme_id()) {
    abort_with(HandshakeStatus::malformed_message, "KEM scheme mismatch");
  }
  if (trust_ && !trust_(m.fields[1])) {
    abort_with(HandshakeStatus::ca_not_trusted, "superior CA refused the CA key");
  }
  ca_public_key_ = m.fields[1];
  const Encapsulation enc = kem_->encapsulate(ca_public_key_, rng);
  channel_.emplace(SessionKey::derive(enc.shared_secret));
  return WireMessage{MessageType::encapsulation, {enc.ciphertext}}.encode();
}

Bytes PlayerRegistrationSession::on_challenge(ByteView wire, Rng& rng) {
  const WireMessage m = WireMessage::decode(wire);
  m.expect(MessageType::nonce_challenge, 2);
  const auto fields = decode_fields(open_or_abort(channel_, m, "nonce challenge"));
  if (fields.size() != 1 || fields[0].size() < kChallengeNonceBytes) {
    abort_with(HandshakeStatus::malformed_message, "bad challenge");
  }
  return seal_message(*channel_, MessageType::nonce_echo,
                      encode_fields({fields[0], to_bytes(identity_.name)}), rng)
      .encode();
}

Bytes PlayerRegistrationSession::on_ok(ByteView wire, Rng& rng) {
  const WireMessage m = WireMessage::decode(wire);
  m.expect(MessageType::ok, 2);
  if (qss::to_string(open_or_abort(channel_, m, "ok")) != kOk) {
    abort_with(HandshakeStatus::malformed_message, "expected Ok");
  }
  return seal_message(*channel_, MessageType::personal_info,
                      identity_.personal_info, rng)
      .encode();
}

void PlayerRegistrationSession::on_player_key(ByteView wire) {
  const WireMessage m = WireMessage::decode(wire);
  m.expect(MessageType::player_key, 2);
  const auto fields = decode_fields(open_or_abort(channel_, m, "player key"));
  if (fields.size() != 2 || fields[0].size() != kPlayerKeyBytes) {
    abort_with(HandshakeStatus::malformed_message, "bad player key message");
  }
  player_key_ = fields[0];
}

// ---------------------------------------------------------------------------
// Drivers

namespace {

// Applies the tap, records the delivered bytes and returns them.
Bytes deliver(Transcript& transcript, const WireTap& tap, Direction dir,
              Bytes wire) {
  TranscriptEntry e{dir, std::move(wire)};
  if (tap) tap(e);
  transcript.push_back(e);
  return e.wire;
}

template <typename Result, typename Fn>
void guarded(Result& result, Fn&& fn) {
  try {
    fn();
  } catch (const HandshakeAbort& e) {
    result.status = e.status();
    result.detail = e.what();
  } catch (const WireFormatError& e) {
    result.status = HandshakeStatus::malformed_message;
    result.detail = e.what();
  }
}

}  // namespace

RegistrationResult run_registration(CertificationAuthority& ca,
                                    const PlayerIdentity& player, Rng& rng,
                                    CaTrustOracle trust, WireTap tap) {
  RegistrationResult r;
  CaRegistrationSession ca_side(ca);
  PlayerRegistrationSession p_side(player, ca.kem(), std::move(trust));
  Transcript& t = r.transcript;
  guarded(r, [&] {
    Bytes w = deliver(t, tap, Direction::to_player, ca_side.hello());
    w = deliver(t, tap, Direction::to_ca, p_side.on_hello(w, rng));
    w = deliver(t, tap, Direction::to_player, ca_side.on_encapsulation(w, rng));
    w = deliver(t, tap, Direction::to_ca, p_side.on_challenge(w, rng));
    w = deliver(t, tap, Direction::to_player, ca_side.on_echo(w, rng));
    w = deliver(t, tap, Direction::to_ca, p_side.on_ok(w, rng));
    w = deliver(t, tap, Direction::to_player, ca_side.on_personal_info(w, rng));
    p_side.on_player_key(w);
  });
  if (ca_side.channel()) r.ca_session_key = ca_side.channel()->key();
  if (p_side.channel()) r.player_session_key = p_side.channel()->key();
  if (r.ok()) {
    r.record = ca_side.record();
    r.credentials = PlayerCredentials{player.name, p_side.player_key(),
                                      p_side.ca_public_key()};
  }
  return r;
}

RegistrationResult replay_registration(CertificationAuthority& ca,
                                       const Transcript& recorded, Rng& rng) {
  RegistrationResult r;
  CaRegistrationSession ca_side(ca);
  std::vector<Bytes> to_ca;
  for (const TranscriptEntry& e : recorded) {
    if (e.direction == Direction::to_ca) to_ca.push_back(e.wire);
  }
  Transcript& t = r.transcript;
  guarded(r, [&] {
    if (to_ca.size() < 3) {
      abort_with(HandshakeStatus::malformed_message, "transcript too short");
    }
    t.push_back({Direction::to_player, ca_side.hello()});
    t.push_back({Direction::to_ca, to_ca[0]});
    t.push_back({Direction::to_player, ca_side.on_encapsulation(to_ca[0], rng)});
    t.push_back({Direction::to_ca, to_ca[1]});
    t.push_back({Direction::to_player, ca_side.on_echo(to_ca[1], rng)});
    t.push_back({Direction::to_ca, to_ca[2]});
    t.push_back({Direction::to_player, ca_side.on_personal_info(to_ca[2], rng)});
  });
  if (ca_side.channel()) r.ca_session_key = ca_side.channel()->key();
  if (r.ok()) r.record = ca_side.record();
  return r;
}

RoundAuthentication authenticate_round(CertificationAuthority& ca,
                                       const PlayerCredentials& player,
                                       std::uint64_t round_id, Rng& rng,
                                       WireTap tap) {
  RoundAuthentication r;
  Transcript& t = r.transcript;
  std::optional<SecureChannel> dealer_ch;
  std::optional<SecureChannel> player_ch;
  guarded(r, [&] {
    // Player: fresh encapsulation to the CA key it registered against.
    const Encapsulation enc = ca.kem().encapsulate(player.ca_public_key, rng);
    player_ch.emplace(SessionKey::derive(enc.shared_secret));
    Bytes w = deliver(t, tap, Direction::to_ca,
                      WireMessage{MessageType::round_encapsulation,
                                  {to_bytes(player.player_id), enc.ciphertext}}
                          .encode());

    // Dealer: look up the player, decapsulate, challenge.
    WireMessage m = WireMessage::decode(w);
    m.expect(MessageType::round_encapsulation, 2);
    const std::string id = qss::to_string(m.fields[0]);
    const auto rec = ca.find(id);
    if (!rec || rec->status != PlayerRecord::Status::active) {
      abort_with(HandshakeStatus::unknown_player, "player '" + id + "' not registered");
    }
    dealer_ch.emplace(SessionKey::derive(ca.kem().decapsulate(ca.secret_key(), m.fields[1])));
    const Bytes nonce = ca.issue_nonce(rng);
    w = deliver(t, tap, Direction::to_player,
                seal_message(*dealer_ch, MessageType::round_challenge,
                             encode_fields({nonce}), rng)
                    .encode());

    // Player: answer with a proof keyed by its player key.
    m = WireMessage::decode(w);
    m.expect(MessageType::round_challenge, 2);
    const auto ch = decode_fields(open_or_abort(player_ch, m, "round challenge"));
    if (ch.size() != 1) abort_with(HandshakeStatus::malformed_message, "bad challenge");
    w = deliver(t, tap, Direction::to_ca,
                seal_message(*player_ch, MessageType::round_response,
                             encode_fields({ch[0], round_proof(player.player_key,
                                                               ch[0], round_id)}),
                             rng)
                    .encode());

    // Dealer: verify nonce and proof.
    m = WireMessage::decode(w);
    m.expect(MessageType::round_response, 2);
    const auto resp = decode_fields(open_or_abort(dealer_ch, m, "round response"));
    if (resp.size() != 2) abort_with(HandshakeStatus::malformed_message, "bad response");
    if (resp[0].size() != nonce.size() || !equal_ct(resp[0], nonce)) {
      abort_with(HandshakeStatus::nonce_mismatch, "stale round nonce");
    }
    const Bytes expected = round_proof(rec->registered_key, nonce, round_id);
    if (resp[1].size() != expected.size() || !equal_ct(resp[1], expected)) {
      abort_with(HandshakeStatus::proof_mismatch, "round proof rejected");
    }
  });
  if (dealer_ch) r.dealer_key = dealer_ch->key();
  if (player_ch) r.player_key = player_ch->key();
  return r;
}

}  // namespace qss::auth
