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

#include <set>

#include "gtest/gtest.h"
#include "qss/kem.h"
#include "support/test_kem.h"

namespace qss::auth {
namespace {

PlayerIdentity alice() { return {"alice", to_bytes("alice@example.org")}; }

class RegistrationTest : public ::testing::Test {
 protected:
  X25519Kem kem_;
  Rng rng_{2024};
  CertificationAuthority ca_{kem_, rng_};
};

TEST_F(RegistrationTest, HappyPath) {
  const RegistrationResult r = run_registration(ca_, alice(), rng_);
  ASSERT_TRUE(r.ok()) << r.detail;
  ASSERT_TRUE(r.ca_session_key && r.player_session_key);
  EXPECT_EQ(*r.ca_session_key, *r.player_session_key);
  ASSERT_TRUE(r.record && r.credentials);
  EXPECT_EQ(r.record->player_id, "alice");
  EXPECT_EQ(r.credentials->player_key, r.record->registered_key);
  EXPECT_EQ(r.credentials->player_key.size(), kPlayerKeyBytes);
  EXPECT_EQ(r.credentials->ca_public_key, ca_.public_key());
  EXPECT_EQ(r.transcript.size(), 7u);
  EXPECT_EQ(ca_.registered(), 1u);
  EXPECT_EQ(ca_.find("alice")->registration_time, 1u);
}

TEST_F(RegistrationTest, SecretsNeverOnTheWire) {
  const RegistrationResult r = run_registration(ca_, alice(), rng_);
  ASSERT_TRUE(r.ok());
  for (const TranscriptEntry& e : r.transcript) {
    EXPECT_FALSE(contains(e.wire, r.ca_session_key->bytes()));
    EXPECT_FALSE(contains(e.wire, r.credentials->player_key));
    EXPECT_FALSE(contains(e.wire, ca_.secret_key()));
    EXPECT_FALSE(contains(e.wire, to_bytes("alice@example.org")));
  }
}

TEST_F(RegistrationTest, ReplayIsRejected) {
  const RegistrationResult r = run_registration(ca_, alice(), rng_);
  ASSERT_TRUE(r.ok());
  CertificationAuthority fresh = ca_;
  const RegistrationResult replay = replay_registration(fresh, r.transcript, rng_);
  EXPECT_EQ(replay.status, HandshakeStatus::nonce_mismatch);
  EXPECT_EQ(fresh.registered(), 1u);
  EXPECT_EQ(replay_registration(ca_, r.transcript, rng_).status,
            HandshakeStatus::nonce_mismatch);
}

TEST_F(RegistrationTest, NoncesNeverRepeat) {
  std::set<Bytes> seen;
  for (int i = 0; i < 1000; ++i) {
    const Bytes n = ca_.issue_nonce(rng_);
    EXPECT_EQ(n.size(), kChallengeNonceBytes);
    EXPECT_TRUE(seen.insert(n).second);
  }
}

TEST_F(RegistrationTest, UntrustedCa) {
  const auto r = run_registration(ca_, alice(), rng_, [](ByteView) { return false; });
  EXPECT_EQ(r.status, HandshakeStatus::ca_not_trusted);
  EXPECT_EQ(ca_.registered(), 0u);
}

TEST_F(RegistrationTest, TamperedCiphertext) {
  int seen = 0;
  const auto r = run_registration(ca_, alice(), rng_, {}, [&](TranscriptEntry& e) {
    if (seen++ == 1) e.wire.back() ^= 0x01;
  });
  EXPECT_EQ(r.status, HandshakeStatus::decapsulation_mismatch);
  EXPECT_EQ(ca_.registered(), 0u);
}

TEST_F(RegistrationTest, TruncatedMessage) {
  int seen = 0;
  const auto r = run_registration(ca_, alice(), rng_, {}, [&](TranscriptEntry& e) {
    if (seen++ == 0) e.wire.resize(3);
  });
  EXPECT_EQ(r.status, HandshakeStatus::malformed_message);
}

TEST_F(RegistrationTest, Duplicate) {
  ASSERT_TRUE(run_registration(ca_, alice(), rng_).ok());
  EXPECT_EQ(run_registration(ca_, alice(), rng_).status,
            HandshakeStatus::duplicate_registration);
  EXPECT_TRUE(run_registration(ca_, {"bob", {}}, rng_).ok());
  EXPECT_EQ(ca_.registered(), 2u);
}

TEST(RegistrationValidatorTest, RejectsInfo) {
  X25519Kem kem;
  Rng rng(3);
  CertificationAuthority ca(kem, rng, [](const std::string&, ByteView info) {
    return !info.empty();
  });
  EXPECT_EQ(run_registration(ca, {"carol", {}}, rng).status,
            HandshakeStatus::invalid_personal_info);
  EXPECT_TRUE(run_registration(ca, {"carol", to_bytes("id")}, rng).ok());
}

TEST(RegistrationDeterminismTest, TestKemTranscriptsRepeat) {
  testing::TestKem kem;
  auto transcript = [&] {
    Rng rng(99);
    CertificationAuthority ca(kem, rng);
    return run_registration(ca, alice(), rng).transcript;
  };
  const Transcript a = transcript();
  const Transcript b = transcript();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].wire, b[i].wire);
}

TEST(RoundProofTest, Frozen) {
  EXPECT_EQ(to_hex(round_proof(Bytes(32, 0x07), Bytes(16, 0x09), 5)),
            "54cbcf40a11d7f9ac657f488d1bb14cc412c635adfec0f81a2dbfd3584718619");
}

class RoundAuthTest : public RegistrationTest {
 protected:
  void SetUp() override {
    auto r = run_registration(ca_, alice(), rng_);
    ASSERT_TRUE(r.ok());
    creds_ = *r.credentials;
  }
  PlayerCredentials creds_;
};

TEST_F(RoundAuthTest, Succeeds) {
  const RoundAuthentication a = authenticate_round(ca_, creds_, 1, rng_);
  ASSERT_TRUE(a.ok()) << a.detail;
  EXPECT_EQ(*a.dealer_key, *a.player_key);
  EXPECT_EQ(a.transcript.size(), 3u);
  const RoundAuthentication b = authenticate_round(ca_, creds_, 2, rng_);
  EXPECT_NE(*a.dealer_key, *b.dealer_key);
}

TEST_F(RoundAuthTest, WrongPlayerKey) {
  PlayerCredentials forged = creds_;
  forged.player_key[0] ^= 0xff;
  EXPECT_EQ(authenticate_round(ca_, forged, 1, rng_).status,
            HandshakeStatus::proof_mismatch);
}

TEST_F(RoundAuthTest, UnknownPlayer) {
  PlayerCredentials stranger = creds_;
  stranger.player_id = "mallory";
  EXPECT_EQ(authenticate_round(ca_, stranger, 1, rng_).status,
            HandshakeStatus::unknown_player);
}

TEST_F(RoundAuthTest, ReplayedResponse) {
  Bytes captured;
  authenticate_round(ca_, creds_, 1, rng_, [&](TranscriptEntry& e) {
    if (e.wire[0] == static_cast<std::uint8_t>(MessageType::round_response)) {
      captured = e.wire;
    }
  });
  ASSERT_FALSE(captured.empty());
  const auto r = authenticate_round(ca_, creds_, 1, rng_, [&](TranscriptEntry& e) {
    if (e.wire[0] == static_cast<std::uint8_t>(MessageType::round_response)) {
      e.wire = captured;
    }
  });
  EXPECT_FALSE(r.ok());
}

}  // namespace
}  // namespace qss::auth
