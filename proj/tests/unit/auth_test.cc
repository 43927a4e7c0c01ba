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

#include <string>

#include "gtest/gtest.h"
#include "qss/aead.h"
#include "qss/crypto.h"
#include "qss/error.h"
#include "qss/kem.h"
#include "qss/wire.h"
#include "support/test_kem.h"

namespace qss::auth {
namespace {

Bytes unhex(std::string_view h) {
  Bytes out;
  for (std::size_t i = 0; i + 1 < h.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(std::stoi(std::string(h.substr(i, 2)), nullptr, 16)));
  }
  return out;
}

TEST(CryptoTest, Sha3Empty) {
  EXPECT_EQ(to_hex(crypto::sha3_256(ByteView{})),
            "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a");
}

TEST(CryptoTest, X25519Rfc7748) {
  const Bytes alice = unhex("77076d0a7318a57d3c16c17251b26645df4c2f87ebc0992ab177fba51db92c2a");
  const Bytes bob = unhex("5dab087e624a8a4b79e17f8b83800ee66f3bb1292618b6fd1c2f8b27ff88e0eb");
  EXPECT_EQ(to_hex(crypto::x25519_public(alice)),
            "8520f0098930a754748b7ddcb43ef75a0dbf3a0d26381af4eba4a98eaa9b4e6a");
  const auto bob_pub = crypto::x25519_public(bob);
  EXPECT_EQ(to_hex(bob_pub),
            "de9edb7d7b7dc1b4d35b61c2ece435373f8343c85b78674dadfc7e146f882b4f");
  EXPECT_EQ(to_hex(crypto::x25519_shared(alice, bob_pub)),
            "4a5d9d5ba4ce2de1728e3bf480350f25e07e21c947d19e3376f09b3c1e161742");
}

TEST(CryptoTest, AesGcmKnownAnswer) {
  const Bytes key(32, 0x42);
  Bytes nonce(12);
  for (int i = 0; i < 12; ++i) nonce[i] = static_cast<std::uint8_t>(i);
  const Bytes ad = associated_data(MessageType::polynomial_slice);
  EXPECT_EQ(to_string(ad), "QSS-v1|msg|32");
  const Bytes sealed = crypto::aes256gcm_seal(key, nonce, to_bytes("secret shares"), ad);
  EXPECT_EQ(to_hex(sealed), "76bbf2afd458d278f5673676a25fa947bb545b9007400c4516bfa553a6");
  auto opened = crypto::aes256gcm_open(key, nonce, sealed, ad);
  ASSERT_TRUE(opened);
  EXPECT_EQ(to_string(*opened), "secret shares");
}

template <typename K>
void kem_roundtrip() {
  K kem;
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const KemKeyPair kp = kem.keygen(rng);
    EXPECT_EQ(kp.scheme_id, kem.scheme_id());
    const Encapsulation enc = kem.encapsulate(kp.public_key, rng);
    EXPECT_EQ(kem.decapsulate(kp.secret_key, enc.ciphertext), enc.shared_secret);
    EXPECT_FALSE(contains(enc.ciphertext, enc.shared_secret));

    Bytes tampered = enc.ciphertext;
    tampered[0] ^= 1;
    EXPECT_NE(kem.decapsulate(kp.secret_key, tampered), enc.shared_secret);
    const KemKeyPair other = kem.keygen(rng);
    EXPECT_NE(kem.decapsulate(other.secret_key, enc.ciphertext), enc.shared_secret);
  }
}

TEST(KemTest, X25519Roundtrip) { kem_roundtrip<X25519Kem>(); }
TEST(KemTest, TestKemRoundtrip) { kem_roundtrip<testing::TestKem>(); }

TEST(KemTest, SeededAndDistinct) {
  X25519Kem kem;
  Rng a(5), b(5);
  const auto ka = kem.keygen(a);
  const auto kb = kem.keygen(b);
  EXPECT_EQ(ka.public_key, kb.public_key);
  EXPECT_EQ(kem.encapsulate(ka.public_key, a).ciphertext,
            kem.encapsulate(kb.public_key, b).ciphertext);
  EXPECT_NE(kem.keygen(a).public_key, ka.public_key);
}

TEST(KemTest, ShortCiphertextIsImplicitlyRejected) {
  X25519Kem kem;
  Rng rng(6);
  const auto kp = kem.keygen(rng);
  const Bytes ss = kem.decapsulate(kp.secret_key, Bytes(5, 1));
  EXPECT_EQ(ss.size(), 32u);
}

TEST(KemTest, Factory) {
  EXPECT_EQ(make_kem("x25519-dhkem-sha3")->scheme_id(), X25519Kem::kSchemeId);
  EXPECT_FALSE(make_kem("x25519-dhkem-sha3")->insecure_for_testing());
  EXPECT_THROW(make_kem("rot13"), ConfigError);
  EXPECT_TRUE(testing::TestKem().insecure_for_testing());
}

TEST(SessionKeyTest, Frozen) {
  Bytes ss(32);
  for (int i = 0; i < 32; ++i) ss[i] = static_cast<std::uint8_t>(i);
  EXPECT_EQ(to_hex(SessionKey::derive(ss).bytes()),
            "f2c413fe742bd02eac617eb49ef33341473884d0fa041415f79f5d803fdfd8fc");
}

SecureChannel channel(std::uint8_t fill = 0x42) {
  return SecureChannel(SessionKey::derive(Bytes(32, fill)));
}

TEST(ChannelTest, SealOpenTamper) {
  SecureChannel ch = channel();
  Rng rng(1);
  const Bytes ad = to_bytes("ad");
  SealedMessage m = ch.seal(to_bytes("hello"), ad, rng);
  ASSERT_TRUE(ch.open(m, ad));
  EXPECT_EQ(to_string(*ch.open(m, ad)), "hello");
  EXPECT_FALSE(ch.open(m, to_bytes("other")));
  SealedMessage t = m;
  t.ciphertext[0] ^= 0x80;
  EXPECT_FALSE(ch.open(t, ad));
  t = m;
  t.nonce[3] ^= 1;
  EXPECT_FALSE(ch.open(t, ad));
  EXPECT_FALSE(channel(0x43).open(m, ad));
}

TEST(ChannelTest, NonceReuseRefused) {
  SecureChannel ch = channel();
  AeadNonce n{};
  ch.seal_with_nonce(n, to_bytes("a"), {});
  EXPECT_THROW(ch.seal_with_nonce(n, to_bytes("b"), {}), NonceReuseError);
  Rng rng(2);
  for (int i = 0; i < 100; ++i) ch.seal(to_bytes("x"), {}, rng);
  EXPECT_EQ(ch.nonces_used(), 101u);
}

TEST(WireTest, EncodeLayout) {
  const WireMessage m{MessageType::ok, {to_bytes("ab"), {}}};
  EXPECT_EQ(to_hex(m.encode()), "05000000026162" "00000000");
  const WireMessage back = WireMessage::decode(m.encode());
  EXPECT_EQ(back.type, MessageType::ok);
  EXPECT_EQ(back.fields, m.fields);
}

TEST(WireTest, DecodeRejectsMalformed) {
  EXPECT_THROW(WireMessage::decode(Bytes{}), WireFormatError);
  EXPECT_THROW(WireMessage::decode(unhex("05000000036162")), WireFormatError);
  EXPECT_THROW(WireMessage::decode(unhex("050000")), WireFormatError);
  EXPECT_THROW(WireMessage::decode(unhex("ff")), WireFormatError);
  const WireMessage m{MessageType::encapsulation, {to_bytes("x")}};
  EXPECT_NO_THROW(m.expect(MessageType::encapsulation, 1));
  EXPECT_THROW(m.expect(MessageType::encapsulation, 2), WireFormatError);
  EXPECT_THROW(m.expect(MessageType::ok, 1), WireFormatError);
}

TEST(WireTest, FieldsAndIntegers) {
  const std::vector<Bytes> f{to_bytes("one"), {}, Bytes(300, 7)};
  EXPECT_EQ(decode_fields(encode_fields(f)), f);
  EXPECT_EQ(to_hex(encode_u64(0x0102030405060708ULL)), "0102030405060708");
  EXPECT_EQ(decode_u64(encode_u64(123456789)), 123456789u);
  EXPECT_THROW(decode_u64(Bytes(3)), WireFormatError);
}

TEST(WireTest, SealedMessageBindsType) {
  SecureChannel ch = channel();
  Rng rng(3);
  WireMessage m = seal_message(ch, MessageType::measurement, to_bytes("M=4"), rng);
  ASSERT_EQ(m.fields.size(), 2u);
  EXPECT_EQ(m.fields[0].size(), crypto::kGcmNonceBytes);
  EXPECT_EQ(to_string(*open_message(ch, m)), "M=4");
  m.type = MessageType::aggregate;
  EXPECT_FALSE(open_message(ch, m));
}

}  // namespace
}  // namespace qss::auth
