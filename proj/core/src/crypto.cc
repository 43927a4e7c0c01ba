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

#include "qss/crypto.h"

#include <openssl/evp.h>

#include <memory>

#include "qss/error.h"

namespace qss::crypto {
namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* p) const { EVP_MD_CTX_free(p); }
};
struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* p) const { EVP_CIPHER_CTX_free(p); }
};
struct PkeyDeleter {
  void operator()(EVP_PKEY* p) const { EVP_PKEY_free(p); }
};
struct PkeyCtxDeleter {
  void operator()(EVP_PKEY_CTX* p) const { EVP_PKEY_CTX_free(p); }
};

using MdCtx = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;
using Pkey = std::unique_ptr<EVP_PKEY, PkeyDeleter>;
using PkeyCtx = std::unique_ptr<EVP_PKEY_CTX, PkeyCtxDeleter>;

void check(int ok, const char* what) {
  if (ok != 1) throw Error(std::string("openssl: ") + what);
}

Pkey x25519_private_key(ByteView private_key) {
  if (private_key.size() != kX25519Bytes) {
    throw PreconditionError("x25519 private key must be 32 bytes");
  }
  Pkey key(EVP_PKEY_new_raw_private_key(EVP_PKEY_X25519, nullptr,
                                        private_key.data(), private_key.size()));
  if (!key) throw Error("openssl: EVP_PKEY_new_raw_private_key");
  return key;
}

}  // namespace

std::array<std::uint8_t, kSha3Bytes> sha3_256(std::initializer_list<ByteView> parts) {
  MdCtx ctx(EVP_MD_CTX_new());
  if (!ctx) throw Error("openssl: EVP_MD_CTX_new");
  check(EVP_DigestInit_ex(ctx.get(), EVP_sha3_256(), nullptr), "DigestInit");
  for (ByteView p : parts) {
    check(EVP_DigestUpdate(ctx.get(), p.data(), p.size()), "DigestUpdate");
  }
  std::array<std::uint8_t, kSha3Bytes> out{};
  unsigned int len = 0;
  check(EVP_DigestFinal_ex(ctx.get(), out.data(), &len), "DigestFinal");
  return out;
}

std::array<std::uint8_t, kSha3Bytes> sha3_256(ByteView data) {
  return sha3_256({data});
}

Bytes aes256gcm_seal(ByteView key, ByteView nonce, ByteView plaintext,
                     ByteView associated_data) {
  if (key.size() != kAesKeyBytes || nonce.size() != kGcmNonceBytes) {
    throw PreconditionError("aes-256-gcm: bad key or nonce length");
  }
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw Error("openssl: EVP_CIPHER_CTX_new");
  check(EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(),
                           nonce.data()),
        "EncryptInit");
  int len = 0;
  if (!associated_data.empty()) {
    check(EVP_EncryptUpdate(ctx.get(), nullptr, &len, associated_data.data(),
                            static_cast<int>(associated_data.size())),
          "EncryptUpdate(aad)");
  }
  Bytes out(plaintext.size() + kGcmTagBytes);
  int written = 0;
  if (!plaintext.empty()) {
    check(EVP_EncryptUpdate(ctx.get(), out.data(), &len, plaintext.data(),
                            static_cast<int>(plaintext.size())),
          "EncryptUpdate");
    written = len;
  }
  check(EVP_EncryptFinal_ex(ctx.get(), out.data() + written, &len),
        "EncryptFinal");
  written += len;
  check(EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG,
                            static_cast<int>(kGcmTagBytes), out.data() + written),
        "GET_TAG");
  out.resize(static_cast<std::size_t>(written) + kGcmTagBytes);
  return out;
}

std::optional<Bytes> aes256gcm_open(ByteView key, ByteView nonce,
                                    ByteView sealed, ByteView associated_data) {
  if (key.size() != kAesKeyBytes || nonce.size() != kGcmNonceBytes) {
    throw PreconditionError("aes-256-gcm: bad key or nonce length");
  }
  if (sealed.size() < kGcmTagBytes) return std::nullopt;
  const std::size_t body = sealed.size() - kGcmTagBytes;
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw Error("openssl: EVP_CIPHER_CTX_new");
  check(EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(),
                           nonce.data()),
        "DecryptInit");
  int len = 0;
  if (!associated_data.empty()) {
    check(EVP_DecryptUpdate(ctx.get(), nullptr, &len, associated_data.data(),
                            static_cast<int>(associated_data.size())),
          "DecryptUpdate(aad)");
  }
  Bytes out(body);
  int written = 0;
  if (body > 0) {
    check(EVP_DecryptUpdate(ctx.get(), out.data(), &len, sealed.data(),
                            static_cast<int>(body)),
          "DecryptUpdate");
    written = len;
  }
  // EVP_CTRL_GCM_SET_TAG takes a non-const pointer but does not write to it.
  Bytes tag(sealed.begin() + static_cast<std::ptrdiff_t>(body), sealed.end());
  check(EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG,
                            static_cast<int>(kGcmTagBytes), tag.data()),
        "SET_TAG");
  if (EVP_DecryptFinal_ex(ctx.get(), out.data() + written, &len) != 1) {
    return std::nullopt;
  }
  out.resize(static_cast<std::size_t>(written + len));
  return out;
}

std::array<std::uint8_t, kX25519Bytes> x25519_public(ByteView private_key) {
  Pkey key = x25519_private_key(private_key);
  std::array<std::uint8_t, kX25519Bytes> out{};
  std::size_t len = out.size();
  check(EVP_PKEY_get_raw_public_key(key.get(), out.data(), &len),
        "get_raw_public_key");
  return out;
}

std::array<std::uint8_t, kX25519Bytes> x25519_shared(ByteView private_key,
                                                     ByteView peer_public) {
  if (peer_public.size() != kX25519Bytes) {
    throw PreconditionError("x25519 public key must be 32 bytes");
  }
  Pkey key = x25519_private_key(private_key);
  Pkey peer(EVP_PKEY_new_raw_public_key(EVP_PKEY_X25519, nullptr,
                                        peer_public.data(), peer_public.size()));
  if (!peer) throw Error("openssl: EVP_PKEY_new_raw_public_key");
  PkeyCtx ctx(EVP_PKEY_CTX_new(key.get(), nullptr));
  if (!ctx) throw Error("openssl: EVP_PKEY_CTX_new");
  check(EVP_PKEY_derive_init(ctx.get()), "derive_init");
  check(EVP_PKEY_derive_set_peer(ctx.get(), peer.get()), "derive_set_peer");
  std::array<std::uint8_t, kX25519Bytes> out{};
  std::size_t len = out.size();
  // A low-order peer point makes derivation fail; callers treat that as an
  // all-zero secret and rely on the key-confirmation step to reject it.
  if (EVP_PKEY_derive(ctx.get(), out.data(), &len) != 1) out.fill(0);
  return out;
}

}  // namespace qss::crypto
