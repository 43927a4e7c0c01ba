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

#include "qss/secret.h"

#include "qss/crypto.h"
#include "qss/error.h"

namespace qss::secret {

SymmetricPolynomial::SymmetricPolynomial(
    PrimeModulus d, std::vector<std::vector<std::uint64_t>> coeffs)
    : d_(d), t_(coeffs.size()) {
  if (t_ < 2) throw PreconditionError("threshold must be at least 2");
  if (d.value() <= t_) {
    throw PreconditionError("field too small: need d > t (d=" +
                            std::to_string(d.value()) +
                            ", t=" + std::to_string(t_) + ")");
  }
  coeffs_.reserve(t_ * t_);
  for (const auto& row : coeffs) {
    if (row.size() != t_) throw PreconditionError("coefficient matrix must be square");
    for (std::uint64_t a : row) {
      if (a >= d.value()) throw PreconditionError("coefficient out of range");
      coeffs_.push_back(a);
    }
  }
  for (std::size_t i = 0; i < t_; ++i) {
    for (std::size_t j = i + 1; j < t_; ++j) {
      if (coeffs_[i * t_ + j] != coeffs_[j * t_ + i]) {
        throw PreconditionError("coefficient matrix is not symmetric");
      }
    }
  }
}

Zd SymmetricPolynomial::coefficient(std::size_t i, std::size_t j) const {
  return Zd(static_cast<std::int64_t>(coeffs_.at(i * t_ + j)), d_);
}

Zd SymmetricPolynomial::evaluate(Zd x, Zd y) const {
  Zd acc(0, d_);
  Zd xi(1, d_);
  for (std::size_t i = 0; i < t_; ++i) {
    Zd yj(1, d_);
    for (std::size_t j = 0; j < t_; ++j) {
      acc += coefficient(i, j) * xi * yj;
      yj *= y;
    }
    xi *= x;
  }
  return acc;
}

SymmetricPolynomial generate_polynomial(PrimeModulus d, std::size_t t, Zd secret,
                                        Rng& rng) {
  if (t < 2) throw PreconditionError("threshold must be at least 2");
  if (d.value() <= t) {
    throw PreconditionError("field too small: need d > t (d=" +
                            std::to_string(d.value()) +
                            ", t=" + std::to_string(t) + ")");
  }
  if (secret.modulus() != d) throw PreconditionError("secret not in Z_d");
  std::vector<std::vector<std::uint64_t>> a(t, std::vector<std::uint64_t>(t));
  // Upper triangle in row order, mirrored below the diagonal.
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i; j < t; ++j) {
      const std::uint64_t v = (i == 0 && j == 0) ? secret.value() : rng.uniform(d.value());
      a[i][j] = v;
      a[j][i] = v;
    }
  }
  return SymmetricPolynomial(d, std::move(a));
}

Zd UnivariateSlice::evaluate(Zd y) const {
  Zd acc(0, y.modulus());
  Zd yj(1, y.modulus());
  for (Zd c : coeffs) {
    acc += c * yj;
    yj *= y;
  }
  return acc;
}

UnivariateSlice restrict_at(const SymmetricPolynomial& poly, Zd x) {
  if (x.is_zero()) throw PreconditionError("restrict_at: abscissa must be nonzero");
  const std::size_t t = poly.threshold();
  const PrimeModulus d = poly.modulus();
  UnivariateSlice slice{x, std::vector<Zd>(t, Zd(0, d))};
  for (std::size_t j = 0; j < t; ++j) {
    Zd xi(1, d);
    for (std::size_t i = 0; i < t; ++i) {
      slice.coeffs[j] += poly.coefficient(i, j) * xi;
      xi *= x;
    }
  }
  return slice;
}

ShareShadow share_shadow(const UnivariateSlice& slice, std::span<const Zd> xs,
                         std::size_t i, std::string owner) {
  if (xs.size() < 2) {
    throw PreconditionError("share_shadow: at least two players are required");
  }
  if (i >= xs.size() || xs[i] != slice.x) {
    throw PreconditionError("share_shadow: slice abscissa does not match xs[i]");
  }
  return ShareShadow{slice.at_zero() * math::lagrange_coefficient(i, xs),
                     std::move(owner)};
}

Zd reconstruct(std::span<const Zd> measurements, PrimeModulus d) {
  if (measurements.size() < 2) {
    throw PreconditionError("reconstruct: at least two measurements are required");
  }
  Zd sum(0, d);
  for (Zd m : measurements) sum += m;
  return sum;
}

std::string commitment_preimage(Zd secret_value) {
  return "QSS-v1|d=" + std::to_string(secret_value.modulus().value()) +
         "|S=" + std::to_string(secret_value.value());
}

Commitment commit(Zd secret_value, unsigned truncation_bits) {
  if (truncation_bits > 256) {
    throw PreconditionError("truncation_bits must be 0 or in [1, 256]");
  }
  const std::string preimage = commitment_preimage(secret_value);
  const auto full = crypto::sha3_256(to_bytes(preimage));
  Commitment c;
  c.truncation_bits = truncation_bits;
  if (truncation_bits == 0) {
    c.digest.assign(full.begin(), full.end());
    return c;
  }
  const std::size_t nbytes = (truncation_bits + 7) / 8;
  c.digest.assign(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(nbytes));
  const unsigned spare = static_cast<unsigned>(nbytes * 8 - truncation_bits);
  if (spare > 0) {
    c.digest.back() &= static_cast<std::uint8_t>(0xffu << spare);
  }
  return c;
}

}  // namespace qss::secret
