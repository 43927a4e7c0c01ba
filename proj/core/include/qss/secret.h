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

#ifndef QSS_SECRET_H_
#define QSS_SECRET_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qss/bytes.h"
#include "qss/modmath.h"
#include "qss/rng.h"

namespace qss::secret {

using math::PrimeModulus;
using math::Zd;

// G(x, y) = sum_{i,j < t} a_ij x^i y^j over Z_d with a_ij = a_ji. The secret
// is a_00.
class SymmetricPolynomial {
 public:
  // Validates shape (t x t, t >= 2), symmetry, and d > t.
  SymmetricPolynomial(PrimeModulus d, std::vector<std::vector<std::uint64_t>> coeffs);

  PrimeModulus modulus() const { return d_; }
  std::size_t threshold() const { return t_; }
  Zd coefficient(std::size_t i, std::size_t j) const;
  Zd secret() const { return coefficient(0, 0); }
  Zd evaluate(Zd x, Zd y) const;

 private:
  PrimeModulus d_;
  std::size_t t_;
  std::vector<std::uint64_t> coeffs_;  // row-major t x t
};

SymmetricPolynomial generate_polynomial(PrimeModulus d, std::size_t t, Zd secret,
                                        Rng& rng);

// G(x_i, y) as coefficients in y.
struct UnivariateSlice {
  Zd x;
  std::vector<Zd> coeffs;

  Zd evaluate(Zd y) const;
  Zd at_zero() const { return coeffs.front(); }
};

UnivariateSlice restrict_at(const SymmetricPolynomial& poly, Zd x);

struct ShareShadow {
  Zd value;
  std::string owner;
};

// S_i = G(x_i, 0) * prod_{j != i} x_j / (x_j - x_i) mod d. Requires at least
// two abscissas and xs[i] == slice.x.
ShareShadow share_shadow(const UnivariateSlice& slice, std::span<const Zd> xs,
                         std::size_t i, std::string owner = {});

// (sum of measurements) mod d. Requires at least two entries.
Zd reconstruct(std::span<const Zd> measurements, PrimeModulus d);

struct Commitment {
  Bytes digest;
  unsigned truncation_bits = 0;  // 0 keeps the full 256-bit digest

  friend bool operator==(const Commitment&, const Commitment&) = default;
};

// "QSS-v1|d=<d>|S=<S>", the exact bytes that are hashed.
std::string commitment_preimage(Zd secret_value);

// SHA3-256 of the canonical preimage, truncated to the leading
// truncation_bits when nonzero. truncation_bits must be 0 or in [1, 256].
Commitment commit(Zd secret_value, unsigned truncation_bits);

}  // namespace qss::secret

#endif  // QSS_SECRET_H_
