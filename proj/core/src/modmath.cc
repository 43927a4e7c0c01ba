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

#include "qss/modmath.h"

#include "qss/error.h"

namespace qss::math {

bool is_valid_modulus(std::uint64_t d) {
  if (d < 3 || d % 2 == 0) return false;
  for (std::uint64_t f = 3; f * f <= d; f += 2) {
    if (d % f == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t d) : d_(d) {
  if (d > kMaxModulus) {
    throw PreconditionError("modulus " + std::to_string(d) + " exceeds 2^32-1");
  }
  if (!is_valid_modulus(d)) {
    throw PreconditionError("modulus " + std::to_string(d) +
                            " is not an odd prime");
  }
}

Zd::Zd(std::int64_t value, PrimeModulus modulus) : modulus_(modulus) {
  const auto d = static_cast<std::int64_t>(modulus.value());
  std::int64_t r = value % d;
  if (r < 0) r += d;
  value_ = static_cast<std::uint64_t>(r);
}

void Zd::require_same_field(Zd rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw PreconditionError("mixing residues of different moduli");
  }
}

Zd Zd::operator+(Zd rhs) const {
  require_same_field(rhs);
  return Zd(Raw{}, (value_ + rhs.value_) % modulus_.value(), modulus_);
}

Zd Zd::operator-(Zd rhs) const {
  require_same_field(rhs);
  const std::uint64_t d = modulus_.value();
  return Zd(Raw{}, (value_ + d - rhs.value_) % d, modulus_);
}

Zd Zd::operator*(Zd rhs) const {
  require_same_field(rhs);
  return Zd(Raw{}, (value_ * rhs.value_) % modulus_.value(), modulus_);
}

Zd Zd::operator-() const {
  const std::uint64_t d = modulus_.value();
  return Zd(Raw{}, (d - value_) % d, modulus_);
}

Zd Zd::pow(std::uint64_t exponent) const {
  Zd base = *this;
  Zd acc(Raw{}, 1, modulus_);
  while (exponent > 0) {
    if (exponent & 1) acc *= base;
    base *= base;
    exponent >>= 1;
  }
  return acc;
}

std::string to_string(Zd z) {
  return std::to_string(z.value()) + " mod " + std::to_string(z.modulus().value());
}

Zd mod_inverse(Zd a) {
  if (a.is_zero()) {
    throw ArithmeticError("zero has no inverse mod " +
                          std::to_string(a.modulus().value()) +
                          " (degenerate Lagrange denominator)");
  }
  std::int64_t old_r = static_cast<std::int64_t>(a.value());
  std::int64_t r = static_cast<std::int64_t>(a.modulus().value());
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  // old_r == gcd == 1 since d is prime and a != 0.
  return Zd(old_s, a.modulus());
}

Zd lagrange_coefficient(std::size_t i, std::span<const Zd> xs) {
  if (i >= xs.size()) {
    throw PreconditionError("lagrange_coefficient: index out of range");
  }
  const PrimeModulus m = xs[i].modulus();
  Zd numerator(1, m);
  Zd denominator(1, m);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (xs[j].is_zero()) {
      throw ArithmeticError("lagrange_coefficient: zero abscissa");
    }
    if (j == i) continue;
    const Zd diff = xs[j] - xs[i];
    if (diff.is_zero()) {
      throw ArithmeticError("lagrange_coefficient: duplicate abscissa " +
                            std::to_string(xs[j].value()));
    }
    numerator *= xs[j];
    denominator *= diff;
  }
  return numerator * mod_inverse(denominator);
}

}  // namespace qss::math
