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

#ifndef QSS_MODMATH_H_
#define QSS_MODMATH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace qss::math {

// Largest modulus accepted. Keeps every product of two residues inside 64 bits.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 1;

// True iff d is an odd prime.
bool is_valid_modulus(std::uint64_t d);

// An odd prime d <= kMaxModulus. Construction validates.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t d);

  std::uint64_t value() const { return d_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint64_t d_;
};

// A residue in Z_d. The value is always kept in [0, d).
class Zd {
 public:
  Zd(std::int64_t value, PrimeModulus modulus);

  std::uint64_t value() const { return value_; }
  PrimeModulus modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Zd operator+(Zd rhs) const;
  Zd operator-(Zd rhs) const;
  Zd operator*(Zd rhs) const;
  Zd operator-() const;
  Zd& operator+=(Zd rhs) { return *this = *this + rhs; }
  Zd& operator*=(Zd rhs) { return *this = *this * rhs; }

  Zd pow(std::uint64_t exponent) const;

  friend bool operator==(Zd, Zd) = default;

 private:
  struct Raw {};
  Zd(Raw, std::uint64_t value, PrimeModulus modulus)
      : value_(value), modulus_(modulus) {}
  void require_same_field(Zd rhs) const;

  std::uint64_t value_;
  PrimeModulus modulus_;
};

std::string to_string(Zd z);

// Multiplicative inverse by extended Euclid. Throws ArithmeticError for zero.
Zd mod_inverse(Zd a);

// prod_{j != i} x_j / (x_j - x_i) mod d, the Lagrange basis weight of x_i for
// interpolation at zero. Throws ArithmeticError on duplicate or zero abscissas.
Zd lagrange_coefficient(std::size_t i, std::span<const Zd> xs);

}  // namespace qss::math

#endif  // QSS_MODMATH_H_
