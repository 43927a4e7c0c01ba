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

#ifndef QSS_QSIM_H_
#define QSS_QSIM_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qss/rng.h"

namespace qss::qsim {

using Complex = std::complex<double>;

// Desk-scale bound on d^t.
inline constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 20;
inline constexpr double kNormTolerance = 1e-9;

// Dense state of t qudits of dimension d. Basis index = sum_k l_k d^(t-1-k),
// so qudit 0 is the most significant digit: |l_0 l_1 ... l_{t-1}>.
class QuditRegister {
 public:
  // |0...0>. Throws CapacityError when d^t exceeds kMaxAmplitudes.
  QuditRegister(std::uint32_t d, std::size_t t);

  std::uint32_t dimension() const { return d_; }
  std::size_t qudits() const { return t_; }
  std::size_t size() const { return amps_.size(); }

  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> mutable_amplitudes() { return amps_; }

  std::size_t index_of(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits_of(std::size_t index) const;

  Complex amplitude(std::span<const std::uint32_t> digits) const {
    return amps_[index_of(digits)];
  }

  double norm_squared() const;
  std::vector<double> probabilities() const;

 private:
  std::uint32_t d_;
  std::size_t t_;
  std::vector<Complex> amps_;
};

// d x d matrix, row-major. Construction checks U U^dagger = I.
class SingleQuditUnitary {
 public:
  SingleQuditUnitary(std::uint32_t d, std::vector<Complex> matrix);

  std::uint32_t dimension() const { return d_; }
  Complex at(std::size_t row, std::size_t col) const { return m_[row * d_ + col]; }

  SingleQuditUnitary adjoint() const;
  SingleQuditUnitary operator*(const SingleQuditUnitary& rhs) const;

  // max |(U U^dagger - I)_{rc}|
  double unitarity_error() const;

 private:
  struct Unchecked {};
  SingleQuditUnitary(Unchecked, std::uint32_t d, std::vector<Complex> matrix)
      : d_(d), m_(std::move(matrix)) {}

  std::uint32_t d_;
  std::vector<Complex> m_;
};

// omega^k with omega = exp(2 pi i / d); k is reduced mod d first.
Complex root_of_unity(std::uint32_t d, std::uint64_t k);

// (1/sqrt d) sum_v |v>^(x t)
QuditRegister ghz(std::uint32_t d, std::size_t t);

// U_{a,b} = sum_y omega^(b y) |y + a mod d><y|
SingleQuditUnitary generalized_pauli(std::uint32_t a, std::uint32_t b,
                                     std::uint32_t d);

// |v> -> (1/sqrt d) sum_l omega^(v l) |l>
SingleQuditUnitary fourier(std::uint32_t d);

QuditRegister apply_single(QuditRegister reg, std::size_t qudit,
                           const SingleQuditUnitary& u);

// Applies fourier(d) to every qudit.
QuditRegister qft_all(QuditRegister reg);

// Samples from |amplitude|^2 and collapses the register onto the outcome.
std::vector<std::uint32_t> measure_all(QuditRegister& reg, Rng& rng);

// Projective measurement of one qudit; the rest of the register is
// renormalized onto the observed branch.
std::uint32_t measure_qudit(QuditRegister& reg, std::size_t qudit, Rng& rng);

// Draws from the exact outcome law of measure_all(qft_all(ghz(d, t))):
// uniform over strings with sum == 0 mod d. No state vector is built, so d^t
// may exceed kMaxAmplitudes.
std::vector<std::uint32_t> sample_fourier_ghz_outcomes(std::uint64_t d,
                                                       std::size_t t, Rng& rng);

enum class Basis : std::uint8_t { computational = 0, diagonal = 1 };

// One of |0>, |1> (computational, value 0/1) or |+>, |-> (diagonal, 0/1).
struct DecoyParticle {
  Basis basis = Basis::computational;
  std::uint8_t value = 0;

  friend bool operator==(const DecoyParticle&, const DecoyParticle&) = default;
};

DecoyParticle prepare_decoy(Rng& rng);

// Same basis returns the prepared value; the conjugate basis returns a fair bit.
std::uint8_t measure_decoy(const DecoyParticle& particle, Basis basis, Rng& rng);

}  // namespace qss::qsim

#endif  // QSS_QSIM_H_
