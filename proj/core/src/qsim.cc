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

#include "qss/qsim.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qss/error.h"

namespace qss::qsim {
namespace {

std::size_t checked_size(std::uint32_t d, std::size_t t) {
  if (d < 2) throw PreconditionError("qudit dimension must be at least 2");
  if (t < 1) throw PreconditionError("register needs at least one qudit");
  std::size_t n = 1;
  for (std::size_t k = 0; k < t; ++k) {
    if (n > kMaxAmplitudes / d) {
      throw CapacityError("d^t exceeds the simulator bound of 2^20 amplitudes (d=" +
                          std::to_string(d) + ", t=" + std::to_string(t) + ")");
    }
    n *= d;
  }
  return n;
}

std::size_t stride_of(const QuditRegister& reg, std::size_t qudit) {
  std::size_t stride = 1;
  for (std::size_t k = qudit + 1; k < reg.qudits(); ++k) stride *= reg.dimension();
  return stride;
}

}  // namespace

QuditRegister::QuditRegister(std::uint32_t d, std::size_t t)
    : d_(d), t_(t), amps_(checked_size(d, t)) {
  amps_[0] = 1.0;
}

std::size_t QuditRegister::index_of(std::span<const std::uint32_t> digits) const {
  if (digits.size() != t_) throw PreconditionError("digit string has wrong length");
  std::size_t index = 0;
  for (std::uint32_t v : digits) {
    if (v >= d_) throw PreconditionError("digit out of range");
    index = index * d_ + v;
  }
  return index;
}

std::vector<std::uint32_t> QuditRegister::digits_of(std::size_t index) const {
  std::vector<std::uint32_t> digits(t_);
  for (std::size_t k = t_; k-- > 0;) {
    digits[k] = static_cast<std::uint32_t>(index % d_);
    index /= d_;
  }
  return digits;
}

double QuditRegister::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return s;
}

std::vector<double> QuditRegister::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

SingleQuditUnitary::SingleQuditUnitary(std::uint32_t d, std::vector<Complex> matrix)
    : d_(d), m_(std::move(matrix)) {
  if (m_.size() != std::size_t{d} * d) {
    throw PreconditionError("unitary matrix has wrong size");
  }
  if (unitarity_error() > kNormTolerance) {
    throw PreconditionError("matrix is not unitary within 1e-9");
  }
}

SingleQuditUnitary SingleQuditUnitary::adjoint() const {
  std::vector<Complex> out(m_.size());
  for (std::size_t r = 0; r < d_; ++r) {
    for (std::size_t c = 0; c < d_; ++c) out[c * d_ + r] = std::conj(m_[r * d_ + c]);
  }
  return SingleQuditUnitary(Unchecked{}, d_, std::move(out));
}

SingleQuditUnitary SingleQuditUnitary::operator*(const SingleQuditUnitary& rhs) const {
  if (rhs.d_ != d_) throw PreconditionError("dimension mismatch in product");
  std::vector<Complex> out(m_.size());
  for (std::size_t r = 0; r < d_; ++r) {
    for (std::size_t c = 0; c < d_; ++c) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < d_; ++k) s += m_[r * d_ + k] * rhs.m_[k * d_ + c];
      out[r * d_ + c] = s;
    }
  }
  return SingleQuditUnitary(Unchecked{}, d_, std::move(out));
}

double SingleQuditUnitary::unitarity_error() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < d_; ++r) {
    for (std::size_t c = 0; c < d_; ++c) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < d_; ++k) s += m_[r * d_ + k] * std::conj(m_[c * d_ + k]);
      worst = std::max(worst, std::abs(s - Complex(r == c ? 1.0 : 0.0)));
    }
  }
  return worst;
}

Complex root_of_unity(std::uint32_t d, std::uint64_t k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % d) / d;
  return {std::cos(angle), std::sin(angle)};
}

QuditRegister ghz(std::uint32_t d, std::size_t t) {
  if (t < 2) throw PreconditionError("GHZ state needs at least two qudits");
  QuditRegister reg(d, t);
  auto amps = reg.mutable_amplitudes();
  amps[0] = 0.0;
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<std::uint32_t> digits(t);
  for (std::uint32_t v = 0; v < d; ++v) {
    std::fill(digits.begin(), digits.end(), v);
    amps[reg.index_of(digits)] = a;
  }
  return reg;
}

SingleQuditUnitary generalized_pauli(std::uint32_t a, std::uint32_t b,
                                     std::uint32_t d) {
  if (d < 2 || a >= d || b >= d) {
    throw PreconditionError("generalized_pauli: need 0 <= a, b < d");
  }
  std::vector<Complex> m(std::size_t{d} * d, 0.0);
  for (std::uint32_t y = 0; y < d; ++y) {
    m[((y + a) % d) * d + y] = root_of_unity(d, std::uint64_t{b} * y);
  }
  return SingleQuditUnitary(d, std::move(m));
}

SingleQuditUnitary fourier(std::uint32_t d) {
  if (d < 2) throw PreconditionError("fourier: d must be at least 2");
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Complex> m(std::size_t{d} * d);
  for (std::uint32_t l = 0; l < d; ++l) {
    for (std::uint32_t v = 0; v < d; ++v) {
      m[std::size_t{l} * d + v] = s * root_of_unity(d, std::uint64_t{v} * l);
    }
  }
  return SingleQuditUnitary(d, std::move(m));
}

QuditRegister apply_single(QuditRegister reg, std::size_t qudit,
                           const SingleQuditUnitary& u) {
  if (qudit >= reg.qudits()) throw PreconditionError("qudit index out of range");
  const std::uint32_t d = reg.dimension();
  if (u.dimension() != d) {
    throw PreconditionError("unitary dimension " + std::to_string(u.dimension()) +
                            " does not match register dimension " +
                            std::to_string(d));
  }
  const std::size_t stride = stride_of(reg, qudit);
  const std::size_t block = stride * d;
  auto amps = reg.mutable_amplitudes();
  std::vector<Complex> in(d);
  for (std::size_t base = 0; base < amps.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      for (std::uint32_t k = 0; k < d; ++k) in[k] = amps[base + off + k * stride];
      for (std::uint32_t r = 0; r < d; ++r) {
        Complex s = 0.0;
        for (std::uint32_t k = 0; k < d; ++k) s += u.at(r, k) * in[k];
        amps[base + off + r * stride] = s;
      }
    }
  }
  return reg;
}

QuditRegister qft_all(QuditRegister reg) {
  const SingleQuditUnitary f = fourier(reg.dimension());
  for (std::size_t q = 0; q < reg.qudits(); ++q) reg = apply_single(std::move(reg), q, f);
  return reg;
}

std::vector<std::uint32_t> measure_all(QuditRegister& reg, Rng& rng) {
  auto amps = reg.mutable_amplitudes();
  const double total = reg.norm_squared();
  double target = rng.unit() * total;
  std::size_t chosen = amps.size() - 1;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    chosen = i;
    if (target < p) break;
    target -= p;
  }
  for (Complex& a : amps) a = 0.0;
  amps[chosen] = 1.0;
  return reg.digits_of(chosen);
}

std::uint32_t measure_qudit(QuditRegister& reg, std::size_t qudit, Rng& rng) {
  if (qudit >= reg.qudits()) throw PreconditionError("qudit index out of range");
  const std::uint32_t d = reg.dimension();
  const std::size_t stride = stride_of(reg, qudit);
  auto amps = reg.mutable_amplitudes();
  std::vector<double> marginal(d, 0.0);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    marginal[(i / stride) % d] += std::norm(amps[i]);
  }
  double total = 0.0;
  for (double p : marginal) total += p;
  double target = rng.unit() * total;
  std::uint32_t outcome = d - 1;
  for (std::uint32_t v = 0; v < d; ++v) {
    if (marginal[v] == 0.0) continue;
    outcome = v;
    if (target < marginal[v]) break;
    target -= marginal[v];
  }
  const double scale = 1.0 / std::sqrt(marginal[outcome]);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i / stride) % d == outcome) {
      amps[i] *= scale;
    } else {
      amps[i] = 0.0;
    }
  }
  return outcome;
}

std::vector<std::uint32_t> sample_fourier_ghz_outcomes(std::uint64_t d,
                                                       std::size_t t, Rng& rng) {
  if (d < 2 || t < 2) throw PreconditionError("need d >= 2 and t >= 2");
  std::vector<std::uint32_t> l(t);
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k + 1 < t; ++k) {
    l[k] = static_cast<std::uint32_t>(rng.uniform(d));
    sum = (sum + l[k]) % d;
  }
  l[t - 1] = static_cast<std::uint32_t>((d - sum) % d);
  return l;
}

DecoyParticle prepare_decoy(Rng& rng) {
  const std::uint64_t r = rng.uniform(4);
  return DecoyParticle{(r & 2) ? Basis::diagonal : Basis::computational,
                       static_cast<std::uint8_t>(r & 1)};
}

std::uint8_t measure_decoy(const DecoyParticle& particle, Basis basis, Rng& rng) {
  if (particle.basis == basis) return particle.value;
  return rng.coin() ? 1 : 0;
}

}  // namespace qss::qsim
