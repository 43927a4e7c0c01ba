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
#include <map>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "qss/error.h"

namespace qss::qsim {
namespace {

constexpr double kTol = 1e-12;

double binomial_sigma(double n, double p) { return std::sqrt(n * p * (1 - p)); }

TEST(GhzTest, Qubits) {
  const QuditRegister g = ghz(2, 3);
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < 8; ++i) {
    const double want = (i == 0 || i == 7) ? h : 0.0;
    EXPECT_NEAR(std::abs(g.amplitudes()[i] - Complex(want, 0)), 0.0, kTol) << i;
  }
}

TEST(GhzTest, Qutrits) {
  const QuditRegister g = ghz(3, 2);
  const double h = 1.0 / std::sqrt(3.0);
  for (std::size_t i = 0; i < 9; ++i) {
    const double want = (i == 0 || i == 4 || i == 8) ? h : 0.0;
    EXPECT_NEAR(g.amplitudes()[i].real(), want, kTol);
  }
}

TEST(GhzTest, UnitNorm) {
  for (std::uint32_t d : {2u, 3u, 5u, 7u, 11u}) {
    for (std::size_t t : {2u, 3u, 4u}) {
      EXPECT_NEAR(ghz(d, t).norm_squared(), 1.0, 1e-12);
    }
  }
}

TEST(GhzTest, CapacityBound) {
  EXPECT_THROW(ghz(2, 21), CapacityError);
  EXPECT_NO_THROW(ghz(2, 20));
  EXPECT_THROW(QuditRegister(65521, 2), CapacityError);
}

TEST(RegisterTest, DigitOrderIsMostSignificantFirst) {
  const QuditRegister r(3, 3);
  const std::vector<std::uint32_t> digits{1, 0, 2};
  EXPECT_EQ(r.index_of(digits), 11u);
  EXPECT_EQ(r.digits_of(11), digits);
}

TEST(PauliTest, QubitReductions) {
  const SingleQuditUnitary x = generalized_pauli(1, 0, 2);
  EXPECT_NEAR(std::abs(x.at(0, 1) - Complex(1, 0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(x.at(1, 0) - Complex(1, 0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(x.at(0, 0)), 0.0, kTol);
  const SingleQuditUnitary z = generalized_pauli(0, 1, 2);
  EXPECT_NEAR(std::abs(z.at(0, 0) - Complex(1, 0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(z.at(1, 1) - Complex(-1, 0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(z.at(0, 1)), 0.0, kTol);
}

TEST(PauliTest, ProductWithAdjointIsIdentity) {
  const SingleQuditUnitary u = generalized_pauli(1, 1, 3);
  const SingleQuditUnitary p = u * u.adjoint();
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_NEAR(std::abs(p.at(r, c) - Complex(r == c ? 1.0 : 0.0, 0)), 0.0, 1e-9);
    }
  }
}

TEST(PauliTest, RejectsNonUnitary) {
  EXPECT_THROW(SingleQuditUnitary(2, {1, 1, 0, 1}), PreconditionError);
  EXPECT_THROW(generalized_pauli(3, 0, 3), PreconditionError);
}

TEST(FourierTest, MatrixEntries) {
  const std::uint32_t d = 5;
  const SingleQuditUnitary f = fourier(d);
  const double pi = std::acos(-1.0);
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t v = 0; v < d; ++v) {
      const Complex want = std::polar(1.0 / std::sqrt(5.0), 2 * pi * double(v * l) / d);
      EXPECT_NEAR(std::abs(f.at(l, v) - want), 0.0, 1e-12);
    }
  }
  EXPECT_LT(f.unitarity_error(), 1e-12);
}

TEST(ApplySingleTest, ShiftAction) {
  QuditRegister r(3, 2);
  r = apply_single(std::move(r), 0, generalized_pauli(1, 0, 3));
  EXPECT_NEAR(std::abs(r.amplitudes()[3] - Complex(1, 0)), 0.0, kTol);
  EXPECT_NEAR(r.norm_squared(), 1.0, kTol);
}

TEST(ApplySingleTest, IdentityKeepsState) {
  const QuditRegister g = ghz(5, 3);
  const QuditRegister h = apply_single(g, 1, generalized_pauli(0, 0, 5));
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(std::abs(g.amplitudes()[i] - h.amplitudes()[i]), 0.0, kTol);
  }
}

TEST(ApplySingleTest, DimensionMismatch) {
  EXPECT_THROW(apply_single(ghz(3, 2), 0, generalized_pauli(1, 0, 5)), PreconditionError);
  EXPECT_THROW(apply_single(ghz(3, 2), 2, generalized_pauli(1, 0, 3)), PreconditionError);
}

TEST(QftTest, HadamardPairFixedPoint) {
  const QuditRegister q = qft_all(ghz(2, 2));
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(q.amplitudes()[0] - Complex(h, 0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(q.amplitudes()[3] - Complex(h, 0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(q.amplitudes()[1]), 0.0, kTol);
  EXPECT_NEAR(std::abs(q.amplitudes()[2]), 0.0, kTol);
}

TEST(QftTest, QutritSupport) {
  const auto p = qft_all(ghz(3, 2)).probabilities();
  for (std::size_t i = 0; i < 9; ++i) {
    const bool in = (i == 0 || i == 5 || i == 7);  // 00, 12, 21
    EXPECT_NEAR(p[i], in ? 1.0 / 3.0 : 0.0, 1e-12) << i;
  }
}

// Exhaustive support law: sum of digits == 0 mod d, each with d^-(t-1).
TEST(QftTest, SupportLawExhaustive) {
  for (std::uint32_t d : {2u, 3u, 5u, 7u}) {
    for (std::size_t t : {2u, 3u, 4u}) {
      const QuditRegister q = qft_all(ghz(d, t));
      const double uniform = std::pow(double(d), -double(t - 1));
      const auto p = q.probabilities();
      for (std::size_t i = 0; i < q.size(); ++i) {
        const auto digits = q.digits_of(i);
        const std::uint64_t sum = std::accumulate(digits.begin(), digits.end(), 0ull);
        EXPECT_NEAR(p[i], sum % d == 0 ? uniform : 0.0, 1e-12);
      }
      EXPECT_NEAR(q.norm_squared(), 1.0, 1e-9);
    }
  }
}

TEST(QftTest, TwiceGivesNegatedGhz) {
  const auto p = qft_all(qft_all(ghz(5, 3))).probabilities();
  const QuditRegister shape(5, 3);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto digits = shape.digits_of(i);
    const bool diag = digits[0] == digits[1] && digits[1] == digits[2];
    EXPECT_NEAR(p[i], diag ? 0.2 : 0.0, 1e-12);
  }
}

TEST(MeasureTest, GhzOutcomesAreDiagonal) {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    QuditRegister g = ghz(3, 2);
    const auto m = measure_all(g, rng);
    EXPECT_EQ(m[0], m[1]);
  }
}

TEST(MeasureTest, FourierGhzSumsToZero) {
  Rng rng(4);
  for (std::uint32_t d : {3u, 5u, 7u}) {
    for (std::size_t t : {2u, 3u, 4u}) {
      for (int i = 0; i < 50; ++i) {
        QuditRegister q = qft_all(ghz(d, t));
        const auto m = measure_all(q, rng);
        EXPECT_EQ(std::accumulate(m.begin(), m.end(), 0u) % d, 0u);
      }
    }
  }
}

TEST(MeasureTest, EmbeddingShiftsTheSum) {
  Rng rng(5);
  const std::uint32_t d = 7;
  const std::vector<std::uint32_t> shifts{3, 6, 2};
  for (int i = 0; i < 200; ++i) {
    QuditRegister q = qft_all(ghz(d, 3));
    for (std::size_t k = 0; k < 3; ++k) {
      q = apply_single(std::move(q), k, generalized_pauli(shifts[k], 0, d));
    }
    const auto m = measure_all(q, rng);
    EXPECT_EQ((m[0] + m[1] + m[2]) % d, (3u + 6u + 2u) % d);
  }
}

TEST(MeasureTest, SameSeedSameOutcomes) {
  Rng a(8);
  Rng b(8);
  for (int i = 0; i < 20; ++i) {
    QuditRegister x = qft_all(ghz(5, 3));
    QuditRegister y = qft_all(ghz(5, 3));
    EXPECT_EQ(measure_all(x, a), measure_all(y, b));
  }
}

TEST(MeasureTest, PartialMeasurementCollapsesGhz) {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    QuditRegister g = ghz(5, 3);
    const std::uint32_t v = measure_qudit(g, 1, rng);
    EXPECT_NEAR(g.norm_squared(), 1.0, 1e-12);
    const std::vector<std::uint32_t> digits{v, v, v};
    EXPECT_NEAR(std::norm(g.amplitude(digits)), 1.0, 1e-12);
  }
}

TEST(SamplerTest, MatchesStateVectorLaw) {
  Rng rng(10);
  const std::uint64_t d = 3;
  const std::size_t t = 3;
  std::map<std::vector<std::uint32_t>, int> counts;
  const int n = 90000;
  for (int i = 0; i < n; ++i) {
    const auto m = sample_fourier_ghz_outcomes(d, t, rng);
    ASSERT_EQ(std::accumulate(m.begin(), m.end(), 0u) % d, 0u);
    ++counts[m];
  }
  ASSERT_EQ(counts.size(), 9u);  // d^(t-1) admissible strings
  const double p = 1.0 / 9.0;
  for (const auto& [k, c] : counts) {
    EXPECT_NEAR(c, n * p, 4 * binomial_sigma(n, p));
  }
}

TEST(SamplerTest, LargeDimension) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto m = sample_fourier_ghz_outcomes(65521, 4, rng);
    std::uint64_t s = 0;
    for (auto v : m) s += v;
    EXPECT_EQ(s % 65521, 0u);
  }
}

TEST(DecoyTest, SameBasisIsDeterministic) {
  Rng rng(12);
  const DecoyParticle plus{Basis::diagonal, 0};
  const DecoyParticle one{Basis::computational, 1};
  for (int i = 0; i < 1000; ++i) {
    EXPECT_EQ(measure_decoy(plus, Basis::diagonal, rng), 0);
    EXPECT_EQ(measure_decoy(one, Basis::computational, rng), 1);
  }
}

TEST(DecoyTest, ConjugateBasisIsFair) {
  Rng rng(13);
  const DecoyParticle zero{Basis::computational, 0};
  const int n = 100000;
  int ones = 0;
  for (int i = 0; i < n; ++i) ones += measure_decoy(zero, Basis::diagonal, rng);
  EXPECT_NEAR(ones, n * 0.5, 3 * binomial_sigma(n, 0.5));
}

TEST(DecoyTest, PreparationIsUniform) {
  Rng rng(14);
  const int n = 100000;
  std::map<std::pair<int, int>, int> counts;
  for (int i = 0; i < n; ++i) {
    const DecoyParticle p = prepare_decoy(rng);
    ++counts[{static_cast<int>(p.basis), p.value}];
  }
  ASSERT_EQ(counts.size(), 4u);
  for (const auto& [k, c] : counts) {
    EXPECT_NEAR(c, n * 0.25, 3 * binomial_sigma(n, 0.25));
  }
}

}  // namespace
}  // namespace qss::qsim
