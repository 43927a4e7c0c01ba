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

#include "qss/grover.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qss/error.h"

namespace qss::net {
namespace {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

void check_counts(std::uint64_t n, std::uint64_t marked) {
  if (n == 0) throw PreconditionError("search space must be non-empty");
  if (marked > n) throw PreconditionError("marked count exceeds search space");
}

}  // namespace

double grover_rotation(std::uint64_t n, std::uint64_t marked,
                       std::uint64_t iterations, double phase) {
  check_counts(n, marked);
  if (marked == 0) return 0.0;
  const double theta = std::asin(std::sqrt(static_cast<double>(marked) / n));
  // Basis: (unmarked component, marked component).
  const std::array<double, 2> s = {std::cos(theta), std::sin(theta)};
  const Complex e = std::polar(1.0, phase);
  const Mat2 oracle = {1.0, 0.0, 0.0, e};
  const Mat2 reflect = {1.0 + (e - 1.0) * s[0] * s[0], (e - 1.0) * s[0] * s[1],
                        (e - 1.0) * s[1] * s[0], 1.0 + (e - 1.0) * s[1] * s[1]};
  Mat2 g = mul(reflect, oracle);
  for (Complex& c : g) c = -c;

  Complex u = s[0];
  Complex m = s[1];
  for (std::uint64_t k = 0; k < iterations; ++k) {
    const Complex nu = g[0] * u + g[1] * m;
    const Complex nm = g[2] * u + g[3] * m;
    u = nu;
    m = nm;
  }
  return std::norm(m);
}

std::uint64_t phase_matched_iterations(std::uint64_t n, std::uint64_t marked) {
  check_counts(n, marked);
  if (marked == 0) throw PreconditionError("phase matching needs a marked element");
  if (marked == n) return 0;
  const double amp = std::sqrt(static_cast<double>(marked) / n);
  const double beta = std::asin(amp);
  auto ok = [&](std::uint64_t k) {
    return std::sin(std::numbers::pi / (4.0 * k + 2.0)) <= amp;
  };
  auto k = static_cast<std::uint64_t>(
      std::max(0.0, std::ceil((std::numbers::pi / beta - 2.0) / 4.0)));
  while (!ok(k)) ++k;
  while (k > 0 && ok(k - 1)) --k;
  return k;
}

double phase_matched_angle(std::uint64_t n, std::uint64_t marked,
                           std::uint64_t iterations) {
  if (iterations < phase_matched_iterations(n, marked)) {
    throw PreconditionError("phase matching impossible below " +
                            std::to_string(phase_matched_iterations(n, marked)) +
                            " iterations");
  }
  const double amp = std::sqrt(static_cast<double>(marked) / n);
  const double x = std::sin(std::numbers::pi / (4.0 * iterations + 2.0)) / amp;
  return 2.0 * std::asin(std::min(1.0, x));
}

double grover_long(std::uint64_t n, std::uint64_t marked, std::uint64_t iterations,
                   PhaseMode mode) {
  check_counts(n, marked);
  if (mode == PhaseMode::standard) {
    return grover_rotation(n, marked, iterations, std::numbers::pi);
  }
  return grover_rotation(n, marked, iterations,
                         phase_matched_angle(n, marked, iterations));
}

SearchOutcome oqmsa_min(std::span<const double> values, Rng& rng, SearchMode mode) {
  const std::size_t n = values.size();
  if (n == 0) throw PreconditionError("oqmsa_min: empty input");
  for (double v : values) {
    if (std::isnan(v)) throw PreconditionError("oqmsa_min: NaN in input");
  }
  auto less = [&](std::size_t a, std::size_t b) {
    return values[a] < values[b] || (values[a] == values[b] && a < b);
  };

  SearchOutcome out;
  out.mode = mode;
  if (mode == SearchMode::ideal || n == 1) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (less(i, best)) best = i;
    }
    out.index = best;
    return out;
  }

  const double root_n = std::sqrt(static_cast<double>(n));
  const double a1 = std::asin(1.0 / root_n);
  const auto single_run_iterations =
      static_cast<std::uint64_t>(std::ceil((std::numbers::pi / 2.0 - a1) / a1));
  const auto stage_limit = std::max<std::uint64_t>(1, std::bit_width(n - 1));

  std::size_t threshold = rng.uniform(n);
  std::vector<std::size_t> marked;
  marked.reserve(n);
  std::uint64_t failures = 0;
  while (failures < stage_limit) {
    marked.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (less(i, threshold)) marked.push_back(i);
    }
    const std::uint64_t m = marked.size();

    // One measurement after `k` iterations that succeed with probability p.
    auto attempt = [&](std::uint64_t k, double p) {
      out.iterations_used += k;
      ++out.measurements;
      return m > 0 && rng.unit() < p;
    };

    bool improved = false;
    if (m * 9 > n) {
      for (double bound = 1.0; bound <= root_n; bound *= kIterationGrowth) {
        const std::uint64_t k =
            rng.uniform_between(0, static_cast<std::uint64_t>(std::ceil(bound)));
        if (attempt(k, grover_long(n, m, k, PhaseMode::standard))) {
          improved = true;
          break;
        }
      }
    } else {
      std::uint64_t k = single_run_iterations;
      double p = 0.0;
      if (m > 0) {
        k = std::max(k, phase_matched_iterations(n, m));
        p = grover_long(n, m, k, PhaseMode::phase_matched);
      }
      improved = attempt(k, p);
    }

    if (improved) {
      threshold = marked[rng.uniform(m)];
      failures = 0;
    } else {
      ++failures;
    }
  }
  out.index = threshold;
  return out;
}

}  // namespace qss::net
