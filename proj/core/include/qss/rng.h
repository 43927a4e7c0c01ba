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

#ifndef QSS_RNG_H_
#define QSS_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qss {

// SplitMix64 finalizer. Used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);

// Seed for the `stream`-th child of `master`. Stable across platforms.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// Seeded randomness source. Every draw goes through std::mt19937_64 and the
// bounded-integer and real conversions below, so a given seed produces the
// same sequence on every conforming standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform over [0, bound). bound must be nonzero.
  std::uint64_t uniform(std::uint64_t bound);

  // Uniform over [lo, hi] inclusive.
  std::uint64_t uniform_between(std::uint64_t lo, std::uint64_t hi);

  // Uniform double in [0, 1) with 53 bits of precision.
  double unit();

  bool coin() { return (next_u64() >> 63) != 0; }

  void fill(std::span<std::uint8_t> out);
  std::vector<std::uint8_t> bytes(std::size_t n);

  // Independent child stream. Consumes one draw from this stream.
  Rng fork(std::uint64_t tag);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qss

#endif  // QSS_RNG_H_
