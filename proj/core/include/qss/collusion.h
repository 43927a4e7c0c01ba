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

#ifndef QSS_COLLUSION_H_
#define QSS_COLLUSION_H_

#include <cstddef>
#include <cstdint>

#include "qss/adversary.h"
#include "qss/distribution.h"
#include "qss/rng.h"

namespace qss::harness {

struct CollusionConfig {
  std::uint64_t d = 65521;
  std::size_t t = 3;
  unsigned hash_bits = 8;  // 0 = full digest
  protocol::DistributionMode mode = protocol::DistributionMode::bulletin;
  Forger forger = forge_uniform;
};

struct CollusionOutcome {
  bool cheat_succeeded = false;  // players accepted S' != S
  bool detected = false;         // forgery rejected (broker flag or hash mismatch)
  bool neutral = false;          // forgeries cancelled out, S' == S
};

// One forging round without the quantum layer: a fresh polynomial and
// honest measurements drawn from the exact Fourier-GHZ outcome law, then f
// players replace their values. Requires 1 <= f < t.
CollusionOutcome collusion_trial(const CollusionConfig& cfg, std::size_t f, Rng& rng);

}  // namespace qss::harness

#endif  // QSS_COLLUSION_H_
