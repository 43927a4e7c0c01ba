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

#include "qss/collusion.h"

#include <set>

#include "qss/error.h"
#include "qss/modmath.h"
#include "qss/qsim.h"
#include "qss/secret.h"

namespace qss::harness {

CollusionOutcome collusion_trial(const CollusionConfig& cfg, std::size_t f, Rng& rng) {
  if (f < 1 || f >= cfg.t) throw PreconditionError("collusion_trial: need 1 <= f < t");
  const math::PrimeModulus d(cfg.d);
  const std::size_t t = cfg.t;
  const math::Zd s(static_cast<std::int64_t>(rng.uniform(cfg.d)), d);
  const secret::SymmetricPolynomial poly = secret::generate_polynomial(d, t, s, rng);

  std::vector<math::Zd> xs;
  std::set<std::uint64_t> used;
  while (xs.size() < t) {
    const std::uint64_t x = rng.uniform(cfg.d - 1) + 1;
    if (used.insert(x).second) xs.emplace_back(static_cast<std::int64_t>(x), d);
  }
  const auto base = qsim::sample_fourier_ghz_outcomes(cfg.d, t, rng);
  std::vector<protocol::Measurement> honest;
  for (std::size_t i = 0; i < t; ++i) {
    const math::Zd shadow =
        secret::share_shadow(secret::restrict_at(poly, xs[i]), xs, i).value;
    honest.push_back({"P" + std::to_string(i + 1), (base[i] + shadow.value()) % cfg.d});
  }

  std::vector<protocol::Measurement> submitted = honest;
  for (std::size_t k = 0; k < f; ++k) {
    submitted[k].value = cfg.forger(honest[k].value, cfg.d, rng);
  }

  CollusionOutcome out;
  if (cfg.mode == protocol::DistributionMode::broker) {
    const auto check = protocol::broker_collect_verify(honest, submitted, s);
    out.detected = !check.cheaters.empty();
    return out;
  }
  std::vector<math::Zd> ms;
  for (const auto& m : submitted) ms.emplace_back(static_cast<std::int64_t>(m.value), d);
  const math::Zd forged = secret::reconstruct(ms, d);
  if (forged == s) {
    out.neutral = true;
    return out;
  }
  const bool collide =
      secret::commit(forged, cfg.hash_bits) == secret::commit(s, cfg.hash_bits);
  out.cheat_succeeded = collide;
  out.detected = !collide;
  return out;
}

}  // namespace qss::harness
