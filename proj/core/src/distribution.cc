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

#include "qss/distribution.h"

#include <map>

#include "qss/error.h"

namespace qss::protocol {

std::string_view to_string(DistributionMode mode) {
  return mode == DistributionMode::broker ? "broker" : "bulletin";
}

DistributionMode parse_distribution_mode(std::string_view name) {
  if (name == "broker") return DistributionMode::broker;
  if (name == "bulletin") return DistributionMode::bulletin;
  throw ConfigError("round.mode", "expected broker or bulletin, got '" +
                                      std::string(name) + "'");
}

void BulletinBoard::require_writer(std::string_view author) const {
  if (author != writer_) {
    throw PreconditionError("bulletin board: only '" + writer_ + "' may post");
  }
}

void BulletinBoard::post_commitment(std::string_view author,
                                    const secret::Commitment& c) {
  require_writer(author);
  if (commitment()) throw PreconditionError("bulletin board: commitment already posted");
  entries_.push_back({std::string(author), {}, 0, c});
}

void BulletinBoard::post_measurement(std::string_view author, std::string pseudonym,
                                     std::uint64_t value) {
  require_writer(author);
  entries_.push_back({std::string(author), std::move(pseudonym), value, std::nullopt});
}

std::optional<secret::Commitment> BulletinBoard::commitment() const {
  for (const BoardEntry& e : entries_) {
    if (e.commitment) return e.commitment;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> BulletinBoard::measurements() const {
  std::vector<std::uint64_t> out;
  for (const BoardEntry& e : entries_) {
    if (!e.commitment) out.push_back(e.value);
  }
  return out;
}

BrokerCheck broker_collect_verify(std::span<const Measurement> retained,
                                  std::span<const Measurement> submitted,
                                  math::Zd expected_secret) {
  const math::PrimeModulus d = expected_secret.modulus();
  std::map<std::string, std::uint64_t> got;
  for (const Measurement& m : submitted) got.emplace(m.player_id, m.value);

  BrokerCheck check;
  math::Zd sum(0, d);
  for (const Measurement& truth : retained) {
    auto it = got.find(truth.player_id);
    if (it == got.end()) {
      check.missing.push_back(truth.player_id);
      continue;
    }
    sum += math::Zd(static_cast<std::int64_t>(it->second % d.value()), d);
    if (it->second != truth.value) check.cheaters.push_back(truth.player_id);
  }
  check.sum_ok = check.missing.empty() && sum == expected_secret;
  return check;
}

void bulletin_publish(BulletinBoard& board, std::span<const Measurement> measurements,
                      std::span<const std::string> pseudonyms,
                      const secret::Commitment& commitment) {
  if (pseudonyms.size() != measurements.size()) {
    throw PreconditionError("bulletin_publish: one pseudonym per measurement");
  }
  board.post_commitment(board.writer(), commitment);
  for (std::size_t i = 0; i < measurements.size(); ++i) {
    board.post_measurement(board.writer(), pseudonyms[i], measurements[i].value);
  }
}

Finalization player_finalize(const BulletinBoard& board, math::PrimeModulus d) {
  const auto c = board.commitment();
  if (!c) throw PreconditionError("player_finalize: no commitment on the board");
  std::vector<math::Zd> ms;
  for (std::uint64_t v : board.measurements()) {
    ms.emplace_back(static_cast<std::int64_t>(v % d.value()), d);
  }
  const math::Zd s = secret::reconstruct(ms, d);
  return {s, secret::commit(s, c->truncation_bits) == *c};
}

}  // namespace qss::protocol
