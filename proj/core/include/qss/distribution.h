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

#ifndef QSS_DISTRIBUTION_H_
#define QSS_DISTRIBUTION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qss/modmath.h"
#include "qss/secret.h"

namespace qss::protocol {

enum class DistributionMode { broker, bulletin };

std::string_view to_string(DistributionMode mode);
// Throws ConfigError("round.mode") on anything but "broker" or "bulletin".
DistributionMode parse_distribution_mode(std::string_view name);

struct Measurement {
  std::string player_id;
  std::uint64_t value = 0;

  friend bool operator==(const Measurement&, const Measurement&) = default;
};

struct BoardEntry {
  std::string author;
  std::string pseudonym;  // empty for the commitment entry
  std::uint64_t value = 0;
  std::optional<secret::Commitment> commitment;
};

// Append-only board. Only the configured writer may post; everyone may read.
class BulletinBoard {
 public:
  explicit BulletinBoard(std::string writer) : writer_(std::move(writer)) {}

  const std::string& writer() const { return writer_; }

  // Throws PreconditionError for a foreign author or a second commitment.
  void post_commitment(std::string_view author, const secret::Commitment& c);
  void post_measurement(std::string_view author, std::string pseudonym,
                        std::uint64_t value);

  const std::vector<BoardEntry>& entries() const { return entries_; }
  std::optional<secret::Commitment> commitment() const;
  std::vector<std::uint64_t> measurements() const;

 private:
  void require_writer(std::string_view author) const;

  std::string writer_;
  std::vector<BoardEntry> entries_;
};

struct BrokerCheck {
  bool sum_ok = false;  // submitted sum equals the expected secret
  std::vector<std::string> cheaters;
  std::vector<std::string> missing;

  bool clean() const { return sum_ok && cheaters.empty() && missing.empty(); }
};

// The dealer holds the simulator's retained post-measurement record, so a
// forged value is attributed to its sender by direct comparison.
BrokerCheck broker_collect_verify(std::span<const Measurement> retained,
                                  std::span<const Measurement> submitted,
                                  math::Zd expected_secret);

// Posts the commitment and then each measurement under its pseudonym.
void bulletin_publish(BulletinBoard& board, std::span<const Measurement> measurements,
                      std::span<const std::string> pseudonyms,
                      const secret::Commitment& commitment);

struct Finalization {
  math::Zd secret;
  bool hash_ok = false;
};

// A player's view: S = sum of posted measurements mod d, checked against the
// posted commitment at its truncation. Throws PreconditionError if the board
// carries no commitment or fewer than two measurements.
Finalization player_finalize(const BulletinBoard& board, math::PrimeModulus d);

struct Fine {
  std::string player_id;
  std::uint64_t round_id = 0;
  std::string reason;
};

// Penalty records for the fairness-with-penalties variant.
class FineLedger {
 public:
  void record(Fine fine) { fines_.push_back(std::move(fine)); }
  const std::vector<Fine>& fines() const { return fines_; }

 private:
  std::vector<Fine> fines_;
};

}  // namespace qss::protocol

#endif  // QSS_DISTRIBUTION_H_
