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

#ifndef QSS_NETGRAPH_H_
#define QSS_NETGRAPH_H_

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qss/grover.h"
#include "qss/lookup.h"
#include "qss/rng.h"

namespace qss::net {

using NodeId = std::string;

inline constexpr double kUnusable = std::numeric_limits<double>::infinity();
// Links at or below this swap-success probability cost kUnusable.
inline constexpr double kAlphaFloor = 1e-6;

struct ChannelParams {
  double epsilon = 1e-6;  // decoding error probability, in (0, 1)
  // Descriptive columns, not scored unless a table is configured for them.
  std::optional<double> n_uses;
  std::optional<double> q_rate;
  // Further scored parameters (e.g. "pmd", "pdl"); each needs a table.
  std::map<std::string, double> extra;
};

struct EdgeParams {
  double alpha = 1.0;  // entanglement-swap success probability
  ChannelParams channel;
};

// Sum over scored channel parameters (epsilon plus `extra`) of the matched
// table scores. Throws ConfigError for a parameter with no table or a value
// outside every row.
double beta_score(const ChannelParams& channel, const LookupTableSet& tables);

// kappa / alpha + (1 - kappa) * beta, or kUnusable when alpha <= kAlphaFloor.
double edge_weight(double alpha, double beta, double kappa);
double edge_weight(const EdgeParams& params, double kappa,
                   const LookupTableSet& tables);

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  EdgeParams params;
};

// Undirected weighted graph of the dealer and players.
class QuantumNetwork {
 public:
  explicit QuantumNetwork(double kappa = 0.5,
                          LookupTableSet tables = LookupTableSet::with_defaults());

  std::size_t add_node(const NodeId& id);
  void add_edge(const NodeId& u, const NodeId& v, EdgeParams params);

  // Denial of service: drops every link touching `id`.
  void remove_edges_of(const NodeId& id);
  void set_available(const NodeId& id, bool available);

  void set_kappa(double kappa);
  double kappa() const { return kappa_; }
  const LookupTableSet& tables() const { return tables_; }
  void set_tables(LookupTableSet tables) { tables_ = std::move(tables); }

  std::size_t size() const { return nodes_.size(); }
  const NodeId& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  std::optional<std::size_t> find(const NodeId& id) const;
  std::size_t index_of(const NodeId& id) const;  // throws PreconditionError
  bool available(std::size_t i) const { return available_.at(i); }

  const std::vector<Edge>& edges() const { return edges_; }
  // Edge indices incident to node i, in insertion order.
  const std::vector<std::size_t>& incident(std::size_t i) const {
    return incident_.at(i);
  }

  // C for every edge, in edges() order.
  std::vector<double> edge_costs() const;

 private:
  double kappa_;
  LookupTableSet tables_;
  std::vector<NodeId> nodes_;
  std::unordered_map<NodeId, std::size_t> index_;
  std::vector<bool> available_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

struct DijkstraResult {
  std::vector<double> dist;  // kUnusable when unreachable
  std::vector<std::optional<std::size_t>> prev;
  std::uint64_t grover_iterations = 0;
  std::uint64_t extractions = 0;
  std::uint64_t exact_extractions = 0;  // extract-min picked the true minimum

  // Node indices from the source to `target`; empty when unreachable.
  std::vector<std::size_t> path_to(std::size_t target) const;
  std::size_t hops_to(std::size_t target) const;
};

// Dijkstra from `source` whose extract-min over unvisited tentative distances
// is oqmsa_min. Unavailable nodes are never entered.
DijkstraResult quantum_dijkstra(const QuantumNetwork& net, const NodeId& source,
                                SearchMode mode, Rng& rng);

struct PlayerSelection {
  std::vector<NodeId> players;  // ascending (dist, id)
  std::vector<double> costs;
  std::vector<std::size_t> hops;
  DijkstraResult routes;
};

// The t reachable, available non-dealer nodes with the smallest distance, ties
// broken by node identifier. Throws SelectionError when fewer are reachable.
PlayerSelection select_players(const QuantumNetwork& net, const NodeId& dealer,
                               std::size_t t, SearchMode mode, Rng& rng);

// Seeded connected topology: dealer "D" plus players "P01".."Pnn". A random
// spanning tree guarantees connectivity; extra chords are added on top.
QuantumNetwork random_network(std::size_t players, double kappa, Rng& rng);

}  // namespace qss::net

#endif  // QSS_NETGRAPH_H_
