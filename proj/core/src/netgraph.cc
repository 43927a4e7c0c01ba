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

#include "qss/netgraph.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qss/error.h"

namespace qss::net {
namespace {

int score_for(const LookupTableSet& tables, const std::string& parameter,
              double value) {
  const LookupTable* table = tables.find(parameter);
  if (table == nullptr) {
    throw ConfigError("lookup." + parameter, "no lookup table for channel parameter");
  }
  auto score = table->match(value);
  if (!score) {
    throw ConfigError("lookup." + parameter,
                      "value " + std::to_string(value) + " matches no row");
  }
  return *score;
}

}  // namespace

double beta_score(const ChannelParams& channel, const LookupTableSet& tables) {
  double beta = score_for(tables, "epsilon", channel.epsilon);
  for (const auto& [name, value] : channel.extra) {
    beta += score_for(tables, name, value);
  }
  return beta;
}

double edge_weight(double alpha, double beta, double kappa) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) {
    throw PreconditionError("kappa must lie in [0, 1]");
  }
  if (!(alpha > kAlphaFloor)) return kUnusable;
  return kappa / alpha + (1.0 - kappa) * beta;
}

double edge_weight(const EdgeParams& params, double kappa,
                   const LookupTableSet& tables) {
  return edge_weight(params.alpha, beta_score(params.channel, tables), kappa);
}

QuantumNetwork::QuantumNetwork(double kappa, LookupTableSet tables)
    : tables_(std::move(tables)) {
  set_kappa(kappa);
}

void QuantumNetwork::set_kappa(double kappa) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) {
    throw PreconditionError("kappa must lie in [0, 1]");
  }
  kappa_ = kappa;
}

std::size_t QuantumNetwork::add_node(const NodeId& id) {
  if (id.empty()) throw PreconditionError("node id must be non-empty");
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  const std::size_t i = nodes_.size();
  nodes_.push_back(id);
  index_.emplace(id, i);
  available_.push_back(true);
  incident_.emplace_back();
  return i;
}

void QuantumNetwork::add_edge(const NodeId& u, const NodeId& v, EdgeParams params) {
  if (u == v) throw PreconditionError("self-loop on " + u);
  if (!(params.alpha >= 0.0 && params.alpha <= 1.0)) {
    throw PreconditionError("alpha must lie in [0, 1]");
  }
  if (!(params.channel.epsilon > 0.0 && params.channel.epsilon < 1.0)) {
    throw PreconditionError("epsilon must lie in (0, 1)");
  }
  const std::size_t a = add_node(u);
  const std::size_t b = add_node(v);
  const std::size_t e = edges_.size();
  edges_.push_back(Edge{a, b, std::move(params)});
  incident_[a].push_back(e);
  incident_[b].push_back(e);
}

void QuantumNetwork::remove_edges_of(const NodeId& id) {
  const std::size_t target = index_of(id);
  std::vector<Edge> kept;
  for (Edge& e : edges_) {
    if (e.u != target && e.v != target) kept.push_back(std::move(e));
  }
  edges_ = std::move(kept);
  for (auto& list : incident_) list.clear();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    incident_[edges_[e].u].push_back(e);
    incident_[edges_[e].v].push_back(e);
  }
}

void QuantumNetwork::set_available(const NodeId& id, bool available) {
  available_[index_of(id)] = available;
}

std::optional<std::size_t> QuantumNetwork::find(const NodeId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t QuantumNetwork::index_of(const NodeId& id) const {
  auto i = find(id);
  if (!i) throw PreconditionError("unknown node '" + id + "'");
  return *i;
}

std::vector<double> QuantumNetwork::edge_costs() const {
  std::vector<double> costs;
  costs.reserve(edges_.size());
  for (const Edge& e : edges_) costs.push_back(edge_weight(e.params, kappa_, tables_));
  return costs;
}

std::vector<std::size_t> DijkstraResult::path_to(std::size_t target) const {
  if (target >= dist.size() || std::isinf(dist[target])) return {};
  std::vector<std::size_t> path{target};
  while (prev[path.back()]) path.push_back(*prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::size_t DijkstraResult::hops_to(std::size_t target) const {
  const auto path = path_to(target);
  return path.empty() ? 0 : path.size() - 1;
}

DijkstraResult quantum_dijkstra(const QuantumNetwork& net, const NodeId& source,
                                SearchMode mode, Rng& rng) {
  const std::size_t src = net.index_of(source);
  const std::size_t n = net.size();
  const std::vector<double> cost = net.edge_costs();

  DijkstraResult r;
  r.dist.assign(n, kUnusable);
  r.prev.assign(n, std::nullopt);
  r.dist[src] = 0.0;

  std::vector<std::size_t> queue(n);
  for (std::size_t i = 0; i < n; ++i) queue[i] = i;
  std::vector<double> tentative;
  while (!queue.empty()) {
    tentative.clear();
    for (std::size_t v : queue) tentative.push_back(r.dist[v]);
    const SearchOutcome pick = oqmsa_min(tentative, rng, mode);
    r.grover_iterations += pick.iterations_used;
    ++r.extractions;
    const double true_min = *std::min_element(tentative.begin(), tentative.end());
    if (tentative[pick.index] == true_min) ++r.exact_extractions;

    const std::size_t u = queue[pick.index];
    queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(pick.index));
    if (std::isinf(r.dist[u]) || (!net.available(u) && u != src)) continue;

    for (std::size_t e : net.incident(u)) {
      const Edge& edge = net.edges()[e];
      const std::size_t v = edge.u == u ? edge.v : edge.u;
      if (!net.available(v)) continue;
      const double candidate = r.dist[u] + cost[e];
      if (candidate < r.dist[v]) {
        r.dist[v] = candidate;
        r.prev[v] = u;
      }
    }
  }
  return r;
}

PlayerSelection select_players(const QuantumNetwork& net, const NodeId& dealer,
                               std::size_t t, SearchMode mode, Rng& rng) {
  PlayerSelection sel;
  sel.routes = quantum_dijkstra(net, dealer, mode, rng);
  const std::size_t d = net.index_of(dealer);

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (i == d || !net.available(i) || std::isinf(sel.routes.dist[i])) continue;
    candidates.push_back(i);
  }
  if (candidates.size() < t) {
    throw SelectionError("only " + std::to_string(candidates.size()) +
                         " players reachable from " + dealer + ", need " +
                         std::to_string(t));
  }
  std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    if (sel.routes.dist[a] != sel.routes.dist[b]) {
      return sel.routes.dist[a] < sel.routes.dist[b];
    }
    return net.node(a) < net.node(b);
  });
  candidates.resize(t);
  for (std::size_t i : candidates) {
    sel.players.push_back(net.node(i));
    sel.costs.push_back(sel.routes.dist[i]);
    sel.hops.push_back(sel.routes.hops_to(i));
  }
  return sel;
}

QuantumNetwork random_network(std::size_t players, double kappa, Rng& rng) {
  QuantumNetwork net(kappa);
  std::vector<NodeId> ids{"D"};
  net.add_node("D");
  for (std::size_t i = 1; i <= players; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "P%02zu", i);
    ids.emplace_back(buf);
    net.add_node(ids.back());
  }
  static constexpr double kEpsilons[] = {1e-2, 1e-6, 1e-10};
  auto random_edge = [&] {
    EdgeParams p;
    p.alpha = 0.3 + 0.7 * rng.unit();
    p.channel.epsilon = kEpsilons[rng.uniform(3)];
    p.channel.n_uses = 1e5;
    return p;
  };
  for (std::size_t i = 1; i < ids.size(); ++i) {
    net.add_edge(ids[i], ids[rng.uniform(i)], random_edge());
  }
  const std::size_t chords = ids.size() / 2;
  for (std::size_t c = 0; c < chords; ++c) {
    const std::size_t a = rng.uniform(ids.size());
    const std::size_t b = rng.uniform(ids.size());
    if (a != b) net.add_edge(ids[a], ids[b], random_edge());
  }
  return net;
}

}  // namespace qss::net
