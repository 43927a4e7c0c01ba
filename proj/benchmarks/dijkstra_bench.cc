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

#include "benchmark/benchmark.h"
#include "qss/netgraph.h"

namespace {

void BM_QuantumDijkstra(benchmark::State& state, qss::net::SearchMode mode) {
  qss::Rng rng(1);
  const auto net = qss::net::random_network(state.range(0), 0.5, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qss::net::quantum_dijkstra(net, "D", mode, rng));
  }
  state.SetComplexityN(state.range(0));
}

void BM_SelectPlayers(benchmark::State& state) {
  qss::Rng rng(2);
  const auto net = qss::net::random_network(state.range(0), 0.5, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qss::net::select_players(net, "D", 3, qss::net::SearchMode::simulated, rng));
  }
}

BENCHMARK_CAPTURE(BM_QuantumDijkstra, ideal, qss::net::SearchMode::ideal)
    ->RangeMultiplier(2)->Range(8, 128)->Complexity();
BENCHMARK_CAPTURE(BM_QuantumDijkstra, simulated, qss::net::SearchMode::simulated)
    ->RangeMultiplier(2)->Range(8, 128)->Complexity();
BENCHMARK(BM_SelectPlayers)->Arg(16)->Arg(64);

}  // namespace
