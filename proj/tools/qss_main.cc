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

// qss: command-line front end for the secret-sharing simulator.
//
//   qss run     [--config F] [--seed S] [--mode M] [--out F] [--format json|csv]
//   qss trials  [--config F] [--seed S] [--trials N] [--threads K] ...
//   qss attack  <kind> [--config F] [--seed S] [--trials N] ...
//   qss graph   [--config F] [--seed S] [--out F] [--format json|csv]

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qss/error.h"
#include "qss/netgraph.h"
#include "qss/report.h"
#include "qss/round.h"
#include "qss/scenario.h"
#include "qss/trials.h"

namespace {

using qss::harness::Scenario;

struct CommonFlags {
  std::string config;
  std::uint64_t seed = 1;
  std::string mode;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "Scenario file");
  cmd->add_option("--seed", f.seed, "Master seed");
  cmd->add_option("--mode", f.mode, "Distribution mode")
      ->check(CLI::IsMember({"broker", "bulletin"}));
  cmd->add_option("--out", f.out, "Output file (default: stdout)");
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

Scenario load(const CommonFlags& f) {
  Scenario s = f.config.empty() ? qss::harness::parse_scenario("")
                                : qss::harness::load_scenario(f.config);
  if (!f.mode.empty()) s.round.mode = qss::protocol::parse_distribution_mode(f.mode);
  s.round.seed = f.seed;
  return s;
}

void emit(const CommonFlags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream o(f.out, std::ios::binary);
  if (!o) throw qss::ConfigError("out", "cannot write '" + f.out + "'");
  o << text;
}

std::string round_csv(const qss::protocol::RoundReport& r) {
  std::ostringstream out;
  out << "player,pseudonym,cost,hops,swaps,abscissa,shadow,measurement,forged,"
         "reconstructed,hash_ok\n";
  for (const auto& p : r.players) {
    out << p.id << ',' << p.pseudonym << ',' << p.cost << ',' << p.hops << ','
        << p.swaps << ',' << p.abscissa << ',' << p.shadow << ','
        << (p.measurement ? std::to_string(*p.measurement) : "") << ','
        << (p.forged ? "true" : "false") << ','
        << (p.reconstructed ? std::to_string(*p.reconstructed) : "") << ','
        << (p.hash_ok ? (*p.hash_ok ? "true" : "false") : "") << '\n';
  }
  out << "# verdict," << qss::protocol::to_string(r.verdict) << ','
      << qss::protocol::to_string(r.reason) << '\n';
  return out.str();
}

std::string graph_dump(const Scenario& s, std::uint64_t seed, const std::string& format) {
  qss::Rng rng(seed);
  const qss::net::QuantumNetwork g = s.build_network(rng);
  const qss::net::PlayerSelection sel =
      qss::net::select_players(g, s.round.dealer, s.round.t, s.round.search, rng);
  const auto& routes = sel.routes;
  const auto is_selected = [&](const std::string& id) {
    return std::find(sel.players.begin(), sel.players.end(), id) != sel.players.end();
  };

  if (format == "csv") {
    std::ostringstream out;
    out.precision(17);
    out << "node,dist,hops,prev,selected\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
      out << g.node(i) << ',' << routes.dist[i] << ',' << routes.hops_to(i) << ','
          << (routes.prev[i] ? g.node(*routes.prev[i]) : "") << ','
          << (is_selected(g.node(i)) ? "true" : "false") << '\n';
    }
    out << "\nu,v,alpha,epsilon,beta,cost\n";
    for (const auto& e : g.edges()) {
      out << g.node(e.u) << ',' << g.node(e.v) << ',' << e.params.alpha << ','
          << e.params.channel.epsilon << ','
          << qss::net::beta_score(e.params.channel, g.tables()) << ','
          << qss::net::edge_weight(e.params, g.kappa(), g.tables()) << '\n';
    }
    return out.str();
  }

  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = std::string(qss::protocol::kReportSchema);
  j["kind"] = "graph";
  j["seed"] = seed;
  j["kappa"] = g.kappa();
  j["dealer"] = s.round.dealer;
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges()) {
    const double cost = qss::net::edge_weight(e.params, g.kappa(), g.tables());
    ordered_json ej;
    ej["u"] = g.node(e.u);
    ej["v"] = g.node(e.v);
    ej["alpha"] = e.params.alpha;
    ej["epsilon"] = e.params.channel.epsilon;
    ej["beta"] = qss::net::beta_score(e.params.channel, g.tables());
    ej["cost"] = std::isinf(cost) ? ordered_json("unusable") : ordered_json(cost);
    edges.push_back(ej);
  }
  j["edges"] = edges;
  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    ordered_json nj;
    nj["id"] = g.node(i);
    nj["dist"] = std::isinf(routes.dist[i]) ? ordered_json(nullptr)
                                            : ordered_json(routes.dist[i]);
    nj["hops"] = routes.hops_to(i);
    nj["prev"] = routes.prev[i] ? ordered_json(g.node(*routes.prev[i]))
                                : ordered_json(nullptr);
    nj["selected"] = is_selected(g.node(i));
    nodes.push_back(nj);
  }
  j["nodes"] = nodes;
  j["selection"] = sel.players;
  j["grover_iterations"] = routes.grover_iterations;
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold quantum secret sharing simulator"};
  app.require_subcommand(1);

  CommonFlags run_f;
  CLI::App* run = app.add_subcommand("run", "Run one round and print its report");
  add_common(run, run_f);

  CommonFlags trials_f;
  std::size_t trials_n = 1000;
  unsigned threads = 0;
  CLI::App* trials = app.add_subcommand("trials", "Monte Carlo over seeded rounds");
  add_common(trials, trials_f);
  trials->add_option("--trials", trials_n, "Number of rounds");
  trials->add_option("--threads", threads, "Worker threads (0 = all cores)");

  CommonFlags attack_f;
  std::string attack_kind;
  std::size_t attack_n = 1000;
  CLI::App* attack = app.add_subcommand("attack", "Trials under a named adversary");
  attack->add_option("kind", attack_kind, "Adversary kind")->required();
  add_common(attack, attack_f);
  attack->add_option("--trials", attack_n, "Number of rounds");
  attack->add_option("--threads", threads, "Worker threads (0 = all cores)");

  CommonFlags graph_f;
  CLI::App* graph = app.add_subcommand("graph", "Dump edge costs and selection");
  add_common(graph, graph_f);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const Scenario s = load(run_f);
      const auto report = qss::harness::run_scenario_round(s, run_f.seed);
      emit(run_f, run_f.format == "csv" ? round_csv(report)
                                        : qss::protocol::report_json(report));
    } else if (*trials || *attack) {
      CommonFlags& f = *trials ? trials_f : attack_f;
      Scenario s = load(f);
      if (*attack) s.adversary.kind = qss::harness::parse_adversary_kind(attack_kind);
      s.adversary.validate(s.round.t);
      qss::harness::TrialOptions opt;
      opt.master_seed = f.seed;
      opt.trials = *trials ? trials_n : attack_n;
      opt.threads = threads;
      const auto m = qss::harness::run_trials(s, opt);
      emit(f, f.format == "csv" ? qss::harness::metrics_csv(m)
                                : qss::harness::metrics_json(m, s, opt));
    } else if (*graph) {
      const Scenario s = load(graph_f);
      emit(graph_f, graph_dump(s, graph_f.seed, graph_f.format));
    }
  } catch (const qss::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const qss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
