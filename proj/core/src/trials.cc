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

#include "qss/trials.h"

#include <algorithm>
#include <sstream>
#include <thread>
#include <vector>

#include "json_support.h"
#include "qss/report.h"

namespace qss::harness {
namespace {

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

void TrialMetrics::add(const protocol::RoundReport& r) {
  ++trials;
  switch (r.verdict) {
    case protocol::Verdict::success: ++successes; break;
    case protocol::Verdict::cheat_detected: ++cheat_detected; break;
    case protocol::Verdict::cheat_succeeded: ++cheat_succeeded; break;
    case protocol::Verdict::abort: ++aborts[std::string(to_string(r.reason))]; break;
  }
  const auto& a = r.attacker;
  if (a.kind != "none" && a.kind != "trojan") {
    ++attacked;
    if (a.detected || r.verdict == protocol::Verdict::cheat_detected) ++attack_detected;
  }
  intercepted_streams += a.intercepted_streams;
  all_guessed_streams += a.all_guessed_streams;
  escaped_streams += a.escaped_streams;
  decoys_checked += r.decoys_checked;
  decoy_mismatches += r.decoy_mismatches;
  restarts += r.restarts;
  replaced_players += r.replaced.size();
  if (!a.replay_status.empty()) {
    ++replays;
    if (a.replay_status != "ok") ++replays_rejected;
  }
  extractions += r.extractions;
  exact_extractions += r.exact_extractions;
  grover_iterations += r.grover_iterations;
}

void TrialMetrics::merge(const TrialMetrics& o) {
  trials += o.trials;
  successes += o.successes;
  cheat_detected += o.cheat_detected;
  cheat_succeeded += o.cheat_succeeded;
  for (const auto& [k, v] : o.aborts) aborts[k] += v;
  attacked += o.attacked;
  attack_detected += o.attack_detected;
  intercepted_streams += o.intercepted_streams;
  all_guessed_streams += o.all_guessed_streams;
  escaped_streams += o.escaped_streams;
  decoys_checked += o.decoys_checked;
  decoy_mismatches += o.decoy_mismatches;
  restarts += o.restarts;
  replaced_players += o.replaced_players;
  replays += o.replays;
  replays_rejected += o.replays_rejected;
  extractions += o.extractions;
  exact_extractions += o.exact_extractions;
  grover_iterations += o.grover_iterations;
}

std::uint64_t TrialMetrics::total_aborts() const {
  std::uint64_t n = 0;
  for (const auto& [k, v] : aborts) n += v;
  return n;
}

bool TrialMetrics::conserved() const {
  return successes + total_aborts() + cheat_detected + cheat_succeeded == trials;
}

double TrialMetrics::success_rate() const { return ratio(successes, trials); }
double TrialMetrics::detection_rate() const { return ratio(attack_detected, attacked); }
double TrialMetrics::all_guess_rate() const {
  return ratio(all_guessed_streams, intercepted_streams);
}
double TrialMetrics::escape_rate() const {
  return ratio(escaped_streams, intercepted_streams);
}
double TrialMetrics::cheat_success_rate() const { return ratio(cheat_succeeded, trials); }
double TrialMetrics::decoy_error_rate() const {
  return ratio(decoy_mismatches, decoys_checked);
}
double TrialMetrics::exact_min_rate() const {
  return ratio(exact_extractions, extractions);
}
double TrialMetrics::replay_rejection_rate() const {
  return ratio(replays_rejected, replays);
}

protocol::RoundReport run_scenario_round(const Scenario& scenario, std::uint64_t seed) {
  Rng rng(seed);
  protocol::RoundConfig cfg = scenario.round;
  cfg.seed = seed;
  net::QuantumNetwork network = scenario.build_network(rng);
  const protocol::Deployment dep =
      protocol::Deployment::provision(std::move(network), cfg, rng);
  return protocol::run_round(cfg, dep, scenario.adversary, rng);
}

TrialMetrics run_trials(const Scenario& scenario, const TrialOptions& options) {
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, options.trials)));

  std::vector<TrialMetrics> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < options.trials; i += threads) {
        partial[w].add(run_scenario_round(scenario, derive_seed(options.master_seed, i)));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (std::thread& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  TrialMetrics total;
  for (const TrialMetrics& m : partial) total.merge(m);
  return total;
}

std::string metrics_json(const TrialMetrics& m, const Scenario& scenario,
                         const TrialOptions& options, int indent) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = std::string(protocol::kReportSchema);
  j["kind"] = "trials";
  j["master_seed"] = options.master_seed;
  j["trials"] = m.trials;
  j["config"] = protocol::config_json(scenario.round);
  j["adversary"] = std::string(to_string(scenario.adversary.kind));
  j["network"] = scenario.has_network ? "configured" : "random";

  ordered_json counts;
  counts["successes"] = m.successes;
  counts["cheat_detected"] = m.cheat_detected;
  counts["cheat_succeeded"] = m.cheat_succeeded;
  counts["aborts"] = m.total_aborts();
  counts["attacked"] = m.attacked;
  counts["attack_detected"] = m.attack_detected;
  counts["intercepted_streams"] = m.intercepted_streams;
  counts["all_guessed_streams"] = m.all_guessed_streams;
  counts["escaped_streams"] = m.escaped_streams;
  counts["decoys_checked"] = m.decoys_checked;
  counts["decoy_mismatches"] = m.decoy_mismatches;
  counts["restarts"] = m.restarts;
  counts["replaced_players"] = m.replaced_players;
  counts["replays"] = m.replays;
  counts["replays_rejected"] = m.replays_rejected;
  counts["extractions"] = m.extractions;
  counts["exact_extractions"] = m.exact_extractions;
  counts["grover_iterations"] = m.grover_iterations;
  j["counts"] = counts;

  ordered_json aborts = ordered_json::object();
  for (const auto& [k, v] : m.aborts) aborts[k] = v;
  j["aborts"] = aborts;

  ordered_json rates;
  rates["success"] = m.success_rate();
  rates["attack_detection"] = m.detection_rate();
  rates["all_guess"] = m.all_guess_rate();
  rates["escape"] = m.escape_rate();
  rates["cheat_success"] = m.cheat_success_rate();
  rates["decoy_error"] = m.decoy_error_rate();
  rates["exact_min"] = m.exact_min_rate();
  rates["replay_rejection"] = m.replay_rejection_rate();
  j["rates"] = rates;
  j["conserved"] = m.conserved();
  return j.dump(indent) + "\n";
}

std::string metrics_csv(const TrialMetrics& m) {
  std::ostringstream out;
  out.precision(17);
  out << "metric,value\n";
  auto row = [&](const std::string& k, auto v) { out << k << ',' << v << '\n'; };
  row("trials", m.trials);
  row("successes", m.successes);
  row("cheat_detected", m.cheat_detected);
  row("cheat_succeeded", m.cheat_succeeded);
  for (const auto& [k, v] : m.aborts) row("abort_" + k, v);
  row("attacked", m.attacked);
  row("attack_detected", m.attack_detected);
  row("intercepted_streams", m.intercepted_streams);
  row("all_guessed_streams", m.all_guessed_streams);
  row("escaped_streams", m.escaped_streams);
  row("decoys_checked", m.decoys_checked);
  row("decoy_mismatches", m.decoy_mismatches);
  row("restarts", m.restarts);
  row("replaced_players", m.replaced_players);
  row("replays", m.replays);
  row("replays_rejected", m.replays_rejected);
  row("extractions", m.extractions);
  row("exact_extractions", m.exact_extractions);
  row("grover_iterations", m.grover_iterations);
  row("success_rate", m.success_rate());
  row("attack_detection_rate", m.detection_rate());
  row("all_guess_rate", m.all_guess_rate());
  row("escape_rate", m.escape_rate());
  row("cheat_success_rate", m.cheat_success_rate());
  row("decoy_error_rate", m.decoy_error_rate());
  row("exact_min_rate", m.exact_min_rate());
  row("replay_rejection_rate", m.replay_rejection_rate());
  return out.str();
}

}  // namespace qss::harness
