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

// Acceptance run. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "qss/collusion.h"
#include "qss/error.h"
#include "qss/grover.h"
#include "qss/lookup.h"
#include "qss/modmath.h"
#include "qss/netgraph.h"
#include "qss/particle_stream.h"
#include "qss/qsim.h"
#include "qss/registration.h"
#include "qss/report.h"
#include "qss/round.h"
#include "qss/scenario.h"
#include "qss/secret.h"
#include "qss/trials.h"

#ifndef QSS_SCENARIO_DIR
#define QSS_SCENARIO_DIR "scenarios"
#endif

namespace {

using namespace qss;

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("%s C%02d %-28s %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double sigma(double p, double n) { return std::sqrt(p * (1 - p) / n); }

// ---------------------------------------------------------------------------

void c01_rounds() {
  using protocol::RoundConfig;
  const auto start = std::chrono::steady_clock::now();
  std::size_t rounds = 0, ok = 0, infeasible_rejected = 0, infeasible = 0;
  for (std::uint64_t d : {3, 5, 7, 11}) {
    for (std::size_t t : {2, 3, 4}) {
      RoundConfig cfg;
      cfg.d = d;
      cfg.t = t;
      cfg.n = t + 3;
      if (d <= t) {
        ++infeasible;
        try {
          cfg.validate();
        } catch (const ConfigError& e) {
          if (std::string(e.what()).find("field too small") != std::string::npos) {
            ++infeasible_rejected;
          }
        }
        continue;
      }
      Rng setup(derive_seed(1000 + d, t));
      const auto dep = protocol::Deployment::provision(
          net::random_network(cfg.n, cfg.kappa, setup), cfg, setup);
      for (int i = 0; i < 1000; ++i) {
        Rng rng(derive_seed(d * 100 + t, i));
        const protocol::RoundReport r = protocol::run_round(cfg, dep, {}, rng);
        ++rounds;
        bool good = r.verdict == protocol::Verdict::success && r.players.size() == t;
        for (const auto& p : r.players) good = good && p.reconstructed == r.secret;
        ok += good;
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(1, "honest_rounds", ok == rounds && secs < 120.0 && infeasible_rejected == infeasible,
         fmt("%zu/%zu reconstructed in %.1fs (limit 120s); %zu/%zu pairs with d <= t "
             "rejected as field too small",
             ok, rounds, secs, infeasible_rejected, infeasible));
}

void c02_fourier_ghz() {
  double worst = 0.0;
  std::size_t states = 0;
  for (auto [d, t] : std::vector<std::pair<std::uint32_t, std::size_t>>{
           {2, 2}, {3, 2}, {3, 3}, {5, 2}, {5, 3}, {5, 4}, {7, 3}, {7, 4}, {11, 3}, {13, 4}}) {
    const qsim::QuditRegister reg = qsim::qft_all(qsim::ghz(d, t));
    const double expect = std::pow(double(d), -double(t - 1));
    for (std::size_t i = 0; i < reg.size(); ++i) {
      const auto digits = reg.digits_of(i);
      std::uint64_t sum = 0;
      for (auto x : digits) sum += x;
      const double p = std::norm(reg.amplitudes()[i]);
      worst = std::max(worst, std::abs(p - (sum % d == 0 ? expect : 0.0)));
    }
    ++states;
  }
  // The sampled backend must draw from the same law.
  Rng rng(2);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto m = qsim::sample_fourier_ghz_outcomes(65521, 5, rng);
    std::uint64_t s = 0;
    for (auto x : m) s += x;
    bad += s % 65521 != 0;
  }
  report(2, "fourier_ghz_support", worst < 1e-12 && bad == 0,
         fmt("max |P - law| = %.2e over %zu registers (tol 1e-12); %zu/10000 sampled "
             "strings off the support",
             worst, states, bad));
}

void c03_lagrange() {
  static constexpr std::uint64_t kPrimes[] = {5, 7, 11, 13, 101, 65521, 2147483647};
  Rng rng(3);
  std::size_t ok = 0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const std::uint64_t p = kPrimes[rng.uniform(std::size(kPrimes))];
    const math::PrimeModulus d(p);
    const std::size_t t = 2 + rng.uniform(std::min<std::uint64_t>(p - 2, 6));
    const math::Zd s(static_cast<std::int64_t>(rng.uniform(p)), d);
    const auto poly = secret::generate_polynomial(d, t, s, rng);
    std::vector<math::Zd> xs;
    while (xs.size() < t) {
      const math::Zd x(static_cast<std::int64_t>(1 + rng.uniform(p - 1)), d);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    math::Zd total(0, d);
    for (std::size_t k = 0; k < t; ++k) {
      total += secret::share_shadow(secret::restrict_at(poly, xs[k]), xs, k).value;
    }
    ok += total == s;
  }
  report(3, "lagrange_identity", ok == draws, fmt("%zu/%d draws sum to the secret", ok, draws));
}

void c04_lookup() {
  const net::LookupTable t = net::default_epsilon_table();
  const bool pass = t.match(1e-2) == 3 && t.match(1e-6) == 4 && t.match(1e-10) == 5;
  report(4, "epsilon_lookup", pass,
         fmt("1e-2 -> %d, 1e-6 -> %d, 1e-10 -> %d (expected 3, 4, 5)", t.match(1e-2).value_or(-1),
             t.match(1e-6).value_or(-1), t.match(1e-10).value_or(-1)));
}

void c05_weights() {
  net::LookupTableSet tables = net::LookupTableSet::with_defaults();
  tables.put(net::LookupTable("pmd", {{0.0, 0.5, 1}, {0.5, 1.0, 2}}));
  Rng rng(5);
  std::size_t ok = 0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    net::EdgeParams e;
    e.alpha = rng.unit() < 0.05 ? 1e-7 * rng.unit() : rng.unit();
    e.channel.epsilon = std::pow(10.0, -12.0 * rng.unit() - 0.01);
    const bool with_pmd = rng.coin();
    double pmd = rng.unit();
    if (with_pmd) e.channel.extra["pmd"] = pmd;
    const double kappa = rng.unit();

    const double lg = std::log10(e.channel.epsilon);
    double beta = lg >= -4 ? 3 : lg >= -8 ? 4 : 5;
    if (with_pmd) beta += pmd < 0.5 ? 1 : 2;
    const double expect = e.alpha <= 1e-6 ? INFINITY : kappa / e.alpha + (1 - kappa) * beta;
    const double got = net::edge_weight(e, kappa, tables);
    ok += std::isinf(expect) ? std::isinf(got) : std::abs(got - expect) <= 1e-12 * expect;
  }
  report(5, "edge_weight", ok == draws, fmt("%zu/%d random draws match", ok, draws));
}

std::pair<std::vector<double>, std::vector<long>> classical(const net::QuantumNetwork& g,
                                                            std::size_t src) {
  const auto cost = g.edge_costs();
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(g.size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    adj[g.edges()[e].u].push_back({g.edges()[e].v, cost[e]});
    adj[g.edges()[e].v].push_back({g.edges()[e].u, cost[e]});
  }
  std::vector<double> dist(g.size(), INFINITY);
  std::vector<long> prev(g.size(), -1);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[src] = 0;
  heap.push({0, src});
  while (!heap.empty()) {
    auto [du, u] = heap.top();
    heap.pop();
    if (du > dist[u]) continue;
    for (auto [v, w] : adj[u]) {
      if (du + w < dist[v]) {
        dist[v] = du + w;
        prev[v] = static_cast<long>(u);
        heap.push({dist[v], v});
      }
    }
  }
  return {dist, prev};
}

void c06_dijkstra() {
  Rng rng(6);
  int ok = 0;
  const int graphs = 100;
  for (int i = 0; i < graphs; ++i) {
    const auto g = net::random_network(2 + rng.uniform(62), rng.unit(), rng);
    const auto r = net::quantum_dijkstra(g, "D", net::SearchMode::ideal, rng);
    const auto [dist, prev] = classical(g, 0);
    bool same = true;
    for (std::size_t v = 0; v < g.size(); ++v) {
      same = same && std::abs(r.dist[v] - dist[v]) <= 1e-9 * (1 + dist[v]);
      same = same && (r.prev[v] ? static_cast<long>(*r.prev[v]) : -1) == prev[v];
    }
    ok += same;
  }
  report(6, "ideal_dijkstra", ok == graphs,
         fmt("%d/%d graphs (|V| <= 64) match classical distances and predecessors", ok, graphs));
}

void c07_oqmsa() {
  Rng rng(7);
  std::string detail;
  bool pass = true;
  for (std::size_t n : {8, 16, 32}) {
    const int arrays = 10000;
    int hits = 0;
    std::uint64_t worst = 0;
    const double bound = 8.0 * std::sqrt(double(n)) * std::ceil(std::log2(double(n)));
    for (int i = 0; i < arrays; ++i) {
      std::vector<double> v(n);
      for (double& x : v) x = rng.unit();
      const auto r = net::oqmsa_min(v, rng, net::SearchMode::simulated);
      hits += r.index == std::size_t(std::min_element(v.begin(), v.end()) - v.begin());
      worst = std::max(worst, r.iterations_used);
    }
    const double rate = double(hits) / arrays;
    pass = pass && rate >= 0.95 && double(worst) <= bound;
    detail += fmt("N=%zu success %.4f, max iters %llu <= %.0f; ", n, rate,
                  static_cast<unsigned long long>(worst), bound);
  }
  report(7, "oqmsa_min", pass, detail + "(need success >= 0.95)");
}

void c08_grover() {
  double worst = 0.0, worst_pm = 1.0;
  for (std::uint64_t n = 1; n <= 1024; ++n) {
    for (std::uint64_t m : {std::uint64_t{1}, std::uint64_t{2}, n / 4, n / 2, n}) {
      if (m == 0 || m > n) continue;
      const double theta = std::asin(std::sqrt(double(m) / double(n)));
      const auto kmax = static_cast<std::uint64_t>(
          std::ceil(std::numbers::pi / 4 * std::sqrt(double(n) / double(m)))) + 1;
      for (std::uint64_t k = 0; k <= kmax; ++k) {
        const double s = std::sin((2 * k + 1) * theta);
        worst = std::max(worst, std::abs(net::grover_long(n, m, k, net::PhaseMode::standard) -
                                         s * s));
      }
      const std::uint64_t k0 = net::phase_matched_iterations(n, m);
      for (std::uint64_t k = k0; k <= k0 + 1; ++k) {
        worst_pm = std::min(worst_pm, net::grover_long(n, m, k, net::PhaseMode::phase_matched));
      }
    }
  }
  report(8, "grover_closed_form", worst <= 1e-12 && worst_pm >= 1 - 1e-9,
         fmt("max deviation %.2e (tol 1e-12), min phase-matched success %.12f (tol 1 - 1e-9)",
             worst, worst_pm));
}

void c09_intercept_resend() {
  Rng rng(9);
  auth::SecureChannel ch(auth::SessionKey::derive(Bytes(32, 9)));
  harness::AdversaryModel m;
  m.kind = harness::AdversaryKind::intercept_resend;
  bool pass = true;
  std::string detail;
  for (std::size_t v : {3, 5}) {
    const int trials = 100000;
    int all = 0;
    for (int i = 0; i < trials; ++i) {
      auto s = protocol::build_particle_stream(0, v, ch, rng);
      all += harness::apply_adversary(s, m, rng).all_guessed();
    }
    const double p = std::pow(0.25, double(v - 1));
    const double rate = double(all) / trials;
    const double tol = 3 * sigma(p, trials);
    pass = pass && std::abs(rate - p) <= tol;
    detail += fmt("%sv=%zu rate %.5f vs %.5f +/- %.5f", detail.empty() ? "" : "; ", v, rate, p, tol);
  }
  report(9, "intercept_resend", pass, detail);
}

void c10_collusion() {
  Rng rng(10);
  harness::CollusionConfig short_hash;
  short_hash.hash_bits = 8;
  const int n8 = 100000;
  int won8 = 0;
  for (int i = 0; i < n8; ++i) won8 += harness::collusion_trial(short_hash, 1, rng).cheat_succeeded;
  const double p = 1.0 / 256;
  const double rate8 = double(won8) / n8;
  const bool ok8 = std::abs(rate8 - p) <= 3 * sigma(p, n8);

  harness::CollusionConfig full;
  full.hash_bits = 0;
  const int nfull = 1000000;
  int wonfull = 0;
  for (int i = 0; i < nfull; ++i) wonfull += harness::collusion_trial(full, 1, rng).cheat_succeeded;

  harness::CollusionConfig broker;
  broker.mode = protocol::DistributionMode::broker;
  const int nb = 10000;
  int detected = 0;
  for (int i = 0; i < nb; ++i) {
    detected += harness::collusion_trial(broker, 1 + rng.uniform(2), rng).detected;
  }
  report(10, "collusion", ok8 && wonfull == 0 && detected == nb,
         fmt("8-bit %.5f vs %.5f +/- %.5f; full digest %d/%d accepted; broker %d/%d detected",
             rate8, p, 3 * sigma(p, n8), wonfull, nfull, detected, nb));
}

void c11_replay() {
  auth::X25519Kem kem;
  Rng rng(11);
  auth::CertificationAuthority ca(kem, rng);
  const int n = 10000;
  int rejected = 0;
  for (int i = 0; i < n; ++i) {
    const auto r = auth::run_registration(ca, {"player-" + std::to_string(i), {}}, rng);
    if (!r.ok()) continue;
    const std::size_t before = ca.registered();
    const auto replay = auth::replay_registration(ca, r.transcript, rng);
    rejected += !replay.ok() && replay.status == auth::HandshakeStatus::nonce_mismatch &&
                ca.registered() == before;
  }
  report(11, "replay_rejected", rejected == n, fmt("%d/%d replays rejected", rejected, n));
}

void c12_dos_mesh() {
  const auto s = harness::load_scenario(QSS_SCENARIO_DIR "/dos_mesh.conf");
  int ok = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto r = harness::run_scenario_round(s, seed);
    ok += r.verdict == protocol::Verdict::success && !r.replaced.empty() &&
          r.replaced.front() == r.initial_selection.front() &&
          r.players.size() == s.round.t;
  }
  report(12, "dos_reselection", ok == 100,
         fmt("%d/100 seeds replaced the victim and reconstructed", ok));
}

void c13_determinism() {
  bool pass = true;
  int checked = 0;
  for (const char* name : {"honest", "dos_mesh", "intercept_resend", "collusion",
                           "availability", "replay"}) {
    const auto s = harness::load_scenario(std::string(QSS_SCENARIO_DIR "/") + name + ".conf");
    for (std::uint64_t seed : {1, 7, 12345}) {
      pass = pass && protocol::report_json(harness::run_scenario_round(s, seed)) ==
                         protocol::report_json(harness::run_scenario_round(s, seed));
      ++checked;
    }
  }
  const auto s = harness::load_scenario(QSS_SCENARIO_DIR "/honest.conf");
  const bool threads = harness::run_trials(s, {5, 40, 1}) == harness::run_trials(s, {5, 40, 4});
  report(13, "determinism", pass && threads,
         fmt("%d seeded reports byte-identical: %s; trials with 1 vs 4 threads equal: %s",
             checked, pass ? "yes" : "no", threads ? "yes" : "no"));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{
      c01_rounds, c02_fourier_ghz, c03_lagrange, c04_lookup, c05_weights,
      c06_dijkstra, c07_oqmsa, c08_grover, c09_intercept_resend, c10_collusion,
      c11_replay, c12_dos_mesh, c13_determinism};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), "exception", false, e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
