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

#include "qss/report.h"

#include "json_support.h"

namespace qss::protocol {

using nlohmann::ordered_json;

namespace {

ordered_json optional_u64(const std::optional<std::uint64_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

ordered_json config_json(const RoundConfig& cfg) {
  ordered_json j;
  j["d"] = cfg.d;
  j["t"] = cfg.t;
  j["n"] = cfg.n;
  j["secret"] = optional_u64(cfg.secret);
  j["kappa"] = cfg.kappa;
  j["j"] = cfg.j;
  j["tau0"] = cfg.tau0;
  j["tau_swap"] = cfg.tau_swap;
  j["mode"] = std::string(to_string(cfg.mode));
  j["hash_bits"] = cfg.hash_bits;
  j["seed"] = cfg.seed;
  j["search"] = cfg.search == net::SearchMode::ideal ? "ideal" : "simulated";
  j["restart_budget"] = cfg.restart_budget;
  j["penalties"] = cfg.penalties;
  j["dealer"] = cfg.dealer;
  j["kem"] = cfg.kem;
  return j;
}

std::string report_json(const RoundReport& r, int indent) {
  ordered_json j;
  j["schema"] = std::string(kReportSchema);
  j["kind"] = "round";
  j["config"] = config_json(r.config);
  j["secret"] = r.secret;
  j["backend"] = r.backend;

  ordered_json sel;
  sel["initial"] = r.initial_selection;
  ordered_json final_ids = ordered_json::array();
  for (const PlayerReport& p : r.players) final_ids.push_back(p.id);
  sel["final"] = final_ids;
  sel["replaced"] = r.replaced;
  j["selection"] = sel;

  ordered_json players = ordered_json::array();
  for (const PlayerReport& p : r.players) {
    ordered_json pj;
    pj["id"] = p.id;
    pj["pseudonym"] = p.pseudonym;
    pj["cost"] = p.cost;
    pj["hops"] = p.hops;
    pj["swaps"] = p.swaps;
    pj["abscissa"] = p.abscissa;
    pj["auth"] = p.auth_status;
    pj["shadow"] = p.shadow;
    pj["decoy_error_rates"] = p.decoy_error_rates;
    pj["measurement"] = optional_u64(p.measurement);
    pj["forged"] = p.forged;
    pj["reconstructed"] = optional_u64(p.reconstructed);
    pj["hash_ok"] = p.hash_ok ? ordered_json(*p.hash_ok) : ordered_json(nullptr);
    players.push_back(pj);
  }
  j["players"] = players;

  ordered_json phases = ordered_json::array();
  for (const PhaseRecord& ph : r.phases) {
    phases.push_back({{"phase", ph.phase}, {"status", ph.status}, {"detail", ph.detail}});
  }
  j["phases"] = phases;

  j["sharing"] = {{"attempts", r.sharing_attempts},
                  {"restarts", r.restarts},
                  {"decoys_checked", r.decoys_checked},
                  {"decoy_mismatches", r.decoy_mismatches}};
  j["search"] = {{"grover_iterations", r.grover_iterations},
                 {"extractions", r.extractions},
                 {"exact_extractions", r.exact_extractions}};

  const AttackerSummary& a = r.attacker;
  ordered_json aj;
  aj["kind"] = a.kind;
  aj["targets"] = a.targets;
  aj["intercepted_streams"] = a.intercepted_streams;
  aj["all_guessed_streams"] = a.all_guessed_streams;
  aj["escaped_streams"] = a.escaped_streams;
  aj["decoys_seen"] = a.decoys_seen;
  aj["correct_guesses"] = a.correct_guesses;
  aj["dropped_streams"] = a.dropped_streams;
  aj["entangled_touched"] = a.entangled_touched;
  aj["detected"] = a.detected;
  aj["replay_status"] = a.replay_status;
  aj["trojan"] = a.trojan;
  j["attacker"] = aj;

  j["cheaters"] = r.cheaters;
  ordered_json fines = ordered_json::array();
  for (const Fine& f : r.fines) {
    fines.push_back({{"player", f.player_id}, {"round", f.round_id}, {"reason", f.reason}});
  }
  j["fines"] = fines;
  j["reconstructed"] = optional_u64(r.reconstructed);
  j["verdict"] = std::string(to_string(r.verdict));
  j["abort_reason"] = std::string(to_string(r.reason));
  j["detail"] = r.detail;

  ordered_json events = ordered_json::array();
  for (const RoundEvent& e : r.events) {
    events.push_back({{"kind", e.kind}, {"actor", e.actor}, {"subject", e.subject}});
  }
  j["events"] = events;
  return j.dump(indent) + "\n";
}

}  // namespace qss::protocol
