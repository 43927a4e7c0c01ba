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

#include "qss/round.h"

#include <algorithm>
#include <set>
#include <utility>

#include "qss/crypto.h"
#include "qss/error.h"
#include "qss/modmath.h"
#include "qss/qsim.h"
#include "qss/secret.h"
#include "qss/wire.h"

namespace qss::protocol {
namespace {

using harness::AdversaryKind;
using harness::AdversaryModel;

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out += ",";
    out += s;
  }
  return out;
}

std::string pseudonym_for(std::uint64_t round_id, const std::string& id) {
  const Bytes label = to_bytes("QSS-v1|pseudonym");
  const Bytes rid = auth::encode_u64(round_id);
  const Bytes name = to_bytes(id);
  const auto digest = crypto::sha3_256({label, rid, name});
  return "anon-" + to_hex(ByteView(digest).first(4));
}

bool fits_state_vector(std::uint64_t d, std::size_t t) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < t; ++i) {
    size *= d;
    if (size > qsim::kMaxAmplitudes) return false;
  }
  return true;
}

// Expands "all" and "selected:<k>" against the current selection.
std::vector<std::string> resolve_targets(const std::vector<std::string>& spec,
                                         const std::vector<std::string>& selected) {
  std::vector<std::string> out;
  for (const std::string& s : spec) {
    if (s == "all") {
      out.insert(out.end(), selected.begin(), selected.end());
    } else if (s.rfind("selected:", 0) == 0) {
      std::size_t k = 0;
      try {
        k = std::stoul(s.substr(9));
      } catch (const std::exception&) {
        throw ConfigError("adversary.targets", "bad target '" + s + "'");
      }
      if (k < 1 || k > selected.size()) {
        throw ConfigError("adversary.targets", "'" + s + "' is out of range");
      }
      out.push_back(selected[k - 1]);
    } else {
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view to_string(StreamStatus s) {
  switch (s) {
    case StreamStatus::accepted: return "accepted";
    case StreamStatus::rejected: return "decoy_mismatch";
    case StreamStatus::missing_particle: return "missing_particle";
    case StreamStatus::manifest_invalid: return "manifest_invalid";
  }
  return "unknown";
}

std::vector<math::Zd> decode_zd_fields(ByteView plain, math::PrimeModulus d) {
  std::vector<math::Zd> out;
  for (const Bytes& f : auth::decode_fields(plain)) {
    out.emplace_back(static_cast<std::int64_t>(auth::decode_u64(f) % d.value()), d);
  }
  return out;
}

class RoundRunner {
 public:
  RoundRunner(const RoundConfig& cfg, const Deployment& dep,
              const AdversaryModel& adv, Rng& rng)
      : cfg_(cfg),
        dep_(dep),
        adv_(adv),
        rng_(rng),
        d_(cfg.d),
        ca_(*dep.ca),
        network_(dep.network) {}

  RoundReport run();

 private:
  void phase(std::string name, std::string status, std::string detail = {}) {
    rep_.phases.push_back({std::move(name), std::move(status), std::move(detail)});
  }
  void event(std::string kind, std::string actor, std::string subject) {
    rep_.events.push_back({std::move(kind), std::move(actor), std::move(subject)});
  }
  RoundReport abort(AbortReason reason, std::string detail) {
    rep_.verdict = Verdict::abort;
    rep_.reason = reason;
    rep_.detail = std::move(detail);
    return std::move(rep_);
  }
  void absorb(const net::DijkstraResult& r) {
    rep_.grover_iterations += r.grover_iterations;
    rep_.extractions += r.extractions;
    rep_.exact_extractions += r.exact_extractions;
  }
  bool targeted(const std::string& id) const {
    return std::binary_search(targets_.begin(), targets_.end(), id);
  }

  bool replay_phase();
  bool selection_phase();
  bool authentication_phase();
  void polynomial_phase();
  bool sharing_phase();
  void intercept_entangled(std::size_t qudit, qsim::Basis basis);
  void measurement_phase();
  RoundReport distribution_phase();

  const RoundConfig& cfg_;
  const Deployment& dep_;
  const AdversaryModel& adv_;
  Rng& rng_;
  math::PrimeModulus d_;
  auth::CertificationAuthority ca_;
  net::QuantumNetwork network_;
  RoundReport rep_;

  std::uint64_t round_id_ = 0;
  std::vector<std::string> selected_;
  std::vector<std::string> targets_;
  std::vector<auth::SecureChannel> dealer_ch_;
  std::vector<auth::SecureChannel> player_ch_;
  std::vector<math::Zd> xs_;
  std::vector<math::Zd> shadows_;

  bool state_vector_ = false;
  std::optional<qsim::QuditRegister> reg_;
  bool collapsed_ = false;
  std::vector<Measurement> retained_;
  std::vector<Measurement> submitted_;
};

bool RoundRunner::replay_phase() {
  if (adv_.kind != AdversaryKind::replay) return true;
  const auth::Transcript* recorded = nullptr;
  for (const std::string& id : adv_.targets) {
    auto it = dep_.registration_transcripts.find(id);
    if (it != dep_.registration_transcripts.end()) recorded = &it->second;
  }
  if (recorded == nullptr && !dep_.registration_transcripts.empty()) {
    recorded = &dep_.registration_transcripts.begin()->second;
  }
  if (recorded == nullptr) {
    phase("replay", "skipped", "no recorded transcript");
    return true;
  }
  const auth::RegistrationResult r = auth::replay_registration(ca_, *recorded, rng_);
  rep_.attacker.replay_status = std::string(auth::to_string(r.status));
  rep_.attacker.detected = !r.ok();
  phase("replay", r.ok() ? "accepted" : "rejected", r.detail);
  return !r.ok();
}

bool RoundRunner::selection_phase() {
  net::PlayerSelection sel;
  try {
    sel = net::select_players(network_, cfg_.dealer, cfg_.t, cfg_.search, rng_);
  } catch (const SelectionError& e) {
    phase("selection", "failed", e.what());
    return false;
  }
  absorb(sel.routes);
  rep_.initial_selection = sel.players;

  if (adv_.kind == AdversaryKind::dos && adv_.disable_edges) {
    const std::vector<std::string> victims = resolve_targets(
        adv_.targets.empty() ? std::vector<std::string>{"selected:1"} : adv_.targets,
        sel.players);
    for (const std::string& v : victims) network_.remove_edges_of(v);
    phase("dos", "edges_disabled", join(victims));
    try {
      sel = net::select_players(network_, cfg_.dealer, cfg_.t, cfg_.search, rng_);
    } catch (const SelectionError& e) {
      phase("selection", "failed", e.what());
      return false;
    }
    absorb(sel.routes);
    for (const std::string& id : rep_.initial_selection) {
      if (std::find(sel.players.begin(), sel.players.end(), id) == sel.players.end()) {
        rep_.replaced.push_back(id);
      }
    }
    rep_.attacker.detected = !rep_.replaced.empty();
  }

  selected_ = sel.players;
  for (std::size_t i = 0; i < selected_.size(); ++i) {
    PlayerReport p;
    p.id = selected_[i];
    p.pseudonym = pseudonym_for(round_id_, p.id);
    p.cost = sel.costs[i];
    p.hops = sel.hops[i];
    p.swaps = p.hops > 0 ? p.hops - 1 : 0;
    rep_.players.push_back(std::move(p));
  }
  phase("selection", "ok", join(selected_));
  return true;
}

bool RoundRunner::authentication_phase() {
  for (PlayerReport& p : rep_.players) {
    auto creds = dep_.credentials.find(p.id);
    if (creds == dep_.credentials.end()) {
      p.auth_status = std::string(auth::to_string(auth::HandshakeStatus::unknown_player));
      phase("authentication", "failed", p.id + " is not registered");
      return false;
    }
    const auth::RoundAuthentication a =
        auth::authenticate_round(ca_, creds->second, round_id_, rng_);
    p.auth_status = std::string(auth::to_string(a.status));
    if (!a.ok()) {
      phase("authentication", "failed", p.id + ": " + a.detail);
      return false;
    }
    dealer_ch_.emplace_back(*a.dealer_key);
    player_ch_.emplace_back(*a.player_key);
  }
  phase("authentication", "ok");
  return true;
}

void RoundRunner::polynomial_phase() {
  const std::size_t t = cfg_.t;
  const math::Zd secret(static_cast<std::int64_t>(rep_.secret), d_);
  const secret::SymmetricPolynomial poly =
      secret::generate_polynomial(d_, t, secret, rng_);

  std::set<std::uint64_t> used;
  while (xs_.size() < t) {
    const std::uint64_t x = rng_.uniform(d_.value() - 1) + 1;
    if (used.insert(x).second) xs_.emplace_back(static_cast<std::int64_t>(x), d_);
  }

  std::vector<secret::UnivariateSlice> received;
  for (std::size_t i = 0; i < t; ++i) {
    const secret::UnivariateSlice slice = secret::restrict_at(poly, xs_[i]);
    std::vector<Bytes> fields{auth::encode_u64(slice.x.value())};
    for (const math::Zd& c : slice.coeffs) fields.push_back(auth::encode_u64(c.value()));
    const auth::WireMessage msg =
        auth::seal_message(dealer_ch_[i], auth::MessageType::polynomial_slice,
                           auth::encode_fields(fields), rng_);
    event("slice_sent", cfg_.dealer, selected_[i]);

    const auto plain = auth::open_message(player_ch_[i], msg);
    if (!plain) throw Error("polynomial slice failed to open for " + selected_[i]);
    std::vector<math::Zd> vals = decode_zd_fields(*plain, d_);
    secret::UnivariateSlice got{vals.front(), {vals.begin() + 1, vals.end()}};
    rep_.players[i].abscissa = got.x.value();
    received.push_back(std::move(got));
  }
  for (std::size_t i = 0; i < t; ++i) {
    shadows_.push_back(secret::share_shadow(received[i], xs_, i, selected_[i]).value);
    rep_.players[i].shadow = shadows_.back().value();
  }
  phase("polynomial", "ok");
}

void RoundRunner::intercept_entangled(std::size_t qudit, qsim::Basis basis) {
  if (!state_vector_) {
    if (basis == qsim::Basis::computational) collapsed_ = true;
    return;
  }
  if (basis == qsim::Basis::computational) {
    qsim::measure_qudit(*reg_, qudit, rng_);
    return;
  }
  const qsim::SingleQuditUnitary f = qsim::fourier(static_cast<std::uint32_t>(d_.value()));
  reg_ = qsim::apply_single(std::move(*reg_), qudit, f);
  qsim::measure_qudit(*reg_, qudit, rng_);
  reg_ = qsim::apply_single(std::move(*reg_), qudit, f.adjoint());
}

bool RoundRunner::sharing_phase() {
  const bool tampering = adv_.kind == AdversaryKind::intercept_resend ||
                         adv_.kind == AdversaryKind::entangle_forward;
  const bool dropping = adv_.kind == AdversaryKind::dos && adv_.drop_attempts > 0;
  if (tampering || dropping) {
    std::vector<std::string> spec = adv_.targets;
    if (spec.empty()) {
      spec = {tampering ? std::string("all") : std::string("selected:1")};
    }
    targets_ = resolve_targets(spec, selected_);
    rep_.attacker.targets = targets_;
  }

  for (std::size_t attempt = 0; attempt <= cfg_.restart_budget; ++attempt) {
    ++rep_.sharing_attempts;
    if (state_vector_) {
      reg_ = qsim::ghz(static_cast<std::uint32_t>(d_.value()), cfg_.t);
    }
    collapsed_ = false;
    std::string failure;
    for (std::size_t i = 0; i < selected_.size(); ++i) {
      PlayerReport& p = rep_.players[i];
      ParticleStream stream = build_particle_stream(i, cfg_.j, dealer_ch_[i], rng_);
      event("stream_sent", cfg_.dealer, p.id);
      bool attacked = false;
      if (tampering && targeted(p.id)) {
        const harness::AttackerLog log = harness::apply_adversary(stream, adv_, rng_);
        attacked = true;
        ++rep_.attacker.intercepted_streams;
        rep_.attacker.decoys_seen += log.decoys_seen;
        rep_.attacker.correct_guesses += log.correct_guesses;
        if (log.all_guessed()) ++rep_.attacker.all_guessed_streams;
        if (log.entangled_touched) {
          rep_.attacker.entangled_touched = true;
          intercept_entangled(i, log.entangled_basis);
        }
      } else if (dropping && attempt < adv_.drop_attempts && targeted(p.id)) {
        harness::apply_adversary(stream, adv_, rng_);
        attacked = true;
        ++rep_.attacker.dropped_streams;
      }
      const StreamCheck check =
          verify_stream(stream, player_ch_[i], p.swaps, cfg_.tau0, cfg_.tau_swap, rng_);
      p.decoy_error_rates.push_back(check.error_rate);
      rep_.decoys_checked += check.decoys;
      rep_.decoy_mismatches += check.mismatches;
      if (check.accepted()) {
        if (attacked) ++rep_.attacker.escaped_streams;
        continue;
      }
      if (attacked) rep_.attacker.detected = true;
      if (!failure.empty()) failure += "; ";
      failure += p.id + ": " + std::string(to_string(check.status));
    }
    if (failure.empty()) {
      phase("sharing", "ok", "attempt " + std::to_string(attempt + 1));
      return true;
    }
    if (attempt == cfg_.restart_budget) {
      phase("sharing", "exhausted", failure);
      break;
    }
    ++rep_.restarts;
    phase("sharing", "restart", failure);
  }
  return false;
}

void RoundRunner::measurement_phase() {
  const std::size_t t = cfg_.t;
  const std::uint64_t d = d_.value();
  std::vector<std::uint64_t> outcomes(t);
  if (state_vector_) {
    reg_ = qsim::qft_all(std::move(*reg_));
    for (std::size_t i = 0; i < t; ++i) {
      reg_ = qsim::apply_single(
          std::move(*reg_), i,
          qsim::generalized_pauli(static_cast<std::uint32_t>(shadows_[i].value()), 0,
                                  static_cast<std::uint32_t>(d)));
    }
    const std::vector<std::uint32_t> m = qsim::measure_all(*reg_, rng_);
    for (std::size_t i = 0; i < t; ++i) outcomes[i] = m[i];
  } else {
    std::vector<std::uint64_t> base(t);
    if (collapsed_) {
      for (auto& b : base) b = rng_.uniform(d);
    } else {
      const auto s = qsim::sample_fourier_ghz_outcomes(d, t, rng_);
      for (std::size_t i = 0; i < t; ++i) base[i] = s[i];
    }
    for (std::size_t i = 0; i < t; ++i) outcomes[i] = (base[i] + shadows_[i].value()) % d;
  }
  for (std::size_t i = 0; i < t; ++i) retained_.push_back({selected_[i], outcomes[i]});
  submitted_ = retained_;

  if (adv_.kind == AdversaryKind::collusion) {
    std::vector<std::string> forgers;
    if (!adv_.targets.empty()) {
      forgers = resolve_targets(adv_.targets, selected_);
    } else {
      std::vector<std::string> pool = selected_;
      for (std::size_t k = 0; k < adv_.colluders; ++k) {
        const std::size_t pick = rng_.uniform(pool.size());
        forgers.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
      }
      std::sort(forgers.begin(), forgers.end());
    }
    rep_.attacker.targets = forgers;
    for (std::size_t i = 0; i < t; ++i) {
      if (!std::binary_search(forgers.begin(), forgers.end(), selected_[i])) continue;
      submitted_[i].value = adv_.forger(retained_[i].value, d, rng_);
      rep_.players[i].forged = true;
    }
  }
  for (std::size_t i = 0; i < t; ++i) rep_.players[i].measurement = submitted_[i].value;
  phase("measurement", "ok");
}

RoundReport RoundRunner::distribution_phase() {
  const std::size_t t = cfg_.t;
  const math::Zd secret(static_cast<std::int64_t>(rep_.secret), d_);

  // Every player reports to the dealer before anything is redistributed.
  std::vector<Measurement> at_dealer;
  for (std::size_t i = 0; i < t; ++i) {
    const auth::WireMessage msg = auth::seal_message(
        player_ch_[i], auth::MessageType::measurement,
        auth::encode_fields({to_bytes(selected_[i]), auth::encode_u64(submitted_[i].value)}),
        rng_);
    event("measurement_sent", selected_[i], cfg_.dealer);
    const auto plain = auth::open_message(dealer_ch_[i], msg);
    if (!plain) return abort(AbortReason::authentication, "measurement failed to open");
    const auto fields = auth::decode_fields(*plain);
    at_dealer.push_back({qss::to_string(fields.at(0)), auth::decode_u64(fields.at(1))});
    event("measurement_received", cfg_.dealer, selected_[i]);
  }

  const secret::Commitment commitment = secret::commit(secret, cfg_.hash_bits);
  const bool any_forged = std::any_of(rep_.players.begin(), rep_.players.end(),
                                      [](const PlayerReport& p) { return p.forged; });

  if (cfg_.mode == DistributionMode::broker) {
    const BrokerCheck check = broker_collect_verify(retained_, at_dealer, secret);
    rep_.cheaters = check.cheaters;
    if (!check.cheaters.empty()) {
      if (cfg_.penalties) {
        for (const std::string& c : check.cheaters) {
          rep_.fines.push_back({c, round_id_, "forged measurement"});
        }
      }
      phase("distribution", "withheld", "forgery by " + join(check.cheaters));
      rep_.verdict = Verdict::cheat_detected;
      rep_.detail = "broker detected forged measurements";
      return std::move(rep_);
    }
    if (!check.sum_ok) {
      phase("distribution", "withheld", "measurements do not sum to the secret");
      return abort(AbortReason::integrity, "entanglement disturbed; sum mismatch");
    }
    std::vector<Bytes> fields;
    for (const Measurement& m : at_dealer) fields.push_back(auth::encode_u64(m.value));
    fields.push_back(commitment.digest);
    const Bytes payload = auth::encode_fields(fields);
    bool all_ok = true;
    for (std::size_t i = 0; i < t; ++i) {
      const auth::WireMessage msg = auth::seal_message(
          dealer_ch_[i], auth::MessageType::aggregate, payload, rng_);
      event("aggregate_sent", cfg_.dealer, selected_[i]);
      const auto plain = auth::open_message(player_ch_[i], msg);
      if (!plain) return abort(AbortReason::authentication, "aggregate failed to open");
      auto parts = auth::decode_fields(*plain);
      const Bytes digest = parts.back();
      parts.pop_back();
      std::vector<math::Zd> ms;
      for (const Bytes& b : parts) {
        ms.emplace_back(static_cast<std::int64_t>(auth::decode_u64(b) % d_.value()), d_);
      }
      const math::Zd s = secret::reconstruct(ms, d_);
      const bool ok = secret::commit(s, cfg_.hash_bits).digest == digest;
      rep_.players[i].reconstructed = s.value();
      rep_.players[i].hash_ok = ok;
      all_ok = all_ok && ok && s == secret;
    }
    phase("distribution", "ok", "broker");
    if (!all_ok) return abort(AbortReason::integrity, "aggregate did not verify");
    rep_.reconstructed = secret.value();
    rep_.verdict = Verdict::success;
    return std::move(rep_);
  }

  BulletinBoard board(cfg_.dealer);
  std::vector<std::string> pseudonyms;
  for (const PlayerReport& p : rep_.players) pseudonyms.push_back(p.pseudonym);
  bulletin_publish(board, at_dealer, pseudonyms, commitment);
  event("board_posted", cfg_.dealer, "board");
  bool all_ok = true;
  std::optional<math::Zd> agreed;
  for (std::size_t i = 0; i < t; ++i) {
    const Finalization fin = player_finalize(board, d_);
    event("board_read", selected_[i], "board");
    rep_.players[i].reconstructed = fin.secret.value();
    rep_.players[i].hash_ok = fin.hash_ok;
    all_ok = all_ok && fin.hash_ok;
    agreed = fin.secret;
  }
  phase("distribution", all_ok ? "ok" : "rejected", "bulletin");
  if (all_ok) {
    rep_.reconstructed = agreed->value();
    if (*agreed == secret) {
      rep_.verdict = Verdict::success;
    } else {
      rep_.verdict = Verdict::cheat_succeeded;
      rep_.detail = "players accepted a wrong secret through a commitment collision";
    }
    return std::move(rep_);
  }
  if (any_forged) {
    rep_.verdict = Verdict::cheat_detected;
    rep_.detail = "commitment check failed for every player";
    return std::move(rep_);
  }
  return abort(AbortReason::integrity, "commitment check failed; entanglement disturbed");
}

RoundReport RoundRunner::run() {
  rep_.config = cfg_;
  rep_.attacker.kind = std::string(harness::to_string(adv_.kind));
  rep_.attacker.trojan = adv_.trojan || adv_.kind == AdversaryKind::trojan;
  round_id_ = cfg_.seed;
  rep_.secret = cfg_.secret ? *cfg_.secret : rng_.uniform(d_.value());
  state_vector_ = fits_state_vector(d_.value(), cfg_.t);
  rep_.backend = state_vector_ ? "state_vector" : "sampled";
  network_.set_kappa(cfg_.kappa);
  if (rep_.attacker.trojan) {
    phase("trojan", "annotated", "hardware countermeasures are outside the model");
  }

  if (!replay_phase()) {
    rep_.verdict = Verdict::cheat_succeeded;
    rep_.detail = "replayed registration was accepted";
    return std::move(rep_);
  }
  if (!selection_phase()) return abort(AbortReason::topology, "fewer than t reachable players");
  if (!authentication_phase()) return abort(AbortReason::authentication, "round authentication failed");
  polynomial_phase();
  if (!sharing_phase()) {
    return abort(AbortReason::availability, "restart budget exhausted in entangled sharing");
  }
  measurement_phase();
  return distribution_phase();
}

}  // namespace

void RoundConfig::validate() const {
  try {
    math::PrimeModulus check(d);
    (void)check;
  } catch (const PreconditionError& e) {
    throw ConfigError("round.d", e.what());
  }
  if (t < 2) throw ConfigError("round.t", "threshold must be at least 2");
  if (t > n) throw ConfigError("round.t", "threshold exceeds the player count n");
  if (d <= t) {
    throw ConfigError("round.d", "field too small: need d > t for distinct nonzero "
                                 "abscissas (d=" + std::to_string(d) +
                                     ", t=" + std::to_string(t) + ")");
  }
  if (j < 2) throw ConfigError("round.j", "stream length must be at least 2");
  if (!(tau0 >= 0.0 && tau0 < 1.0)) throw ConfigError("round.tau0", "must lie in [0, 1)");
  if (!(tau_swap >= 0.0)) throw ConfigError("round.tau_swap", "must be non-negative");
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw ConfigError("round.kappa", "must lie in [0, 1]");
  if (hash_bits > 256) throw ConfigError("round.hash_bits", "must be at most 256");
  if (secret && *secret >= d) throw ConfigError("round.secret", "must be below d");
  if (dealer.empty()) throw ConfigError("round.dealer", "must not be empty");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::success: return "success";
    case Verdict::abort: return "abort";
    case Verdict::cheat_detected: return "cheat_detected";
    case Verdict::cheat_succeeded: return "cheat_succeeded";
  }
  return "unknown";
}

std::string_view to_string(AbortReason r) {
  switch (r) {
    case AbortReason::none: return "none";
    case AbortReason::topology: return "topology";
    case AbortReason::authentication: return "authentication";
    case AbortReason::availability: return "availability";
    case AbortReason::integrity: return "integrity";
  }
  return "unknown";
}

Deployment Deployment::provision(net::QuantumNetwork network, const RoundConfig& cfg,
                                 Rng& rng, std::shared_ptr<const auth::Kem> kem,
                                 bool allow_insecure) {
  if (!network.find(cfg.dealer)) {
    throw ConfigError("round.dealer", "dealer '" + cfg.dealer + "' is not in the network");
  }
  Deployment dep;
  dep.network = std::move(network);
  dep.kem = kem ? std::move(kem) : std::shared_ptr<const auth::Kem>(auth::make_kem(cfg.kem));
  if (dep.kem->insecure_for_testing() && !allow_insecure) {
    throw ConfigError("round.kem", "scheme '" + std::string(dep.kem->scheme_id()) +
                                       "' is a test double and is not allowed here");
  }
  dep.ca = std::make_shared<auth::CertificationAuthority>(*dep.kem, rng);
  for (const std::string& id : dep.network.nodes()) {
    if (id == cfg.dealer) continue;
    auth::RegistrationResult r = auth::run_registration(
        *dep.ca, {id, to_bytes("player:" + id)}, rng,
        [](ByteView) { return true; });
    if (!r.ok()) {
      throw Error("registration of '" + id + "' failed: " + r.detail);
    }
    dep.credentials.emplace(id, *r.credentials);
    dep.registration_transcripts.emplace(id, std::move(r.transcript));
  }
  return dep;
}

RoundReport run_round(const RoundConfig& cfg, const Deployment& deployment,
                      const harness::AdversaryModel& adversary, Rng& rng) {
  cfg.validate();
  adversary.validate(cfg.t);
  if (!deployment.ca) throw PreconditionError("run_round: deployment has no CA");
  RoundRunner runner(cfg, deployment, adversary, rng);
  return runner.run();
}

}  // namespace qss::protocol
