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

#include "qss/scenario.h"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qss/error.h"

namespace qss::harness {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& field, const std::string& text) {
  if (text.empty()) throw ConfigError(field, "expected a number");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (errno != 0 || end != text.c_str() + text.size()) {
    throw ConfigError(field, "expected a number, got '" + text + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& field, const std::string& text) {
  if (text.empty() || text[0] == '-') {
    throw ConfigError(field, "expected a non-negative integer, got '" + text + "'");
  }
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (errno != 0 || end != text.c_str() + text.size()) {
    throw ConfigError(field, "expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& field, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(field, "expected true or false, got '" + text + "'");
}

net::SearchMode parse_search(const std::string& field, const std::string& text) {
  if (text == "ideal") return net::SearchMode::ideal;
  if (text == "simulated") return net::SearchMode::simulated;
  throw ConfigError(field, "expected ideal or simulated, got '" + text + "'");
}

void apply_round(protocol::RoundConfig& r, const std::string& key,
                 const std::string& value) {
  const std::string field = "round." + key;
  if (key == "d") {
    r.d = parse_u64(field, value);
  } else if (key == "t") {
    r.t = parse_u64(field, value);
  } else if (key == "n") {
    r.n = parse_u64(field, value);
  } else if (key == "secret") {
    if (value == "random") {
      r.secret.reset();
    } else {
      r.secret = parse_u64(field, value);
    }
  } else if (key == "j" || key == "v") {
    r.j = parse_u64(field, value);
  } else if (key == "kappa") {
    r.kappa = parse_double(field, value);
  } else if (key == "tau0") {
    r.tau0 = parse_double(field, value);
  } else if (key == "tau_swap") {
    r.tau_swap = parse_double(field, value);
  } else if (key == "hash_bits") {
    r.hash_bits = static_cast<unsigned>(parse_u64(field, value));
  } else if (key == "mode") {
    r.mode = protocol::parse_distribution_mode(value);
  } else if (key == "search") {
    r.search = parse_search(field, value);
  } else if (key == "restart_budget") {
    r.restart_budget = parse_u64(field, value);
  } else if (key == "penalties") {
    r.penalties = parse_bool(field, value);
  } else if (key == "dealer") {
    r.dealer = value;
  } else if (key == "kem") {
    r.kem = value;
  } else if (key == "seed") {
    r.seed = parse_u64(field, value);
  } else {
    throw ConfigError(field, "unknown key");
  }
}

void apply_adversary(AdversaryModel& a, const std::string& key,
                     const std::string& value) {
  const std::string field = "adversary." + key;
  if (key == "kind") {
    a.kind = parse_adversary_kind(value);
  } else if (key == "targets") {
    a.targets.clear();
    for (const std::string& s : split(value, ',')) {
      if (!s.empty()) a.targets.push_back(s);
    }
  } else if (key == "disturbance") {
    a.disturbance = parse_double(field, value);
  } else if (key == "disable_edges") {
    a.disable_edges = parse_bool(field, value);
  } else if (key == "drop_attempts") {
    a.drop_attempts = parse_u64(field, value);
  } else if (key == "f") {
    a.colluders = parse_u64(field, value);
  } else if (key == "forge") {
    if (value != "uniform") {
      throw ConfigError(field, "only the uniform strategy is built in");
    }
    a.forger = forge_uniform;
  } else if (key == "trojan") {
    a.trojan = parse_bool(field, value);
  } else {
    throw ConfigError(field, "unknown key");
  }
}

EdgeSpec parse_edge(const std::string& value) {
  const std::string field = "network.edge";
  const auto parts = split(value, ',');
  if (parts.size() < 4) {
    throw ConfigError(field, "expected u, v, alpha, epsilon[, name=value ...]");
  }
  EdgeSpec e;
  e.u = parts[0];
  e.v = parts[1];
  if (e.u.empty() || e.v.empty()) throw ConfigError(field, "empty node id");
  e.params.alpha = parse_double(field, parts[2]);
  e.params.channel.epsilon = parse_double(field, parts[3]);
  for (std::size_t i = 4; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) {
      throw ConfigError(field, "expected name=value, got '" + parts[i] + "'");
    }
    const std::string name = trim(parts[i].substr(0, eq));
    const double v = parse_double(field, trim(parts[i].substr(eq + 1)));
    if (name == "n_uses") {
      e.params.channel.n_uses = v;
    } else if (name == "q_rate") {
      e.params.channel.q_rate = v;
    } else {
      e.params.channel.extra[name] = v;
    }
  }
  return e;
}

}  // namespace

net::QuantumNetwork Scenario::build_network(Rng& rng) const {
  if (!has_network) {
    net::QuantumNetwork g = net::random_network(round.n, round.kappa, rng);
    g.set_tables(tables);
    return g;
  }
  net::QuantumNetwork g(round.kappa, tables);
  for (const std::string& id : nodes) g.add_node(id);
  for (const EdgeSpec& e : edges) {
    g.add_node(e.u);
    g.add_node(e.v);
    g.add_edge(e.u, e.v, e.params);
  }
  return g;
}

Scenario parse_scenario(std::string_view text) {
  Scenario s;
  std::map<std::string, std::vector<net::LookupRow>> lookup_rows;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no), "unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section == "network") {
        s.has_network = true;
      } else if (section.rfind("lookup.", 0) == 0 && section.size() > 7) {
        lookup_rows[section.substr(7)];
      } else if (section != "round" && section != "adversary") {
        throw ConfigError(section, "unknown section");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) throw ConfigError(key, "key outside of any section");

    if (section == "round") {
      apply_round(s.round, key, value);
    } else if (section == "adversary") {
      apply_adversary(s.adversary, key, value);
    } else if (section == "network") {
      if (key == "node") {
        if (value.empty()) throw ConfigError("network.node", "empty node id");
        s.nodes.push_back(value);
      } else if (key == "edge") {
        s.edges.push_back(parse_edge(value));
      } else {
        throw ConfigError("network." + key, "unknown key");
      }
    } else {
      const std::string field = section + "." + key;
      if (key != "row") throw ConfigError(field, "unknown key");
      const auto parts = split(value, ',');
      if (parts.size() != 3) throw ConfigError(field, "expected lower, upper, score");
      const double score = parse_double(field, parts[2]);
      lookup_rows[section.substr(7)].push_back(
          {parse_double(field, parts[0]), parse_double(field, parts[1]),
           static_cast<int>(score)});
    }
  }
  for (auto& [param, rows] : lookup_rows) {
    if (rows.empty()) throw ConfigError("lookup." + param, "table has no rows");
    s.tables.put(net::LookupTable(param, std::move(rows)));
  }
  if (s.has_network) {
    std::set<std::string> ids(s.nodes.begin(), s.nodes.end());
    for (const EdgeSpec& e : s.edges) {
      ids.insert(e.u);
      ids.insert(e.v);
    }
    s.round.n = ids.size() - (ids.count(s.round.dealer) != 0 ? 1 : 0);
  }
  s.round.validate();
  s.adversary.validate(s.round.t);
  if (s.has_network) {
    for (const EdgeSpec& e : s.edges) {
      if (!(e.params.alpha >= 0.0 && e.params.alpha <= 1.0)) {
        throw ConfigError("network.edge", "alpha must lie in [0, 1]");
      }
      net::beta_score(e.params.channel, s.tables);
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config", "cannot open '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace qss::harness
