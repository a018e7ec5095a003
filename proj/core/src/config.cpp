// Copyright 2026 The lgtwp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lgtwp/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lgtwp {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double plain_number(std::string_view s) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw std::invalid_argument("bad number: " + std::string(s));
  return v;
}

template <class T>
T parse_integer(std::string_view s) {
  s = trim(s);
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
  return v;
}

std::vector<double> parse_list(std::string_view s) {
  std::vector<double> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.push_back(parse_real(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

std::string fmt_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + fmt(v[i]);
  return out;
}

}  // namespace

double parse_real(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("empty number");
  double sign = 1.0;
  if (s.front() == '-' || s.front() == '+') {
    if (s.front() == '-') sign = -1.0;
    const auto rest = trim(s.substr(1));
    if (rest.find("pi") == std::string_view::npos) return sign * plain_number(rest);
    s = rest;
  }
  const auto pi = s.find("pi");
  if (pi == std::string_view::npos) return sign * plain_number(s);
  double factor = 1.0;
  auto head = trim(s.substr(0, pi));
  if (!head.empty()) {
    if (head.back() != '*') throw std::invalid_argument("bad pi expression: " + std::string(s));
    factor = plain_number(trim(head.substr(0, head.size() - 1)));
  }
  auto tail = trim(s.substr(pi + 2));
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("bad pi expression: " + std::string(s));
    const double d = plain_number(trim(tail.substr(1)));
    if (d == 0) throw std::invalid_argument("division by zero");
    factor /= d;
  }
  return sign * factor * kPi;
}

std::uint64_t RunConfig::require_seed() const {
  if (!seed) throw std::invalid_argument("a seed is required for sampling runs");
  return *seed;
}

void RunConfig::validate() const {
  lattice.validate();
  if (n_trotter < 1) throw std::invalid_argument("n_trotter must be >= 1");
  if (theta_c < 0) throw std::invalid_argument("theta_c must be >= 0");
  if (packet.sigma <= 0) throw std::invalid_argument("sigma must be > 0");
  if (noise_1q < 0 || noise_1q >= 1 || noise_2q < 0 || noise_2q >= 1)
    throw std::invalid_argument("noise rates must lie in [0, 1)");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "group") c.lattice.group = parse_group(value);
  else if (key == "n_sites") c.lattice.n_sites = parse_integer<int>(value);
  else if (key == "m_f") c.lattice.m_f = parse_real(value);
  else if (key == "epsilon") c.lattice.epsilon = parse_real(value);
  else if (key == "cutoff") c.lattice.cutoff = parse_integer<int>(value);
  else if (key == "sigma") c.packet.sigma = parse_real(value);
  else if (key == "mu") c.packet.mu = parse_real(value);
  else if (key == "k0") c.packet.k0 = parse_real(value);
  else if (key == "theta_c") c.theta_c = parse_real(value);
  else if (key == "n_trotter") c.n_trotter = parse_integer<int>(value);
  else if (key == "n_shots") c.n_shots = parse_integer<std::size_t>(value);
  else if (key == "seed") c.seed = parse_integer<std::uint64_t>(value);
  else if (key == "noise_1q") c.noise_1q = parse_real(value);
  else if (key == "noise_2q") c.noise_2q = parse_real(value);
  else if (key == "out") c.out = std::string(value);
  else if (key == "jobs") c.jobs = parse_integer<int>(value);
  else if (key == "sweep_m_f") c.sweep_m_f = parse_list(value);
  else if (key == "sweep_epsilon") c.sweep_epsilon = parse_list(value);
  else throw std::invalid_argument("unknown config key: " + std::string(key));
}

RunConfig parse_config(std::string_view text, RunConfig cfg) {
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    try {
      apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::vector<std::pair<std::string, std::string>> describe(const RunConfig& c) {
  std::vector<std::pair<std::string, std::string>> kv{
      {"group", std::string(to_string(c.lattice.group))},
      {"n_sites", std::to_string(c.lattice.n_sites)},
      {"m_f", fmt(c.lattice.m_f)},
      {"epsilon", fmt(c.lattice.epsilon)},
  };
  if (c.lattice.group == Group::U1) kv.emplace_back("cutoff", std::to_string(c.lattice.cutoff));
  kv.insert(kv.end(), {
      {"sigma", fmt(c.packet.sigma)},
      {"mu", fmt(c.packet.mu)},
      {"k0", fmt(c.packet.k0)},
      {"theta_c", fmt(c.theta_c)},
      {"n_trotter", std::to_string(c.n_trotter)},
      {"n_shots", std::to_string(c.n_shots)},
      {"seed", c.seed ? std::to_string(*c.seed) : "none"},
      {"noise_1q", fmt(c.noise_1q)},
      {"noise_2q", fmt(c.noise_2q)},
  });
  if (!c.sweep_m_f.empty()) kv.emplace_back("sweep_m_f", fmt_list(c.sweep_m_f));
  if (!c.sweep_epsilon.empty()) kv.emplace_back("sweep_epsilon", fmt_list(c.sweep_epsilon));
  return kv;
}

}  // namespace lgtwp
