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

#ifndef LGTWP_CONFIG_HPP
#define LGTWP_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgtwp/ansatz.hpp"

namespace lgtwp {

struct RunConfig {
  LatticeSpec lattice;
  WavePacketSpec packet;
  int n_trotter = 1;
  double theta_c = 0.1;
  std::size_t n_shots = 500;
  std::optional<std::uint64_t> seed;
  double noise_1q = 0.0;
  double noise_2q = 0.0;
  std::filesystem::path out = "out";
  int jobs = 1;
  std::vector<double> sweep_m_f;
  std::vector<double> sweep_epsilon;

  std::uint64_t require_seed() const;  // throws when unset
  void validate() const;
};

// Reals accept plain numbers and simple pi expressions: "pi", "-pi/6", "2*pi", "pi/10".
double parse_real(std::string_view s);

// Sets one key; throws std::invalid_argument on unknown keys or bad values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

// "key = value" lines; '#' starts a comment.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

// Canonical key/value listing, used in output header blocks.
std::vector<std::pair<std::string, std::string>> describe(const RunConfig& cfg);

}  // namespace lgtwp

#endif  // LGTWP_CONFIG_HPP
