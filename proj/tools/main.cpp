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

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out, group, n_sites, m_f, epsilon, cutoff, sigma, mu, k0, theta_c, n_trotter,
      n_shots, noise_1q, noise_2q, jobs;

  void attach(CLI::App* app) {
    app->add_option("--config", config, "key = value config file");
    app->add_option("--seed", seed, "RNG seed");
    app->add_option("--out", out, "output directory");
    app->add_option("--jobs", jobs, "worker threads");
    app->add_option("--group", group, "Z2 or U1");
    app->add_option("--n-sites", n_sites);
    app->add_option("--cutoff", cutoff, "U1 electric cutoff");
    app->add_option("--m-f", m_f);
    app->add_option("--epsilon", epsilon);
    app->add_option("--sigma", sigma, "wave-packet width in momentum (accepts pi/6)");
    app->add_option("--mu", mu);
    app->add_option("--k0", k0);
    app->add_option("--theta-c", theta_c);
    app->add_option("--n-trotter", n_trotter);
    app->add_option("--n-shots", n_shots);
    app->add_option("--noise-1q", noise_1q);
    app->add_option("--noise-2q", noise_2q);
  }

  lgtwp::RunConfig resolve() const {
    lgtwp::RunConfig cfg = config.empty() ? lgtwp::RunConfig{} : lgtwp::load_config(config);
    auto set = [&](const char* key, const std::optional<std::string>& v) {
      if (v) lgtwp::apply_setting(cfg, key, *v);
    };
    set("group", group);
    set("n_sites", n_sites);
    set("cutoff", cutoff);
    set("m_f", m_f);
    set("epsilon", epsilon);
    set("sigma", sigma);
    set("mu", mu);
    set("k0", k0);
    set("theta_c", theta_c);
    set("n_trotter", n_trotter);
    set("n_shots", n_shots);
    set("noise_1q", noise_1q);
    set("noise_2q", noise_2q);
    set("out", out);
    set("jobs", jobs);
    if (seed) cfg.seed = *seed;
    return cfg;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wave-packet preparation for 1+1D lattice gauge theories"};
  app.require_subcommand(1);
  Overrides ov;

  using Command = std::function<std::string(const lgtwp::RunConfig&)>;
  const std::vector<std::tuple<const char*, const char*, Command>> commands{
      {"basis", "enumerate the physical basis", lgtwp::cli::cmd_basis},
      {"hamiltonian", "export H on the physical basis", lgtwp::cli::cmd_hamiltonian},
      {"spectrum", "momentum-resolved exact spectrum", lgtwp::cli::cmd_spectrum},
      {"optimize", "optimize the meson ansatz per momentum", lgtwp::cli::cmd_optimize},
      {"cmn", "wave-packet coefficient table", lgtwp::cli::cmd_cmn},
      {"circuit", "synthesize circuits (OpenQASM 2.0)", lgtwp::cli::cmd_circuit},
      {"simulate", "statevector run and shot sampling", lgtwp::cli::cmd_simulate},
      {"analyze", "mitigate and bootstrap shots.csv", lgtwp::cli::cmd_analyze},
      {"pipeline", "run every stage", lgtwp::cli::cmd_pipeline},
      {"sweep", "(m_f, epsilon) heat map", lgtwp::cli::cmd_sweep},
  };
  Command chosen;
  for (const auto& [name, help, fn] : commands) {
    auto* sub = app.add_subcommand(name, help);
    ov.attach(sub);
    sub->callback([&chosen, f = fn] { chosen = f; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    std::cout << chosen(ov.resolve()) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
