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

#ifndef LGTWP_TOOLS_COMMANDS_HPP
#define LGTWP_TOOLS_COMMANDS_HPP

#include <string>

#include "lgtwp/config.hpp"

namespace lgtwp::cli {

// Each command writes its artifacts under cfg.out and returns a short summary
// for stdout. Failures throw; pipeline failures carry a "[stage]" prefix.
std::string cmd_basis(const RunConfig& cfg);
std::string cmd_hamiltonian(const RunConfig& cfg);
std::string cmd_spectrum(const RunConfig& cfg);
std::string cmd_optimize(const RunConfig& cfg);
std::string cmd_cmn(const RunConfig& cfg);
std::string cmd_circuit(const RunConfig& cfg);
std::string cmd_simulate(const RunConfig& cfg);
std::string cmd_analyze(const RunConfig& cfg);
std::string cmd_pipeline(const RunConfig& cfg);
std::string cmd_sweep(const RunConfig& cfg);

}  // namespace lgtwp::cli

#endif  // LGTWP_TOOLS_COMMANDS_HPP
