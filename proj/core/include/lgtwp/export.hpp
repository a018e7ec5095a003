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

#ifndef LGTWP_EXPORT_HPP
#define LGTWP_EXPORT_HPP

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgtwp/config.hpp"
#include "lgtwp/stats.hpp"

namespace lgtwp {

inline constexpr std::string_view kToolVersion = "0.1.0";

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// '#'-prefixed lines: tool version, config, then extras. Every text output
// starts with one.
std::string header_block(const KeyValues& entries, std::string_view comment = "#");
KeyValues standard_header(const RunConfig& cfg);

// Writes to a temporary sibling and renames it into place.
void write_atomic(const std::filesystem::path& path, std::string_view content);

// label,f_0,b_0,... in label order. Z2 b is the link bit (0 <-> E = +1), U1 b is l.
std::string basis_csv(const PhysicalBasis& basis);
// Drops leading '#' lines.
std::string strip_header(std::string_view text);

std::string qasm(const Circuit& c);
std::string gate_list_csv(const Circuit& c);
std::string circuit_json(const Circuit& c, const KeyValues& extra = {});

// label,probability[,stderr] in label order.
std::string probabilities_csv(const PhysicalBasis& basis, std::span<const double> p,
                              std::span<const double> stderr_ = {});
std::string density_csv(const DensityProfile& d);
std::string shots_csv(const ShotRecord& r, const QubitLayout& layout);
std::string fits_csv(std::span<const SectorFit> fits);
std::string table_csv(const CoefficientTable& t);

std::string format_real(double v);

}  // namespace lgtwp

#endif  // LGTWP_EXPORT_HPP
