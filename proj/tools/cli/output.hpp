// Copyright 2026 The Photonamp Authors
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

#ifndef PHOTONAMP_CLI_OUTPUT_HPP
#define PHOTONAMP_CLI_OUTPUT_HPP

#include <string>
#include <vector>

#include "photonamp/experiments.hpp"

namespace photonamp::cli {

/// Column order of every sweep file. Fixed so outputs are byte-exact.
inline constexpr const char* kCsvHeader =
    "p,t,gain,herald_probability,herald_efficiency,visibility,distance_km";

/// One real formatted with 9 significant digits (trailing zeros kept).
std::string format_real(double value);

/// Comma-separated sweep rows with the fixed header; absent quantities
/// become empty fields; '\n' line endings; UTF-8. Refuses empty input.
void write_csv(const std::vector<SweepRow>& rows, const std::string& path);

/// Same columns, space separated, '#'-prefixed header, absent fields as
/// "nan" (plot-tool friendly).
void write_dat(const std::vector<SweepRow>& rows, const std::string& path);

/// Reads a file produced by write_csv and re-validates every row.
std::vector<SweepRow> read_csv(const std::string& path);

/// Fringe scan: "phi,probability" rows.
void write_fringe_csv(const std::vector<FringePoint>& points, double visibility,
                      const std::string& path, bool dat_format);

}  // namespace photonamp::cli

#endif
