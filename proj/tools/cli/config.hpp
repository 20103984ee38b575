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

#ifndef PHOTONAMP_CLI_CONFIG_HPP
#define PHOTONAMP_CLI_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "photonamp/experiments.hpp"

namespace photonamp::cli {

/// Parsed and validated run configuration. Parsing is strict: unknown
/// keys are rejected so physics parameters can never be silently
/// ignored.
struct RunConfig {
    // source
    double p_pair = 0.0;
    int max_pairs = 2;
    // detector
    DetectorModel detector{1.0, 0.0, true};
    // amplifier
    std::vector<double> transmissions;  // from t or t_grid (default grid otherwise)
    double intrinsic_loss = 1.0;
    HeraldRule herald_rule = HeraldRule::kSinglePortClick;
    int cutoff = kDefaultCutoff;
    // input
    std::vector<double> input_losses;  // from p, p_grid or distance_km
    std::optional<double> distance_km;
    double attenuation_db_per_km = kDefaultAttenuationDbPerKm;
    // experiment
    std::string kind;  // optional in the file; must match the subcommand
    std::optional<SweepQuantities> quantities;
    std::string output;
    std::vector<double> phases;
    std::optional<double> target_efficiency;
    double overlap = 1.0;
    std::string data_path;
    std::map<FitParam, FitBounds> fit_bounds;
};

/// Eleven-point uniform grid over [0.5, 0.995], the default for both p
/// and t when a surface experiment gives no explicit grid.
std::vector<double> default_grid();

/// Parses the JSON text of a config file for the given experiment kind.
/// Throws ConfigError (naming the offending key) on unknown keys, type
/// mismatches, out-of-range values, or keys that do not belong to the
/// requested kind.
RunConfig parse_run_config(const std::string& json_text, const std::string& kind);

/// The experiment.kind declared in the file, or "gain-surface" when the
/// file leaves it out. Used by `validate`, which checks a config against
/// its own declared kind.
std::string peek_kind(const std::string& json_text);

/// Base amplifier configuration shared by every grid point of a run.
AmplifierConfig to_amplifier_config(const RunConfig& config);

}  // namespace photonamp::cli

#endif
