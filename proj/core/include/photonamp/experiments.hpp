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

#ifndef PHOTONAMP_EXPERIMENTS_HPP
#define PHOTONAMP_EXPERIMENTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "photonamp/amplifier.hpp"

namespace photonamp {

/// Installed telecom fibre attenuation, dB per km.
inline constexpr double kDefaultAttenuationDbPerKm = 0.24;

struct SweepQuantities {
    bool gain = true;
    bool herald_probability = true;
    bool herald_efficiency = true;
    bool visibility = false;
};

/// One grid of amplifier runs: outer loop over input losses, inner loop
/// over transmissions.
struct SweepSpec {
    std::vector<double> input_losses;
    std::vector<double> transmissions;
    AmplifierConfig base;
    SweepQuantities quantities;
    /// Phases used when visibility is requested; must cover the fringe
    /// extrema. Default: twelve points over one period.
    std::vector<double> fringe_phases;

    static std::vector<double> default_fringe_phases();
};

struct SweepRow {
    double input_loss = 0.0;
    double transmission = 0.0;
    std::optional<double> gain;
    std::optional<double> herald_probability;
    std::optional<double> herald_efficiency;
    std::optional<double> visibility;
    std::optional<double> distance_km;
    /// Set instead of the quantities when this grid point failed.
    std::optional<std::string> error;
};

/// Runs the grid. Failed points are recorded as error rows rather than
/// aborting the sweep. Deterministic: fixed spec, fixed rows.
std::vector<SweepRow> sweep(const SweepSpec& spec);

/// Channel loss p after `km` of fibre: p = 1 - 10^(-attenuation*km/10).
double distance_to_loss(double km,
                        double attenuation_db_per_km = kDefaultAttenuationDbPerKm);

/// Exact inverse of distance_to_loss. Throws on p = 1.
double loss_to_distance(double input_loss,
                        double attenuation_db_per_km = kDefaultAttenuationDbPerKm);

/// Smallest transmission (bisection to 1e-6) whose heralded efficiency
/// reaches `target_efficiency` at the given loss, searching t in
/// [0.5, 1). Verifies that efficiency is monotone on the bracket first.
double find_min_t(double input_loss, double target_efficiency,
                  const AmplifierConfig& base);

enum class FitParam {
    kIntrinsicLoss,
    kDetectorEfficiency,
    kDarkProb,
    kPairProbability,
};

const char* fit_param_name(FitParam param);

struct FitBounds {
    double lo = 0.0;
    double hi = 1.0;
};

struct FitResult {
    std::map<FitParam, double> params;
    double residual = 0.0;
};

/// Least-squares fit of device parameters to observed sweep rows by
/// coordinate-wise grid refinement (11-point grids, shrunk around the
/// best value until the step is below 1e-4). Deterministic.
FitResult fit_model(const std::vector<SweepRow>& data,
                    const std::map<FitParam, FitBounds>& free_params,
                    const AmplifierConfig& base);

}  // namespace photonamp

#endif
