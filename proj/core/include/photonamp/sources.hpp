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

#ifndef PHOTONAMP_SOURCES_HPP
#define PHOTONAMP_SOURCES_HPP

#include <map>
#include <string_view>

#include "photonamp/fock.hpp"

namespace photonamp {

/// Photon-pair source: two-mode squeezed vacuum with pair-emission
/// probability `pair_probability` per pulse, truncated at `max_pairs`.
struct SourceModel {
    double pair_probability = 0.0;
    int max_pairs = 2;

    void validate() const;
};

/// Click detector: quantum efficiency, dark-count probability per gate,
/// and whether the detector resolves photon number.
struct DetectorModel {
    double efficiency = 1.0;
    double dark_prob = 0.0;
    bool number_resolving = false;

    void validate() const;
};

/// Single photon degraded by loss: weight `vacuum_prob` vacuum plus
/// weight 1 - vacuum_prob of one photon in the signal mode.
Ensemble input_state(double vacuum_prob, const ModeRegister& reg,
                     std::string_view signal);

/// Single photon coherently split over two modes:
/// sqrt(1-p)|1>_kept|0>_lost + sqrt(p)|0>_kept|1>_lost. Its marginal on
/// the kept mode matches input_state(p).
PureState coherent_input_state(double vacuum_prob, const ModeRegister& reg,
                               std::string_view kept, std::string_view lost);

/// Two-mode squeezed vacuum sum_n sqrt((1-y) y^n) |n,n> with
/// y = pair_probability, truncated at max_pairs and renormalised.
PureState tmsv_state(const SourceModel& source, const ModeRegister& reg,
                     std::string_view signal, std::string_view idler);

/// One outcome of a click measurement. `state` is subnormalised: its
/// total weight equals `probability`.
struct MeasurementOutcome {
    Ensemble state;
    double probability = 0.0;
};

/// Result of a click measurement. `counts` is populated only for
/// number-resolving detectors and maps the detected count m (including
/// m = 0, which coincides with no_click) to its outcome, so callers can
/// condition on exactly one detection.
struct ClickResult {
    MeasurementOutcome click;
    MeasurementOutcome no_click;
    std::map<int, MeasurementOutcome> counts;
};

/// Click/no-click POVM on one mode. An n-photon component fails to click
/// with probability (1-dark_prob)(1-efficiency)^n; for number-resolving
/// detectors the detected count m occurs with probability
/// (1-dark) B(n, eta, m) + dark B(n, eta, m-1), where B is the binomial
/// pmf and the dark count contributes at most one extra detection. The
/// measured mode is removed from the register of every returned
/// ensemble; outcome probabilities sum to the input ensemble weight.
ClickResult measure_click(const Ensemble& ensemble, const DetectorModel& detector,
                          std::string_view mode);

}  // namespace photonamp

#endif
