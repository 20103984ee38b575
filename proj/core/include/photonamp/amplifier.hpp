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

#ifndef PHOTONAMP_AMPLIFIER_HPP
#define PHOTONAMP_AMPLIFIER_HPP

#include <optional>
#include <span>
#include <vector>

#include "photonamp/fock.hpp"
#include "photonamp/sources.hpp"

namespace photonamp {

// Heralded photon amplifier
// -------------------------
// An ancilla photon split on a beam splitter of transmission t provides
// single-photon entanglement between the output arm and a measurement
// arm. The measurement arm is mixed with the (lossy) input on a balanced
// splitter and a detector click heralds success. Conditioned on the
// herald, the vacuum/photon balance of the input is re-weighted by the
// gain factor g^2(t) = t/(1-t).
//
// Circuit layout used by run_amplifier:
//
//   in     ---[loss 1-p or split to "lost"]---(BS 1/2)--- D_a port
//   out    ---.                              /
//             (BS t)---[loss eta_amp]-------(BS 1/2)----- D_b port
//   herald ---'
//
// The ancilla enters in "out"; the variable splitter sends amplitude
// sqrt(t) to the output arm and sqrt(1-t) to the herald arm. Intrinsic
// loss is applied once per internal arm (output and herald) directly
// after the variable splitter, which is equivalent to attenuating the
// ancilla photon itself.

/// How the Bell-state measurement outcome is accepted.
enum class HeraldRule {
    /// A click on the D_b port alone heralds; the D_a port is unobserved.
    kSinglePortClick,
    /// A click on D_b together with silence on D_a (same detector model).
    kClickAndNoClick,
};

/// Full experiment description for one amplifier run.
struct AmplifierConfig {
    double input_loss = 0.5;       ///< p: vacuum weight of the input state
    double transmission = 0.5;     ///< t: variable beam-splitter transmission
    double pair_probability = 0.0; ///< SPDC pair probability (0 = exact photons)
    int source_max_pairs = 2;      ///< retained pair number of the source
    DetectorModel detector_b{1.0, 0.0, true};
    double intrinsic_loss = 1.0;   ///< transmission of each internal arm
    bool input_coherent = false;   ///< keep the lost amplitude in a register mode
    int cutoff = kDefaultCutoff;
    HeraldRule herald_rule = HeraldRule::kSinglePortClick;

    /// Ideal device: exact photons, number-resolving unit-efficiency
    /// detector, no dark counts, no intrinsic loss.
    static AmplifierConfig ideal(double input_loss, double transmission);

    void validate() const;  // throws ConfigError naming the offending field
};

/// Everything a single amplifier run reports.
struct AmplifierResult {
    double herald_probability = 0.0;   ///< per input state
    Ensemble output;                   ///< conditional on the herald, renormalised
    double herald_efficiency = 0.0;    ///< P(>=1 photon in the output mode | herald)
    std::optional<double> gain;        ///< herald_efficiency / (1-p); absent at p=1
    std::optional<double> visibility;  ///< set by fringe_visibility only
};

/// Gain factor g^2(t) = t/(1-t). Throws UndefinedGain at t = 1.
double g_squared(double transmission);

/// Closed-form gain of the lossless amplifier with number-resolved
/// heralding: t / ((1-t) p + t (1-p)).
double gain_ideal(double transmission, double input_loss);

/// Closed-form heralded efficiency of the lossless amplifier:
/// t (1-p) / ((1-t) p + t (1-p)).
double herald_efficiency_ideal(double transmission, double input_loss);

/// Closed-form fringe visibility of the lossless amplifier with coherent
/// input: 2 sqrt(p(1-t)(1-p)t) / (p(1-t) + (1-p)t).
double visibility_ideal(double transmission, double input_loss);

/// Runs the full circuit with every configured imperfection and returns
/// the conditional output together with the derived scalars. With ideal
/// settings this reproduces gain_ideal and herald_efficiency_ideal.
AmplifierResult run_amplifier(const AmplifierConfig& config);

struct FringePoint {
    double phase = 0.0;
    double probability = 0.0;
};

struct FringeResult {
    std::vector<FringePoint> fringe;
    double visibility = 0.0;
    /// The heralded run behind the scan, with `visibility` filled in.
    AmplifierResult run;
};

/// Interference fringe between the heralded output and the lost input
/// amplitude: phase phi on the lost arm, balanced recombination, click
/// probability on the output port. Visibility is (max-min)/(max+min)
/// over the evaluated fringe, so the phase list should cover the
/// extrema (0 and pi for this convention). Requires input_coherent and
/// at least three distinct phases.
FringeResult fringe_visibility(const AmplifierConfig& config,
                               std::span<const double> phases);

struct HomResult {
    double coincidence_probability = 0.0;  ///< at the requested overlap
    double reference_coincidence = 0.0;    ///< fully distinguishable (overlap 0)
    double visibility = 0.0;               ///< 1 - coincidence/reference
};

/// Hong-Ou-Mandel test of the pair source: signal and idler meet on a
/// balanced splitter and two detectors look for coincidences. `overlap`
/// is the modal overlap of the two photons (1 = indistinguishable),
/// realised by splitting the idler between the interfering mode and an
/// orthogonal auxiliary mode with amplitudes sqrt(overlap) and
/// sqrt(1-overlap).
HomResult hom_coincidence(const SourceModel& source, double overlap,
                          const DetectorModel& detector1,
                          const DetectorModel& detector2,
                          int cutoff = kDefaultCutoff);

}  // namespace photonamp

#endif
