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

#include "photonamp/amplifier.hpp"

#include <algorithm>
#include <cmath>

#include "photonamp/elements.hpp"

namespace photonamp {

namespace {

constexpr const char* kOut = "out";
constexpr const char* kHerald = "herald";
constexpr const char* kIn = "in";
constexpr const char* kLost = "lost";

// t = 1 makes g^2 diverge; configs stay strictly below.
constexpr double kMaxTransmission = 1.0 - 1e-9;

void check_probability(double value, const char* key) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ConfigError(key, "must lie in [0, 1]");
    }
}

/// Projects a pure state onto "at least one photon in `mode`" and
/// renormalises. Models the trigger conditioning of a pulsed pair
/// source, where empty pulses never enter the statistics.
PureState condition_on_occupied(const PureState& state, std::string_view mode) {
    std::size_t idx = state.mode_register().index_of(mode);
    PureState::AmplitudeMap amps;
    for (const auto& [occ, amp] : state.amplitudes()) {
        if (occ[idx] >= 1) {
            amps.emplace(occ, amp);
        }
    }
    PureState projected(state.mode_register(), std::move(amps));
    if (projected.norm_squared() <= 0.0) {
        throw ImpossibleEvent("source never emits into the trigger mode");
    }
    return projected.normalised();
}

/// State of the full circuit just before the heralding measurement.
Ensemble propagate_circuit(const AmplifierConfig& cfg) {
    std::vector<ModeInfo> modes{{kOut, ModeRole::kAncillaOut},
                                {kHerald, ModeRole::kAncillaMeas},
                                {kIn, ModeRole::kInput}};
    if (cfg.input_coherent) {
        modes.push_back({kLost, ModeRole::kLost});
    }
    ModeRegister reg(std::move(modes), cfg.cutoff);

    Ensemble state(reg);
    if (cfg.pair_probability > 0.0) {
        SourceModel source{cfg.pair_probability, cfg.source_max_pairs};
        PureState pairs = tmsv_state(source, reg, kIn, kOut);
        state = Ensemble::from_pure(condition_on_occupied(pairs, kIn));
    } else {
        std::vector<int> occ(reg.mode_count(), 0);
        occ[reg.index_of(kOut)] = 1;
        occ[reg.index_of(kIn)] = 1;
        state = Ensemble::from_pure(make_basis_state(reg, OccupationVector(occ)));
    }

    std::vector<CircuitElement> circuit;
    if (cfg.input_coherent) {
        circuit.push_back(CircuitElement::beam_splitter(1.0 - cfg.input_loss, kIn, kLost));
    } else {
        circuit.push_back(CircuitElement::loss(1.0 - cfg.input_loss, kIn));
    }
    circuit.push_back(CircuitElement::beam_splitter(cfg.transmission, kOut, kHerald));
    if (cfg.intrinsic_loss < 1.0) {
        circuit.push_back(CircuitElement::loss(cfg.intrinsic_loss, kHerald));
        circuit.push_back(CircuitElement::loss(cfg.intrinsic_loss, kOut));
    }
    circuit.push_back(CircuitElement::beam_splitter(0.5, kHerald, kIn));

    for (const auto& element : circuit) {
        state = apply_element(state, element);
    }
    return state;
}

/// Applies the heralding rule and returns the subnormalised conditional
/// ensemble. A number-resolving detector heralds on exactly one count.
Ensemble apply_herald(const Ensemble& state, const AmplifierConfig& cfg) {
    auto take_herald_port = [&](const Ensemble& e) {
        ClickResult r = measure_click(e, cfg.detector_b, kHerald);
        if (cfg.detector_b.number_resolving) {
            auto it = r.counts.find(1);
            if (it == r.counts.end()) {
                return Ensemble(r.click.state.mode_register());
            }
            return it->second.state;
        }
        return r.click.state;
    };

    if (cfg.herald_rule == HeraldRule::kClickAndNoClick) {
        // Second detector on the D_a port, same model as D_b.
        ClickResult veto = measure_click(state, cfg.detector_b, kIn);
        return take_herald_port(veto.no_click.state);
    }
    return trace_out(take_herald_port(state), kIn);
}

double click_probability(int photons, const DetectorModel& det) {
    double silent = 1.0 - det.dark_prob;
    for (int i = 0; i < photons; ++i) silent *= 1.0 - det.efficiency;
    return 1.0 - silent;
}

}  // namespace

AmplifierConfig AmplifierConfig::ideal(double input_loss, double transmission) {
    AmplifierConfig cfg;
    cfg.input_loss = input_loss;
    cfg.transmission = transmission;
    cfg.pair_probability = 0.0;
    cfg.detector_b = DetectorModel{1.0, 0.0, true};
    cfg.intrinsic_loss = 1.0;
    return cfg;
}

void AmplifierConfig::validate() const {
    check_probability(input_loss, "input.p");
    if (!(transmission >= 0.0 && transmission <= kMaxTransmission)) {
        throw ConfigError("amplifier.t", "must lie in [0, 1)");
    }
    if (!(pair_probability >= 0.0 && pair_probability < 1.0)) {
        throw ConfigError("source.p_pair", "must lie in [0, 1)");
    }
    if (source_max_pairs < 1) {
        throw ConfigError("source.max_pairs", "must be >= 1");
    }
    detector_b.validate();
    check_probability(intrinsic_loss, "amplifier.intrinsic_loss");
    if (cutoff < 2) {
        throw ConfigError("amplifier.cutoff", "must be >= 2 to represent bunching");
    }
    if (cutoff > 32) {
        throw ConfigError("amplifier.cutoff", "must be <= 32");
    }
    if (pair_probability > 0.0 && cutoff < 2 * source_max_pairs) {
        throw ConfigError("amplifier.cutoff",
                          "must be >= 2*source.max_pairs when p_pair > 0");
    }
}

double g_squared(double transmission) {
    if (!(transmission >= 0.0 && transmission < 1.0)) {
        throw UndefinedGain("g^2(t) requires t in [0, 1); it diverges at t = 1");
    }
    return transmission / (1.0 - transmission);
}

double gain_ideal(double transmission, double input_loss) {
    if (!(transmission >= 0.0 && transmission < 1.0)) {
        throw UndefinedGain("gain requires t in [0, 1)");
    }
    check_probability(input_loss, "input.p");
    double denom = (1.0 - transmission) * input_loss + transmission * (1.0 - input_loss);
    if (denom <= 0.0) {
        throw UndefinedGain("gain is undefined where (1-t)p + t(1-p) vanishes");
    }
    return transmission / denom;
}

double herald_efficiency_ideal(double transmission, double input_loss) {
    return gain_ideal(transmission, input_loss) * (1.0 - input_loss);
}

double visibility_ideal(double transmission, double input_loss) {
    double out_weight = (1.0 - input_loss) * transmission;
    double lost_weight = input_loss * (1.0 - transmission);
    double sum = out_weight + lost_weight;
    if (sum <= 0.0) {
        throw UndefinedVisibility("no amplitude reaches the interferometer");
    }
    return 2.0 * std::sqrt(out_weight * lost_weight) / sum;
}

AmplifierResult run_amplifier(const AmplifierConfig& config) {
    config.validate();

    Ensemble premeasure = propagate_circuit(config);
    Ensemble heralded = apply_herald(premeasure, config);

    double herald_probability = heralded.total_weight();
    if (herald_probability <= 0.0) {
        throw ImpossibleEvent("herald never fires for this configuration");
    }
    auto [output, weight] = merge_and_renormalise(heralded);

    auto dist = photon_number_distribution(output, kOut);
    double vacuum = dist.count(0) ? dist.at(0) : 0.0;
    double efficiency = std::clamp(1.0 - vacuum, 0.0, 1.0);

    AmplifierResult result{herald_probability, std::move(output), efficiency, {}, {}};
    if (config.input_loss < 1.0) {
        result.gain = efficiency / (1.0 - config.input_loss);
    }
    return result;
}

FringeResult fringe_visibility(const AmplifierConfig& config,
                               std::span<const double> phases) {
    if (!config.input_coherent) {
        throw Error("fringe_visibility requires input_coherent = true");
    }
    {
        std::vector<double> unique(phases.begin(), phases.end());
        std::sort(unique.begin(), unique.end());
        unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
        if (unique.size() < 3) {
            throw Error("fringe_visibility needs at least three distinct phases");
        }
    }

    AmplifierResult run = run_amplifier(config);

    FringeResult result;
    double lo = 1.0;
    double hi = 0.0;
    for (double phi : phases) {
        Ensemble arm = apply_phase(run.output, phi, kLost);
        arm = apply_beam_splitter(arm, 0.5, kOut, kLost);
        auto dist = photon_number_distribution(arm, kOut);
        double vacuum = dist.count(0) ? dist.at(0) : 0.0;
        double p_click = std::clamp(1.0 - vacuum, 0.0, 1.0);
        result.fringe.push_back(FringePoint{phi, p_click});
        lo = std::min(lo, p_click);
        hi = std::max(hi, p_click);
    }
    if (hi + lo <= 0.0) {
        throw UndefinedVisibility("fringe mean is zero");
    }
    result.visibility = (hi - lo) / (hi + lo);
    result.run = std::move(run);
    result.run.visibility = result.visibility;
    return result;
}

HomResult hom_coincidence(const SourceModel& source, double overlap,
                          const DetectorModel& detector1,
                          const DetectorModel& detector2, int cutoff) {
    source.validate();
    detector1.validate();
    detector2.validate();
    if (!(overlap >= 0.0 && overlap <= 1.0)) {
        throw Error("modal overlap must lie in [0, 1]");
    }

    // Two spatial ports, each with an interfering and an orthogonal
    // internal mode. The balanced splitter acts on both internal modes.
    auto coincidence = [&](double zeta) {
        ModeRegister reg({ModeInfo{"sig", ModeRole::kDet1},
                          ModeInfo{"sig_orth", ModeRole::kAux},
                          ModeInfo{"idl", ModeRole::kDet2},
                          ModeInfo{"idl_orth", ModeRole::kAux}},
                         cutoff);
        PureState psi = tmsv_state(source, reg, "sig", "idl");
        psi = apply_beam_splitter(psi, zeta, "idl", "idl_orth");
        psi = apply_beam_splitter(psi, 0.5, "sig", "idl");
        psi = apply_beam_splitter(psi, 0.5, "sig_orth", "idl_orth");

        std::size_t is = reg.index_of("sig");
        std::size_t iso = reg.index_of("sig_orth");
        std::size_t ii = reg.index_of("idl");
        std::size_t iio = reg.index_of("idl_orth");
        double c = 0.0;
        for (const auto& [occ, amp] : psi.amplitudes()) {
            int port1 = occ[is] + occ[iso];
            int port2 = occ[ii] + occ[iio];
            c += std::norm(amp) * click_probability(port1, detector1) *
                 click_probability(port2, detector2);
        }
        return c;
    };

    HomResult result;
    result.coincidence_probability = coincidence(overlap);
    result.reference_coincidence = coincidence(0.0);
    result.visibility =
        result.reference_coincidence > 0.0
            ? 1.0 - result.coincidence_probability / result.reference_coincidence
            : 0.0;
    return result;
}

}  // namespace photonamp
