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

#include "photonamp/sources.hpp"

#include <cmath>
#include <vector>

namespace photonamp {

namespace {

double binomial_pmf(int n, double eta, int k) {
    if (k < 0 || k > n) return 0.0;
    double c = 1.0;
    for (int i = 0; i < k; ++i) {
        c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    double r = c;
    for (int i = 0; i < k; ++i) r *= eta;
    for (int i = 0; i < n - k; ++i) r *= 1.0 - eta;
    return r;
}

OccupationVector basis_with(const ModeRegister& reg,
                            std::initializer_list<std::pair<std::size_t, int>> counts) {
    std::vector<int> occ(reg.mode_count(), 0);
    for (auto& [idx, n] : counts) {
        occ[idx] = n;
    }
    return OccupationVector(std::move(occ));
}

}  // namespace

void SourceModel::validate() const {
    if (!(pair_probability >= 0.0 && pair_probability < 1.0)) {
        throw ConfigError("source.p_pair", "must lie in [0, 1)");
    }
    if (max_pairs < 1) {
        throw ConfigError("source.max_pairs", "must be >= 1");
    }
}

void DetectorModel::validate() const {
    if (!(efficiency >= 0.0 && efficiency <= 1.0)) {
        throw ConfigError("detector.efficiency", "must lie in [0, 1]");
    }
    if (!(dark_prob >= 0.0 && dark_prob < 1.0)) {
        throw ConfigError("detector.dark_prob", "must lie in [0, 1)");
    }
}

Ensemble input_state(double vacuum_prob, const ModeRegister& reg,
                     std::string_view signal) {
    if (!(vacuum_prob >= 0.0 && vacuum_prob <= 1.0)) {
        throw Error("input vacuum probability must lie in [0, 1]");
    }
    std::size_t idx = reg.index_of(signal);
    Ensemble e(reg);
    if (vacuum_prob > 0.0) {
        e.add_branch(vacuum_prob, make_basis_state(reg, basis_with(reg, {})));
    }
    if (vacuum_prob < 1.0) {
        e.add_branch(1.0 - vacuum_prob, make_basis_state(reg, basis_with(reg, {{idx, 1}})));
    }
    return e;
}

PureState coherent_input_state(double vacuum_prob, const ModeRegister& reg,
                               std::string_view kept, std::string_view lost) {
    if (!(vacuum_prob >= 0.0 && vacuum_prob <= 1.0)) {
        throw Error("input vacuum probability must lie in [0, 1]");
    }
    std::size_t ik = reg.index_of(kept);
    std::size_t il = reg.index_of(lost);
    if (ik == il) {
        throw Error("kept and lost modes must be distinct");
    }
    PureState::AmplitudeMap amps;
    double a_kept = std::sqrt(1.0 - vacuum_prob);
    double a_lost = std::sqrt(vacuum_prob);
    if (a_kept > 0.0) {
        amps.emplace(basis_with(reg, {{ik, 1}}), complex{a_kept, 0.0});
    }
    if (a_lost > 0.0) {
        amps.emplace(basis_with(reg, {{il, 1}}), complex{a_lost, 0.0});
    }
    return PureState(reg, std::move(amps));
}

PureState tmsv_state(const SourceModel& source, const ModeRegister& reg,
                     std::string_view signal, std::string_view idler) {
    source.validate();
    if (source.max_pairs > reg.cutoff()) {
        throw CutoffViolation("source max_pairs exceeds the register cutoff");
    }
    std::size_t is = reg.index_of(signal);
    std::size_t ii = reg.index_of(idler);
    if (is == ii) {
        throw Error("signal and idler modes must be distinct");
    }
    const double y = source.pair_probability;

    // Geometric pair-number weights (1-y) y^n, renormalised over the
    // retained 0..max_pairs sector.
    std::vector<double> weights;
    double total = 0.0;
    double yn = 1.0;
    for (int n = 0; n <= source.max_pairs; ++n) {
        weights.push_back((1.0 - y) * yn);
        total += weights.back();
        yn *= y;
    }

    PureState::AmplitudeMap amps;
    for (int n = 0; n <= source.max_pairs; ++n) {
        double amp = std::sqrt(weights[static_cast<std::size_t>(n)] / total);
        if (amp > 0.0) {
            amps.emplace(basis_with(reg, {{is, n}, {ii, n}}), complex{amp, 0.0});
        }
    }
    return PureState(reg, std::move(amps));
}

ClickResult measure_click(const Ensemble& ensemble, const DetectorModel& detector,
                          std::string_view mode) {
    detector.validate();
    ModeRegister reduced =
        ensemble.mode_register().without(ensemble.mode_register().index_of(mode));
    const double eta = detector.efficiency;
    const double dark = detector.dark_prob;

    ClickResult result{MeasurementOutcome{Ensemble(reduced), 0.0},
                       MeasurementOutcome{Ensemble(reduced), 0.0},
                       {}};

    for (const auto& branch : ensemble.branches()) {
        for (auto& [n, part] : split_by_mode_occupation(branch.state, mode)) {
            const double w = branch.weight * part.first;
            double p_silent = 1.0 - dark;
            for (int i = 0; i < n; ++i) p_silent *= 1.0 - eta;

            result.no_click.state.add_branch(w * p_silent, part.second);
            result.no_click.probability += w * p_silent;

            if (detector.number_resolving) {
                // Detected count = photon detections plus at most one dark count.
                for (int m = 0; m <= n + 1; ++m) {
                    double pm = (1.0 - dark) * binomial_pmf(n, eta, m) +
                                dark * binomial_pmf(n, eta, m - 1);
                    if (pm <= 0.0) continue;
                    auto [it, inserted] = result.counts.try_emplace(
                        m, MeasurementOutcome{Ensemble(reduced), 0.0});
                    it->second.state.add_branch(w * pm, part.second);
                    it->second.probability += w * pm;
                    if (m >= 1) {
                        result.click.state.add_branch(w * pm, part.second);
                        result.click.probability += w * pm;
                    }
                }
            } else {
                double p_click = w * (1.0 - p_silent);
                result.click.state.add_branch(p_click, part.second);
                result.click.probability += p_click;
            }
        }
    }
    return result;
}

}  // namespace photonamp
