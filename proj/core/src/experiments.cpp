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

#include "photonamp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace photonamp {

namespace {

double evaluate_visibility(const AmplifierConfig& base, double p, double t,
                           const std::vector<double>& phases) {
    AmplifierConfig cfg = base;
    cfg.input_loss = p;
    cfg.transmission = t;
    cfg.input_coherent = true;
    return fringe_visibility(cfg, phases).visibility;
}

double herald_efficiency_at(const AmplifierConfig& base, double p, double t) {
    AmplifierConfig cfg = base;
    cfg.input_loss = p;
    cfg.transmission = t;
    return run_amplifier(cfg).herald_efficiency;
}

void set_param(AmplifierConfig& cfg, FitParam param, double value) {
    switch (param) {
        case FitParam::kIntrinsicLoss: cfg.intrinsic_loss = value; return;
        case FitParam::kDetectorEfficiency: cfg.detector_b.efficiency = value; return;
        case FitParam::kDarkProb: cfg.detector_b.dark_prob = value; return;
        case FitParam::kPairProbability: cfg.pair_probability = value; return;
    }
    throw Error("unknown fit parameter");
}

}  // namespace

std::vector<double> SweepSpec::default_fringe_phases() {
    std::vector<double> phases;
    for (int k = 0; k < 12; ++k) {
        phases.push_back(k * std::numbers::pi / 6.0);
    }
    return phases;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
    if (spec.input_losses.empty()) {
        throw ConfigError("input.p_grid", "must not be empty");
    }
    if (spec.transmissions.empty()) {
        throw ConfigError("amplifier.t_grid", "must not be empty");
    }
    std::vector<double> phases =
        spec.fringe_phases.empty() ? SweepSpec::default_fringe_phases()
                                   : spec.fringe_phases;

    std::vector<SweepRow> rows;
    rows.reserve(spec.input_losses.size() * spec.transmissions.size());
    for (double p : spec.input_losses) {
        for (double t : spec.transmissions) {
            SweepRow row;
            row.input_loss = p;
            row.transmission = t;
            try {
                AmplifierConfig cfg = spec.base;
                cfg.input_loss = p;
                cfg.transmission = t;
                if (spec.quantities.gain || spec.quantities.herald_probability ||
                    spec.quantities.herald_efficiency) {
                    AmplifierResult r = run_amplifier(cfg);
                    if (spec.quantities.gain) row.gain = r.gain;
                    if (spec.quantities.herald_probability) {
                        row.herald_probability = r.herald_probability;
                    }
                    if (spec.quantities.herald_efficiency) {
                        row.herald_efficiency = r.herald_efficiency;
                    }
                }
                if (spec.quantities.visibility) {
                    row.visibility = evaluate_visibility(spec.base, p, t, phases);
                }
            } catch (const Error& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

double distance_to_loss(double km, double attenuation_db_per_km) {
    if (km < 0.0) {
        throw Error("fibre length must be non-negative");
    }
    if (attenuation_db_per_km <= 0.0) {
        throw Error("attenuation must be positive");
    }
    return 1.0 - std::pow(10.0, -attenuation_db_per_km * km / 10.0);
}

double loss_to_distance(double input_loss, double attenuation_db_per_km) {
    if (!(input_loss >= 0.0 && input_loss < 1.0)) {
        throw Error("loss 1 corresponds to an infinite distance");
    }
    if (attenuation_db_per_km <= 0.0) {
        throw Error("attenuation must be positive");
    }
    return -10.0 * std::log10(1.0 - input_loss) / attenuation_db_per_km;
}

double find_min_t(double input_loss, double target_efficiency,
                  const AmplifierConfig& base) {
    if (!(target_efficiency >= 0.0 && target_efficiency < 1.0)) {
        throw ConfigError("experiment.target_efficiency", "must lie in [0, 1)");
    }
    double lo = 0.5;
    double hi = 1.0 - 1e-9;

    // Efficiency must be monotone in t on the bracket for bisection to
    // find the smallest admissible t.
    const int kSamples = 9;
    double prev = herald_efficiency_at(base, input_loss, lo);
    double eff_lo = prev;
    for (int i = 1; i < kSamples; ++i) {
        double t = lo + (hi - lo) * i / (kSamples - 1);
        double eff = herald_efficiency_at(base, input_loss, t);
        if (eff < prev - 1e-9) {
            throw Error("heralded efficiency is not monotone in t on [0.5, 1)");
        }
        prev = eff;
    }
    double eff_hi = prev;

    if (eff_lo >= target_efficiency) {
        return lo;
    }
    if (eff_hi < target_efficiency) {
        throw InfeasibleTarget("target efficiency " + std::to_string(target_efficiency) +
                               " is unreachable under this configuration");
    }
    while (hi - lo > 1e-6) {
        double mid = 0.5 * (lo + hi);
        if (herald_efficiency_at(base, input_loss, mid) >= target_efficiency) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

const char* fit_param_name(FitParam param) {
    switch (param) {
        case FitParam::kIntrinsicLoss: return "intrinsic_loss";
        case FitParam::kDetectorEfficiency: return "detector_efficiency";
        case FitParam::kDarkProb: return "dark_prob";
        case FitParam::kPairProbability: return "p_pair";
    }
    return "unknown";
}

namespace {

double fit_objective(const std::vector<SweepRow>& data, const AmplifierConfig& cfg,
                     const std::vector<double>& phases) {
    double sse = 0.0;
    for (const SweepRow& row : data) {
        if (row.error) continue;
        AmplifierConfig point = cfg;
        point.input_loss = row.input_loss;
        point.transmission = row.transmission;
        if (row.gain || row.herald_probability || row.herald_efficiency) {
            AmplifierResult r = run_amplifier(point);
            if (row.gain && r.gain) {
                sse += (*row.gain - *r.gain) * (*row.gain - *r.gain);
            }
            if (row.herald_probability) {
                double d = *row.herald_probability - r.herald_probability;
                sse += d * d;
            }
            if (row.herald_efficiency) {
                double d = *row.herald_efficiency - r.herald_efficiency;
                sse += d * d;
            }
        }
        if (row.visibility) {
            double d = *row.visibility -
                       evaluate_visibility(cfg, row.input_loss, row.transmission, phases);
            sse += d * d;
        }
    }
    return sse;
}

}  // namespace

FitResult fit_model(const std::vector<SweepRow>& data,
                    const std::map<FitParam, FitBounds>& free_params,
                    const AmplifierConfig& base) {
    if (free_params.empty()) {
        AmplifierConfig cfg = base;
        return FitResult{{}, fit_objective(data, cfg, SweepSpec::default_fringe_phases())};
    }
    if (data.size() < free_params.size()) {
        throw UnderdeterminedFit("fewer data rows than free parameters");
    }
    bool all_identical = std::all_of(data.begin(), data.end(), [&](const SweepRow& r) {
        return r.input_loss == data.front().input_loss &&
               r.transmission == data.front().transmission;
    });
    if (data.size() > 1 && all_identical) {
        throw UnderdeterminedFit("all data rows sit on the same grid point");
    }
    for (const auto& [param, bounds] : free_params) {
        if (!(bounds.lo < bounds.hi)) {
            throw ConfigError(std::string("experiment.bounds.") + fit_param_name(param),
                              "lower bound must be below upper bound");
        }
    }

    const std::vector<double> phases = SweepSpec::default_fringe_phases();
    const int kGridPoints = 11;

    std::map<FitParam, double> current;
    std::map<FitParam, double> span;
    for (const auto& [param, bounds] : free_params) {
        current[param] = 0.5 * (bounds.lo + bounds.hi);
        span[param] = bounds.hi - bounds.lo;
    }

    auto objective_at = [&](const std::map<FitParam, double>& values) {
        AmplifierConfig cfg = base;
        for (const auto& [param, value] : values) {
            set_param(cfg, param, value);
        }
        return fit_objective(data, cfg, phases);
    };

    double best = objective_at(current);
    double max_step = 1.0;
    while (max_step >= 1e-4) {
        max_step = 0.0;
        for (const auto& [param, bounds] : free_params) {
            double width = span[param];
            double lo = std::max(bounds.lo, current[param] - width / 2.0);
            double hi = std::min(bounds.hi, current[param] + width / 2.0);
            double step = (hi - lo) / (kGridPoints - 1);
            for (int i = 0; i < kGridPoints; ++i) {
                std::map<FitParam, double> trial = current;
                trial[param] = lo + step * i;
                double value = objective_at(trial);
                if (value < best) {
                    best = value;
                    current = trial;
                }
            }
            max_step = std::max(max_step, step);
        }
        for (auto& [param, width] : span) {
            width /= 5.0;
        }
    }
    return FitResult{current, best};
}

}  // namespace photonamp
