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

#include "config.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace photonamp::cli {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& object, const std::string& section,
                         const std::set<std::string>& allowed) {
    for (const auto& [key, value] : object.items()) {
        if (!allowed.count(key)) {
            std::string path = section.empty() ? key : section + "." + key;
            throw ConfigError(path, "unknown key");
        }
    }
}

double get_number(const json& object, const std::string& path) {
    if (!object.is_number()) {
        throw ConfigError(path, "must be a number");
    }
    return object.get<double>();
}

int get_integer(const json& object, const std::string& path) {
    if (!object.is_number_integer()) {
        throw ConfigError(path, "must be an integer");
    }
    return object.get<int>();
}

bool get_boolean(const json& object, const std::string& path) {
    if (!object.is_boolean()) {
        throw ConfigError(path, "must be a boolean");
    }
    return object.get<bool>();
}

std::string get_string(const json& object, const std::string& path) {
    if (!object.is_string()) {
        throw ConfigError(path, "must be a string");
    }
    return object.get<std::string>();
}

std::vector<double> get_number_array(const json& object, const std::string& path) {
    if (!object.is_array() || object.empty()) {
        throw ConfigError(path, "must be a non-empty array of numbers");
    }
    std::vector<double> values;
    for (const auto& item : object) {
        values.push_back(get_number(item, path));
    }
    return values;
}

void check_range(double value, double lo, double hi, bool hi_open,
                 const std::string& path) {
    bool ok = value >= lo && (hi_open ? value < hi : value <= hi);
    if (!ok) {
        throw ConfigError(path, std::string("must lie in [") + std::to_string(lo) +
                                    ", " + std::to_string(hi) + (hi_open ? ")" : "]"));
    }
}

FitParam parse_fit_param(const std::string& name, const std::string& path) {
    if (name == "intrinsic_loss") return FitParam::kIntrinsicLoss;
    if (name == "detector_efficiency") return FitParam::kDetectorEfficiency;
    if (name == "dark_prob") return FitParam::kDarkProb;
    if (name == "p_pair") return FitParam::kPairProbability;
    throw ConfigError(path, "unknown fit parameter '" + name + "'");
}

bool is_surface_kind(const std::string& kind) {
    return kind == "gain-surface" || kind == "herald-curve" ||
           kind == "visibility-surface";
}

void parse_source(const json& section, RunConfig& config) {
    reject_unknown_keys(section, "source", {"p_pair", "max_pairs"});
    if (section.contains("p_pair")) {
        config.p_pair = get_number(section["p_pair"], "source.p_pair");
        check_range(config.p_pair, 0.0, 1.0, true, "source.p_pair");
    }
    if (section.contains("max_pairs")) {
        config.max_pairs = get_integer(section["max_pairs"], "source.max_pairs");
        if (config.max_pairs < 1) {
            throw ConfigError("source.max_pairs", "must be >= 1");
        }
    }
}

void parse_detector(const json& section, RunConfig& config) {
    reject_unknown_keys(section, "detector",
                        {"efficiency", "dark_prob", "number_resolving"});
    if (section.contains("efficiency")) {
        config.detector.efficiency =
            get_number(section["efficiency"], "detector.efficiency");
        check_range(config.detector.efficiency, 0.0, 1.0, false, "detector.efficiency");
    }
    if (section.contains("dark_prob")) {
        config.detector.dark_prob = get_number(section["dark_prob"], "detector.dark_prob");
        check_range(config.detector.dark_prob, 0.0, 1.0, true, "detector.dark_prob");
    }
    if (section.contains("number_resolving")) {
        config.detector.number_resolving =
            get_boolean(section["number_resolving"], "detector.number_resolving");
    }
}

void parse_amplifier(const json& section, RunConfig& config) {
    reject_unknown_keys(section, "amplifier",
                        {"t", "t_grid", "intrinsic_loss", "herald_rule", "cutoff"});
    if (section.contains("t") && section.contains("t_grid")) {
        throw ConfigError("amplifier.t", "give either t or t_grid, not both");
    }
    if (section.contains("t")) {
        config.transmissions = {get_number(section["t"], "amplifier.t")};
    } else if (section.contains("t_grid")) {
        config.transmissions = get_number_array(section["t_grid"], "amplifier.t_grid");
    }
    for (double t : config.transmissions) {
        if (!(t >= 0.0 && t < 1.0)) {
            std::string path = section.contains("t") ? "amplifier.t" : "amplifier.t_grid";
            throw ConfigError(path, "must lie in [0, 1)");
        }
    }
    if (section.contains("intrinsic_loss")) {
        config.intrinsic_loss =
            get_number(section["intrinsic_loss"], "amplifier.intrinsic_loss");
        check_range(config.intrinsic_loss, 0.0, 1.0, false, "amplifier.intrinsic_loss");
    }
    if (section.contains("herald_rule")) {
        std::string rule = get_string(section["herald_rule"], "amplifier.herald_rule");
        if (rule == "single_port_click") {
            config.herald_rule = HeraldRule::kSinglePortClick;
        } else if (rule == "click_and_no_click") {
            config.herald_rule = HeraldRule::kClickAndNoClick;
        } else {
            throw ConfigError("amplifier.herald_rule",
                              "must be 'single_port_click' or 'click_and_no_click'");
        }
    }
    if (section.contains("cutoff")) {
        config.cutoff = get_integer(section["cutoff"], "amplifier.cutoff");
        if (config.cutoff < 2) {
            throw ConfigError("amplifier.cutoff", "must be >= 2");
        }
    }
}

void parse_input(const json& section, RunConfig& config) {
    reject_unknown_keys(section, "input",
                        {"p", "p_grid", "distance_km", "attenuation_db_per_km"});
    int given = section.contains("p") + section.contains("p_grid") +
                section.contains("distance_km");
    if (given > 1) {
        throw ConfigError("input.p", "give exactly one of p, p_grid or distance_km");
    }
    if (section.contains("attenuation_db_per_km")) {
        config.attenuation_db_per_km =
            get_number(section["attenuation_db_per_km"], "input.attenuation_db_per_km");
        if (config.attenuation_db_per_km <= 0.0) {
            throw ConfigError("input.attenuation_db_per_km", "must be positive");
        }
    }
    if (section.contains("p")) {
        config.input_losses = {get_number(section["p"], "input.p")};
    } else if (section.contains("p_grid")) {
        config.input_losses = get_number_array(section["p_grid"], "input.p_grid");
    } else if (section.contains("distance_km")) {
        double km = get_number(section["distance_km"], "input.distance_km");
        if (km < 0.0) {
            throw ConfigError("input.distance_km", "must be non-negative");
        }
        config.distance_km = km;
        config.input_losses = {distance_to_loss(km, config.attenuation_db_per_km)};
    }
    for (double p : config.input_losses) {
        if (!(p >= 0.0 && p <= 1.0)) {
            std::string path = section.contains("p") ? "input.p" : "input.p_grid";
            throw ConfigError(path, "must lie in [0, 1]");
        }
    }
}

SweepQuantities parse_quantities(const json& array) {
    SweepQuantities q{false, false, false, false};
    if (!array.is_array() || array.empty()) {
        throw ConfigError("experiment.quantities", "must be a non-empty array");
    }
    for (const auto& item : array) {
        std::string name = get_string(item, "experiment.quantities");
        if (name == "gain") {
            q.gain = true;
        } else if (name == "herald_probability") {
            q.herald_probability = true;
        } else if (name == "herald_efficiency") {
            q.herald_efficiency = true;
        } else if (name == "visibility") {
            q.visibility = true;
        } else {
            throw ConfigError("experiment.quantities", "unknown quantity '" + name + "'");
        }
    }
    return q;
}

void parse_experiment(const json& section, const std::string& kind, RunConfig& config) {
    reject_unknown_keys(section, "experiment",
                        {"kind", "quantities", "output", "phases", "target_efficiency",
                         "overlap", "data", "free_params", "bounds"});
    if (section.contains("kind")) {
        config.kind = get_string(section["kind"], "experiment.kind");
        static const std::set<std::string> kKnown = {
            "gain-surface", "herald-curve", "visibility-surface", "fringe",
            "hom",          "optimize-t",   "fit"};
        if (!kKnown.count(config.kind)) {
            throw ConfigError("experiment.kind",
                              "unknown experiment kind '" + config.kind + "'");
        }
        if (config.kind != kind) {
            throw ConfigError("experiment.kind", "config is for '" + config.kind +
                                                     "' but the subcommand is '" + kind +
                                                     "'");
        }
    }
    if (section.contains("quantities")) {
        if (!is_surface_kind(kind)) {
            throw ConfigError("experiment.quantities",
                              "only valid for surface and curve experiments");
        }
        config.quantities = parse_quantities(section["quantities"]);
    }
    if (section.contains("output")) {
        config.output = get_string(section["output"], "experiment.output");
    }
    if (section.contains("phases")) {
        if (kind != "fringe" && kind != "visibility-surface") {
            throw ConfigError("experiment.phases",
                              "only valid for fringe and visibility-surface");
        }
        config.phases = get_number_array(section["phases"], "experiment.phases");
    }
    if (section.contains("target_efficiency")) {
        if (kind != "optimize-t") {
            throw ConfigError("experiment.target_efficiency",
                              "only valid for optimize-t");
        }
        config.target_efficiency =
            get_number(section["target_efficiency"], "experiment.target_efficiency");
        check_range(*config.target_efficiency, 0.0, 1.0, true,
                    "experiment.target_efficiency");
    }
    if (section.contains("overlap")) {
        if (kind != "hom") {
            throw ConfigError("experiment.overlap", "only valid for hom");
        }
        config.overlap = get_number(section["overlap"], "experiment.overlap");
        check_range(config.overlap, 0.0, 1.0, false, "experiment.overlap");
    }
    if (section.contains("data")) {
        if (kind != "fit") {
            throw ConfigError("experiment.data", "only valid for fit");
        }
        config.data_path = get_string(section["data"], "experiment.data");
    }
    if (section.contains("free_params") || section.contains("bounds")) {
        if (kind != "fit") {
            throw ConfigError("experiment.free_params", "only valid for fit");
        }
        if (!section.contains("free_params")) {
            throw ConfigError("experiment.free_params", "required when bounds are given");
        }
        if (!section["free_params"].is_array() || section["free_params"].empty()) {
            throw ConfigError("experiment.free_params", "must be a non-empty array");
        }
        if (section.contains("bounds")) {
            // Bounds may only constrain parameters that are actually free.
            for (const auto& [name, value] : section["bounds"].items()) {
                bool listed = false;
                for (const auto& item : section["free_params"]) {
                    if (item.is_string() && item.get<std::string>() == name) {
                        listed = true;
                        break;
                    }
                }
                if (!listed) {
                    throw ConfigError("experiment.bounds." + name,
                                      "parameter is not listed in free_params");
                }
            }
        }
        for (const auto& item : section["free_params"]) {
            std::string name = get_string(item, "experiment.free_params");
            FitParam param = parse_fit_param(name, "experiment.free_params");
            FitBounds bounds{0.0, 1.0};
            if (section.contains("bounds")) {
                const json& all = section["bounds"];
                if (!all.is_object()) {
                    throw ConfigError("experiment.bounds", "must be an object");
                }
                reject_unknown_keys(all, "experiment.bounds",
                                    {"intrinsic_loss", "detector_efficiency",
                                     "dark_prob", "p_pair"});
                if (all.contains(name)) {
                    auto pair = get_number_array(all[name],
                                                 "experiment.bounds." + name);
                    if (pair.size() != 2 || !(pair[0] < pair[1])) {
                        throw ConfigError("experiment.bounds." + name,
                                          "must be [lo, hi] with lo < hi");
                    }
                    bounds = FitBounds{pair[0], pair[1]};
                }
            }
            config.fit_bounds[param] = bounds;
        }
    }
}

}  // namespace

std::vector<double> default_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) {
        grid.push_back(0.5 + 0.0495 * i);
    }
    return grid;
}

std::string peek_kind(const std::string& json_text) {
    json document;
    try {
        document = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    if (document.is_object() && document.contains("experiment") &&
        document["experiment"].is_object() &&
        document["experiment"].contains("kind")) {
        return get_string(document["experiment"]["kind"], "experiment.kind");
    }
    return "gain-surface";
}

RunConfig parse_run_config(const std::string& json_text, const std::string& kind) {
    json document;
    try {
        document = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    if (!document.is_object()) {
        throw ConfigError("config", "top level must be a JSON object");
    }
    reject_unknown_keys(document, "",
                        {"source", "detector", "amplifier", "input", "experiment"});

    RunConfig config;
    if (document.contains("source")) parse_source(document["source"], config);
    if (document.contains("detector")) parse_detector(document["detector"], config);
    if (document.contains("amplifier")) parse_amplifier(document["amplifier"], config);
    if (document.contains("input")) parse_input(document["input"], config);
    if (document.contains("experiment")) {
        parse_experiment(document["experiment"], kind, config);
    }

    if (config.input_losses.empty() && is_surface_kind(kind)) {
        config.input_losses = default_grid();
    }
    if (config.transmissions.empty() && is_surface_kind(kind)) {
        config.transmissions = default_grid();
    }

    if (kind == "fringe" || kind == "optimize-t") {
        if (config.input_losses.size() != 1) {
            throw ConfigError("input.p", "this experiment needs a single loss value");
        }
    }
    if (kind == "fringe" && config.transmissions.size() != 1) {
        throw ConfigError("amplifier.t",
                          "this experiment needs a single transmission value");
    }
    if (kind == "optimize-t" && !config.target_efficiency) {
        throw ConfigError("experiment.target_efficiency", "required for optimize-t");
    }
    if (kind == "fit" && config.data_path.empty()) {
        throw ConfigError("experiment.data", "required for fit");
    }

    // Full range validation before any computation starts.
    to_amplifier_config(config).validate();
    return config;
}

AmplifierConfig to_amplifier_config(const RunConfig& config) {
    AmplifierConfig base;
    base.pair_probability = config.p_pair;
    base.source_max_pairs = config.max_pairs;
    base.detector_b = config.detector;
    base.intrinsic_loss = config.intrinsic_loss;
    base.herald_rule = config.herald_rule;
    base.cutoff = config.cutoff;
    base.input_loss = config.input_losses.empty() ? 0.5 : config.input_losses.front();
    base.transmission =
        config.transmissions.empty() ? 0.5 : config.transmissions.front();
    return base;
}

}  // namespace photonamp::cli
