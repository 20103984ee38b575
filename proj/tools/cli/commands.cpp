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

#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "config.hpp"
#include "output.hpp"

namespace photonamp::cli {

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    int seed = 0;  // reserved; the engine is deterministic
    int cutoff_override = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("config", "cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunConfig load_config(const CommonOptions& options, const std::string& kind) {
    RunConfig config = parse_run_config(read_file(options.config_path), kind);
    if (options.cutoff_override > 0) {
        config.cutoff = options.cutoff_override;
        to_amplifier_config(config).validate();
    }
    return config;
}

std::string output_path(const CommonOptions& options, const RunConfig& config) {
    if (!options.out_path.empty()) {
        return options.out_path;
    }
    if (!config.output.empty()) {
        return config.output;
    }
    throw ConfigError("experiment.output", "no output path given (use --out)");
}

void write_rows(const std::vector<SweepRow>& rows, const CommonOptions& options,
                const RunConfig& config) {
    std::string path = output_path(options, config);
    if (options.format == "dat") {
        write_dat(rows, path);
    } else {
        write_csv(rows, path);
    }
    std::size_t failed = 0;
    for (const auto& row : rows) {
        if (row.error) ++failed;
    }
    std::cout << "wrote " << rows.size() << " rows to " << path;
    if (failed > 0) {
        std::cout << " (" << failed << " failed grid points)";
    }
    std::cout << "\n";
}

int run_surface(const CommonOptions& options, const std::string& kind) {
    RunConfig config = load_config(options, kind);

    SweepSpec spec;
    spec.input_losses = config.input_losses;
    spec.transmissions = config.transmissions;
    spec.base = to_amplifier_config(config);
    spec.base.input_coherent = kind == "visibility-surface";
    spec.fringe_phases = config.phases;
    if (config.quantities) {
        spec.quantities = *config.quantities;
    } else if (kind == "gain-surface") {
        spec.quantities = SweepQuantities{true, true, true, false};
    } else if (kind == "herald-curve") {
        spec.quantities = SweepQuantities{false, true, true, false};
    } else {
        spec.quantities = SweepQuantities{false, false, false, true};
    }

    std::vector<SweepRow> rows = sweep(spec);
    if (config.distance_km) {
        for (auto& row : rows) {
            row.distance_km = *config.distance_km;
        }
    }
    write_rows(rows, options, config);
    return 0;
}

int run_fringe(const CommonOptions& options) {
    RunConfig config = load_config(options, "fringe");
    AmplifierConfig cfg = to_amplifier_config(config);
    cfg.input_coherent = true;
    std::vector<double> phases =
        config.phases.empty() ? SweepSpec::default_fringe_phases() : config.phases;

    FringeResult result = fringe_visibility(cfg, phases);
    write_fringe_csv(result.fringe, result.visibility,
                     output_path(options, config), options.format == "dat");
    std::cout << "visibility " << format_real(result.visibility)
              << " herald_probability " << format_real(result.run.herald_probability)
              << "\n";
    return 0;
}

int run_hom(const CommonOptions& options) {
    RunConfig config = load_config(options, "hom");
    SourceModel source{config.p_pair, config.max_pairs};
    HomResult result = hom_coincidence(source, config.overlap, config.detector,
                                       config.detector, config.cutoff);

    std::string path = output_path(options, config);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write to '" + path + "'");
    }
    if (options.format == "dat") {
        out << "# p_pair overlap coincidence reference visibility\n"
            << format_real(config.p_pair) << ' ' << format_real(config.overlap) << ' '
            << format_real(result.coincidence_probability) << ' '
            << format_real(result.reference_coincidence) << ' '
            << format_real(result.visibility) << '\n';
    } else {
        out << "p_pair,overlap,coincidence,reference,visibility\n"
            << format_real(config.p_pair) << ',' << format_real(config.overlap) << ','
            << format_real(result.coincidence_probability) << ','
            << format_real(result.reference_coincidence) << ','
            << format_real(result.visibility) << '\n';
    }
    std::cout << "coincidence " << format_real(result.coincidence_probability)
              << " visibility " << format_real(result.visibility) << "\n";
    return 0;
}

int run_optimize_t(const CommonOptions& options) {
    RunConfig config = load_config(options, "optimize-t");
    AmplifierConfig base = to_amplifier_config(config);
    double p = config.input_losses.front();
    double t_min = find_min_t(p, *config.target_efficiency, base);

    std::string path = output_path(options, config);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write to '" + path + "'");
    }
    if (options.format == "dat") {
        out << "# p target_efficiency t_min\n"
            << format_real(p) << ' ' << format_real(*config.target_efficiency) << ' '
            << format_real(t_min) << '\n';
    } else {
        out << "p,target_efficiency,t_min\n"
            << format_real(p) << ',' << format_real(*config.target_efficiency) << ','
            << format_real(t_min) << '\n';
    }
    std::cout << "t_min " << format_real(t_min) << "\n";
    return 0;
}

int run_fit(const CommonOptions& options) {
    RunConfig config = load_config(options, "fit");
    std::vector<SweepRow> data = read_csv(config.data_path);
    FitResult result = fit_model(data, config.fit_bounds, to_amplifier_config(config));

    nlohmann::json document;
    for (const auto& [param, value] : result.params) {
        document["params"][fit_param_name(param)] = value;
    }
    document["residual"] = result.residual;
    std::string text = document.dump(2) + "\n";

    if (!options.out_path.empty() || !config.output.empty()) {
        std::string path = output_path(options, config);
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw Error("cannot write to '" + path + "'");
        }
        out << text;
    }
    std::cout << text;
    return 0;
}

int dispatch(const CommonOptions& options, const std::string& kind) {
    if (kind == "gain-surface" || kind == "herald-curve" ||
        kind == "visibility-surface") {
        return run_surface(options, kind);
    }
    if (kind == "fringe") return run_fringe(options);
    if (kind == "hom") return run_hom(options);
    if (kind == "optimize-t") return run_optimize_t(options);
    if (kind == "fit") return run_fit(options);
    if (kind == "validate") {
        std::string text = read_file(options.config_path);
        parse_run_config(text, peek_kind(text));
        std::cout << "config OK\n";
        return 0;
    }
    throw Error("unknown subcommand '" + kind + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Heralded photon amplifier simulator"};
    app.require_subcommand(1);

    static const std::vector<std::string> kKinds = {
        "gain-surface", "herald-curve", "visibility-surface", "fringe",
        "hom",          "optimize-t",   "fit",                "validate"};
    static const std::map<std::string, std::string> kHelp = {
        {"gain-surface", "gain over a (p, t) grid"},
        {"herald-curve", "heralding probability and efficiency over a grid"},
        {"visibility-surface", "fringe visibility over a (p, t) grid"},
        {"fringe", "interference fringe at one (p, t) point"},
        {"hom", "Hong-Ou-Mandel coincidence test of the pair source"},
        {"optimize-t", "smallest t reaching a target heralded efficiency"},
        {"fit", "fit device parameters to measured sweep rows"},
        {"validate", "parse and validate a config file"},
    };

    CommonOptions options;
    std::string selected;
    for (const std::string& kind : kKinds) {
        CLI::App* sub = app.add_subcommand(kind, kHelp.at(kind));
        sub->add_option("--config", options.config_path, "JSON config file")
            ->required();
        sub->add_option("--out", options.out_path, "output file path");
        sub->add_option("--format", options.format, "output format")
            ->check(CLI::IsMember({"csv", "dat"}));
        sub->add_option("--seed", options.seed,
                        "reserved; the engine is deterministic");
        sub->add_option("--cutoff", options.cutoff_override,
                        "override the Fock cutoff");
        sub->callback([&selected, kind] { selected = kind; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return dispatch(options, selected);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("photonamp");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace photonamp::cli
