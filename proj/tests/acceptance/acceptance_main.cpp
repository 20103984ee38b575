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

// Acceptance suite: every release-gating claim of the simulator, one
// pass/fail line each, with pinned tolerances and runtime budgets.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "photonamp/amplifier.hpp"
#include "photonamp/elements.hpp"
#include "photonamp/experiments.hpp"

#include "../oracles.hpp"
#include "commands.hpp"
#include "output.hpp"

using namespace photonamp;

namespace {

int g_failures = 0;

void require(bool condition, const std::string& detail) {
    if (!condition) {
        throw std::runtime_error(detail);
    }
}

void require_close(double actual, double expected, double tol,
                   const std::string& what) {
    if (!(std::abs(actual - expected) <= tol)) {
        std::ostringstream msg;
        msg.precision(12);
        msg << what << ": got " << actual << ", want " << expected << " +/- " << tol;
        throw std::runtime_error(msg.str());
    }
}

void run_criterion(const std::string& name, double budget_seconds,
                   const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    try {
        body();
        double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        if (elapsed > budget_seconds) {
            std::printf("[FAIL] %s (took %.2fs, budget %.0fs)\n", name.c_str(),
                        elapsed, budget_seconds);
            ++g_failures;
            return;
        }
        std::printf("[PASS] %s (%.2fs)\n", name.c_str(), elapsed);
    } catch (const std::exception& e) {
        std::printf("[FAIL] %s: %s\n", name.c_str(), e.what());
        ++g_failures;
    }
}

// 1. Unit gain at the teleportation point.
void teleportation_point() {
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        AmplifierResult r = run_amplifier(AmplifierConfig::ideal(p, 0.5));
        require_close(*r.gain, 1.0, 1e-9, "gain at t=0.5, p=" + std::to_string(p));
    }
}

// 2. Gain above 100 in the high-loss, high-transmission corner.
void high_gain_corner() {
    double closed = gain_ideal(0.999, 0.995);
    require_close(closed, 166.8, 0.1, "closed-form gain at (t=0.999, p=0.995)");
    require(closed > 100.0, "gain must exceed 100");
    AmplifierResult r = run_amplifier(AmplifierConfig::ideal(0.995, 0.999));
    require(std::abs(*r.gain - closed) / closed <= 1e-6,
            "full simulation deviates from the closed form by more than 1e-6");
}

// 3. 20 km of fibre still heralds with more than 83% efficiency.
void twenty_km_claim() {
    double p20 = distance_to_loss(20.0, 0.24);
    require_close(p20, 0.6689, 1e-4, "loss after 20 km at 0.24 dB/km");

    const double p = 0.6689;
    double eff = herald_efficiency_ideal(0.95, p);
    require_close(eff, 0.9038, 1e-4, "ideal heralded efficiency at (p=0.6689, t=0.95)");
    require(eff >= 0.83, "ideal efficiency must reach 0.83");

    AmplifierConfig cfg = AmplifierConfig::ideal(p, 0.95);
    cfg.detector_b.number_resolving = false;
    cfg.herald_rule = HeraldRule::kSinglePortClick;
    AmplifierResult r = run_amplifier(cfg);
    require_close(r.herald_efficiency, 0.8628, 1e-4,
                  "single-port click/no-count heralded efficiency");
    require(r.herald_efficiency >= 0.83, "non-resolving efficiency must reach 0.83");
}

// 4. Heralded efficiency stays above 80% for t >= 0.95 at 70% loss.
void high_loss_efficiency_floor() {
    SweepSpec spec;
    spec.input_losses = {0.70};
    spec.transmissions = {0.95, 0.96, 0.97, 0.98, 0.99, 0.995, 0.999};
    spec.base = AmplifierConfig::ideal(0.70, 0.95);
    for (const SweepRow& row : sweep(spec)) {
        require(!row.error.has_value(), "sweep point failed");
        require(*row.herald_efficiency >= 0.80,
                "efficiency below 0.80 at t=" + std::to_string(row.transmission));
    }
}

// 5. Full Fock simulation against the closed forms on a 5x5 grid.
void oracle_equivalence() {
    for (double p : {0.0, 0.25, 0.5, 0.7, 0.9}) {
        for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            AmplifierResult r = run_amplifier(AmplifierConfig::ideal(p, t));
            require_close(*r.gain, oracle::gain_closed_form(t, p), 1e-9,
                          "gain at (p,t)=(" + std::to_string(p) + "," +
                              std::to_string(t) + ")");
            require_close(r.herald_efficiency, oracle::efficiency_closed_form(t, p),
                          1e-9,
                          "efficiency at (p,t)=(" + std::to_string(p) + "," +
                              std::to_string(t) + ")");
        }
    }
}

// 6. Exact HOM null for one pair; multi-pair visibility in [0.95, 1].
void hom_visibility() {
    DetectorModel click{1.0, 0.0, false};
    HomResult single = hom_coincidence(SourceModel{0.01, 1}, 1.0, click, click, 4);
    require(single.coincidence_probability == 0.0,
            "single-pair coincidence must vanish exactly");

    HomResult multi = hom_coincidence(SourceModel{0.01, 2}, 1.0, click, click, 4);
    require(multi.visibility >= 0.95 && multi.visibility <= 1.0,
            "multi-pair visibility " + std::to_string(multi.visibility) +
                " outside [0.95, 1.00]");
}

// 7. Fringe visibility: unity at balance, 0.8 at (p=0.5, t=0.8).
void visibility_balance() {
    auto phases = SweepSpec::default_fringe_phases();
    for (double p : {0.2, 0.5, 0.8}) {
        AmplifierConfig cfg = AmplifierConfig::ideal(p, p);  // (1-p)t = p(1-t)
        cfg.input_coherent = true;
        require_close(fringe_visibility(cfg, phases).visibility, 1.0, 1e-9,
                      "visibility at balance, p=" + std::to_string(p));
    }
    AmplifierConfig cfg = AmplifierConfig::ideal(0.5, 0.8);
    cfg.input_coherent = true;
    require_close(fringe_visibility(cfg, phases).visibility, 0.8, 1e-9,
                  "visibility at (p=0.5, t=0.8)");
}

// 8a. Unitarity and weight conservation on 1000 random states.
void property_conservation() {
    ModeRegister reg({ModeInfo{"a", ModeRole::kAux}, ModeInfo{"b", ModeRole::kAux},
                      ModeInfo{"c", ModeRole::kAux}},
                     4);
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        PureState s = oracle::random_state(rng, reg, 4, reg.cutoff() / 2);
        double t = uniform(rng);
        PureState u = apply_phase(apply_beam_splitter(s, t, "a", "b"),
                                  uniform(rng) * 6.28, "c");
        require(std::abs(u.norm_squared() - s.norm_squared()) <= 1e-12,
                "norm not preserved");

        Ensemble e = Ensemble::from_pure(s);
        Ensemble lossy = apply_loss(e, uniform(rng), "a");
        require(std::abs(lossy.total_weight() - e.total_weight()) <= 1e-12,
                "loss channel weight not preserved");
    }
}

// 8b. Loss-channel statistics against the analytic binomial for n <= 4.
void property_binomial_loss() {
    ModeRegister reg({ModeInfo{"a", ModeRole::kAux}, ModeInfo{"b", ModeRole::kAux}}, 4);
    for (int n = 0; n <= 4; ++n) {
        for (double eta : {0.1, 0.25, 0.5, 0.75, 0.9}) {
            Ensemble in = Ensemble::from_pure(
                make_basis_state(reg, OccupationVector({n, 0})));
            auto dist = photon_number_distribution(apply_loss(in, eta, "a"), "a");
            for (int k = 0; k <= n; ++k) {
                double expected = oracle::binomial_pmf(n, eta, k);
                double actual = dist.count(k) ? dist.at(k) : 0.0;
                require(std::abs(actual - expected) <= 1e-12,
                        "binomial loss statistics mismatch");
            }
        }
    }
}

// 8c. Fit round trip recovers a planted intrinsic loss of 0.8.
void property_fit_round_trip() {
    AmplifierConfig truth = AmplifierConfig::ideal(0.5, 0.5);
    truth.detector_b = DetectorModel{0.25, 0.0, false};
    truth.intrinsic_loss = 0.8;
    SweepSpec spec;
    spec.input_losses = {0.5, 0.6, 0.7};
    spec.transmissions = {0.8, 0.9, 0.95};
    spec.base = truth;
    spec.quantities = SweepQuantities{false, true, true, false};
    auto data = sweep(spec);

    AmplifierConfig base = truth;
    base.intrinsic_loss = 1.0;
    FitResult fit = fit_model(data, {{FitParam::kIntrinsicLoss, FitBounds{0.5, 1.0}}},
                              base);
    require_close(fit.params.at(FitParam::kIntrinsicLoss), 0.8, 1e-3,
                  "recovered intrinsic loss");
}

// 8d. Byte-identical CLI output across two runs of the same config.
void property_cli_determinism() {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "photonamp_acceptance";
    fs::create_directories(dir);
    fs::path config = dir / "surface.json";
    {
        std::ofstream out(config, std::ios::binary);
        out << R"({
          "detector": { "efficiency": 0.25, "dark_prob": 1e-5, "number_resolving": false },
          "amplifier": { "t_grid": [0.5, 0.75, 0.95], "intrinsic_loss": 0.9, "cutoff": 4 },
          "input": { "p_grid": [0.5, 0.7, 0.9] },
          "experiment": { "kind": "gain-surface" }
        })";
    }
    fs::path out1 = dir / "a.csv";
    fs::path out2 = dir / "b.csv";
    int rc1 = 0;
    int rc2 = 0;
    {
        // Keep the tool's progress line out of the criterion report.
        std::ostringstream sink;
        auto* saved = std::cout.rdbuf(sink.rdbuf());
        rc1 = cli::run_cli({"gain-surface", "--config", config.string(), "--out",
                            out1.string()});
        rc2 = cli::run_cli({"gain-surface", "--config", config.string(), "--out",
                            out2.string()});
        std::cout.rdbuf(saved);
    }
    require(rc1 == 0, "first run failed");
    require(rc2 == 0, "second run failed");
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    };
    std::string first = slurp(out1);
    require(!first.empty() && first == slurp(out2),
            "outputs differ between identical runs");
}

}  // namespace

int main() {
    run_criterion("1. unit gain at the teleportation point t=1/2", 1.0,
                  teleportation_point);
    run_criterion("2. gain 166.8 +/- 0.1 at (t=0.999, p=0.995), sim agrees to 1e-6",
                  1.0, high_gain_corner);
    run_criterion("3. 20 km -> p=0.6689; efficiency 0.9038 ideal / 0.8628 non-resolving, both >= 0.83",
                  5.0, twenty_km_claim);
    run_criterion("4. heralded efficiency >= 0.80 for t >= 0.95 at p=0.70", 5.0,
                  high_loss_efficiency_floor);
    run_criterion("5. full Fock simulation matches closed forms to 1e-9 on a 5x5 grid",
                  10.0, oracle_equivalence);
    run_criterion("6. exact HOM null; multi-pair visibility in [0.95, 1.00]", 10.0,
                  hom_visibility);
    run_criterion("7. fringe visibility 1 at balance and 0.8 at (p=0.5, t=0.8)", 5.0,
                  visibility_balance);
    run_criterion("8a. unitarity and weight conservation on 1000 random states", 60.0,
                  property_conservation);
    run_criterion("8b. loss channel matches the analytic binomial for n <= 4", 60.0,
                  property_binomial_loss);
    run_criterion("8c. fit round trip recovers intrinsic loss 0.8 within 1e-3", 60.0,
                  property_fit_round_trip);
    run_criterion("8d. CLI output is byte-identical across runs", 60.0,
                  property_cli_determinism);

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
