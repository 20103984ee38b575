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

#include <benchmark/benchmark.h>

#include <random>

#include "photonamp/amplifier.hpp"
#include "photonamp/elements.hpp"
#include "photonamp/experiments.hpp"

using namespace photonamp;

namespace {

PureState dense_state(int cutoff) {
    ModeRegister reg({ModeInfo{"a", ModeRole::kAux}, ModeInfo{"b", ModeRole::kAux}},
                     cutoff);
    std::mt19937 rng(1234);
    std::normal_distribution<double> gauss;
    PureState::AmplitudeMap amps;
    for (int n1 = 0; n1 <= cutoff; ++n1) {
        for (int n2 = 0; n2 <= cutoff - n1; ++n2) {
            amps[OccupationVector({n1, n2})] = complex{gauss(rng), gauss(rng)};
        }
    }
    double norm2 = 0.0;
    for (auto& [occ, amp] : amps) norm2 += std::norm(amp);
    for (auto& [occ, amp] : amps) amp /= std::sqrt(norm2);
    return PureState(reg, std::move(amps));
}

void BM_BeamSplitter(benchmark::State& state) {
    PureState s = dense_state(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_beam_splitter(s, 0.42, "a", "b"));
    }
}
BENCHMARK(BM_BeamSplitter)->Arg(4)->Arg(8)->Arg(12);

void BM_RunAmplifierIdeal(benchmark::State& state) {
    AmplifierConfig cfg = AmplifierConfig::ideal(0.7, 0.95);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_amplifier(cfg));
    }
}
BENCHMARK(BM_RunAmplifierIdeal);

void BM_RunAmplifierDevice(benchmark::State& state) {
    AmplifierConfig cfg = AmplifierConfig::ideal(0.7, 0.95);
    cfg.pair_probability = 0.01;
    cfg.detector_b = DetectorModel{0.25, 1e-5, false};
    cfg.intrinsic_loss = 0.9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_amplifier(cfg));
    }
}
BENCHMARK(BM_RunAmplifierDevice);

void BM_GainSurface11x11(benchmark::State& state) {
    SweepSpec spec;
    for (int i = 0; i <= 10; ++i) {
        spec.input_losses.push_back(0.5 + 0.0495 * i);
        spec.transmissions.push_back(0.5 + 0.0495 * i);
    }
    spec.base = AmplifierConfig::ideal(0.5, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(spec));
    }
}
BENCHMARK(BM_GainSurface11x11);

void BM_HomMultiPair(benchmark::State& state) {
    SourceModel src{0.01, 2};
    DetectorModel det{0.25, 1e-5, false};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hom_coincidence(src, 1.0, det, det, 4));
    }
}
BENCHMARK(BM_HomMultiPair);

}  // namespace

BENCHMARK_MAIN();
