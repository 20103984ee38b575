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

#include "photonamp/elements.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace photonamp {

namespace {

constexpr int kMaxFactorial = 64;

double factorial(int n) {
    static const auto table = [] {
        std::array<double, kMaxFactorial + 1> t{};
        t[0] = 1.0;
        for (int i = 1; i <= kMaxFactorial; ++i) {
            t[i] = t[i - 1] * static_cast<double>(i);
        }
        return t;
    }();
    return table.at(static_cast<std::size_t>(n));
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// Integer power with 0^0 == 1.
double ipow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

void check_unit_interval(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(std::string(name) + " must lie in [0, 1]");
    }
}

}  // namespace

CircuitElement CircuitElement::beam_splitter(double t, std::string m1, std::string m2) {
    check_unit_interval(t, "beam splitter transmission");
    if (m1 == m2) {
        throw Error("beam splitter modes must be distinct");
    }
    return CircuitElement{Kind::kBeamSplitter, t, std::move(m1), std::move(m2)};
}

CircuitElement CircuitElement::phase(double phi, std::string mode) {
    return CircuitElement{Kind::kPhase, phi, std::move(mode), {}};
}

CircuitElement CircuitElement::loss(double eta, std::string mode) {
    check_unit_interval(eta, "loss transmission");
    return CircuitElement{Kind::kLoss, eta, std::move(mode), {}};
}

PureState apply_beam_splitter(const PureState& state, double t,
                              std::string_view mode1, std::string_view mode2) {
    check_unit_interval(t, "beam splitter transmission");
    const ModeRegister& reg = state.mode_register();
    std::size_t i1 = reg.index_of(mode1);
    std::size_t i2 = reg.index_of(mode2);
    if (i1 == i2) {
        throw Error("beam splitter modes must be distinct");
    }
    const double rt = std::sqrt(t);
    const double rr = std::sqrt(1.0 - t);

    PureState::AmplitudeMap out;
    for (const auto& [occ, amp] : state.amplitudes()) {
        const int n1 = occ[i1];
        const int n2 = occ[i2];
        const double in_norm = std::sqrt(factorial(n1) * factorial(n2));
        // Expand (rt a1+ + rr a2+)^n1 (rr a1+ - rt a2+)^n2 term by term; j
        // and k count the quanta each factor sends to mode 1.
        for (int j = 0; j <= n1; ++j) {
            for (int k = 0; k <= n2; ++k) {
                const int m = j + k;
                const int l = n1 + n2 - m;
                double coeff = binomial(n1, j) * binomial(n2, k) *
                               ipow(rt, j) * ipow(rr, n1 - j) *
                               ipow(rr, k) * ipow(-rt, n2 - k) *
                               std::sqrt(factorial(m) * factorial(l)) / in_norm;
                if (coeff == 0.0) continue;
                out[occ.with(i1, m).with(i2, l)] += amp * coeff;
            }
        }
    }

    // Components past the cutoff may only be dropped when negligible.
    PureState::AmplitudeMap kept;
    for (auto& [occ, amp] : out) {
        if (occ[i1] > reg.cutoff() || occ[i2] > reg.cutoff()) {
            if (std::abs(amp) >= kAmplitudePruneThreshold) {
                throw CutoffViolation("beam splitter drives occupation " + occ.str() +
                                      " past cutoff " + std::to_string(reg.cutoff()));
            }
            continue;
        }
        kept.emplace(occ, amp);
    }
    return PureState(reg, std::move(kept));
}

Ensemble apply_beam_splitter(const Ensemble& ensemble, double t,
                             std::string_view mode1, std::string_view mode2) {
    Ensemble out(ensemble.mode_register());
    for (const auto& branch : ensemble.branches()) {
        out.add_branch(branch.weight, apply_beam_splitter(branch.state, t, mode1, mode2));
    }
    return out;
}

Ensemble apply_loss(const Ensemble& ensemble, double eta, std::string_view mode) {
    check_unit_interval(eta, "loss transmission");
    std::size_t idx = ensemble.mode_register().index_of(mode);
    Ensemble out(ensemble.mode_register());
    for (const auto& branch : ensemble.branches()) {
        int n_max = 0;
        for (const auto& [occ, amp] : branch.state.amplitudes()) {
            n_max = std::max(n_max, occ[idx]);
        }
        // Kraus operator K_k removes k photons from the mode.
        for (int k = 0; k <= n_max; ++k) {
            PureState::AmplitudeMap amps;
            for (const auto& [occ, amp] : branch.state.amplitudes()) {
                const int n = occ[idx];
                if (n < k) continue;
                double factor = std::sqrt(binomial(n, k) * ipow(eta, n - k) *
                                          ipow(1.0 - eta, k));
                if (factor == 0.0) continue;
                amps[occ.with(idx, n - k)] += amp * factor;
            }
            PureState part(ensemble.mode_register(), std::move(amps));
            double w = part.norm_squared();
            if (w > 0.0) {
                out.add_branch(branch.weight * w, part.normalised());
            }
        }
    }
    return out;
}

PureState apply_phase(const PureState& state, double phi, std::string_view mode) {
    std::size_t idx = state.mode_register().index_of(mode);
    PureState::AmplitudeMap amps;
    for (const auto& [occ, amp] : state.amplitudes()) {
        amps.emplace(occ, amp * std::polar(1.0, occ[idx] * phi));
    }
    return PureState(state.mode_register(), std::move(amps));
}

Ensemble apply_phase(const Ensemble& ensemble, double phi, std::string_view mode) {
    Ensemble out(ensemble.mode_register());
    for (const auto& branch : ensemble.branches()) {
        out.add_branch(branch.weight, apply_phase(branch.state, phi, mode));
    }
    return out;
}

double hwp_as_beam_splitter(double theta) {
    const double half_pi = std::numbers::pi / 2.0;
    double wrapped = std::fmod(theta, half_pi);
    if (wrapped < 0.0) wrapped += half_pi;
    double c = std::cos(2.0 * wrapped);
    return c * c;
}

Ensemble apply_element(const Ensemble& ensemble, const CircuitElement& element) {
    switch (element.kind) {
        case CircuitElement::Kind::kBeamSplitter:
            return apply_beam_splitter(ensemble, element.parameter, element.mode_a,
                                       element.mode_b);
        case CircuitElement::Kind::kPhase:
            return apply_phase(ensemble, element.parameter, element.mode_a);
        case CircuitElement::Kind::kLoss:
            return apply_loss(ensemble, element.parameter, element.mode_a);
    }
    throw Error("unknown circuit element kind");
}

}  // namespace photonamp
