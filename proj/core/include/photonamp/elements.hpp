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

#ifndef PHOTONAMP_ELEMENTS_HPP
#define PHOTONAMP_ELEMENTS_HPP

#include <string>
#include <string_view>

#include "photonamp/fock.hpp"

namespace photonamp {

// Beam-splitter phase convention
// ------------------------------
// A beam splitter of power transmission t maps creation operators as
//
//     a1+ -> sqrt(t) a1+ + sqrt(1-t) a2+
//     a2+ -> sqrt(1-t) a1+ - sqrt(t) a2+
//
// i.e. the real orthogonal matrix [[sqrt(t), sqrt(1-t)], [sqrt(1-t),
// -sqrt(t)]]. All probabilities reported by the simulator (gain,
// heralding, visibility magnitude) are independent of this choice; fringe
// phase offsets are reproducible only relative to it. Note the matrix is
// an involution, so applying the same splitter twice is the identity,
// and at t=1 mode 2 acquires a sign flip per photon.

/// Declarative description of one optical transformation.
struct CircuitElement {
    enum class Kind { kBeamSplitter, kPhase, kLoss };

    Kind kind = Kind::kPhase;
    double parameter = 0.0;  // transmission t, angle phi, or transmission eta
    std::string mode_a;
    std::string mode_b;  // beam splitter only

    static CircuitElement beam_splitter(double t, std::string m1, std::string m2);
    static CircuitElement phase(double phi, std::string mode);
    static CircuitElement loss(double eta, std::string mode);
};

/// Two-mode beam splitter in the convention above. Norm preserving.
/// Occupations past the register cutoff are tolerated only when their
/// accumulated amplitude is below the pruning threshold; otherwise a
/// CutoffViolation is raised.
PureState apply_beam_splitter(const PureState& state, double t,
                              std::string_view mode1, std::string_view mode2);
Ensemble apply_beam_splitter(const Ensemble& ensemble, double t,
                             std::string_view mode1, std::string_view mode2);

/// Photon loss with transmission eta, expanded into Kraus branches: a
/// branch with n photons in the mode splits into up to n+1 branches with
/// binomial weights C(n,k) eta^k (1-eta)^(n-k) for k surviving photons.
/// Total ensemble weight is preserved.
Ensemble apply_loss(const Ensemble& ensemble, double eta, std::string_view mode);

/// Phase shifter: the amplitude of occupation n picks up exp(i n phi).
PureState apply_phase(const PureState& state, double phi, std::string_view mode);
Ensemble apply_phase(const Ensemble& ensemble, double phi, std::string_view mode);

/// Power transmission of the beam splitter equivalent to a half-wave
/// plate at angle theta followed by a polarising beam splitter, for an
/// H-polarised input: t = cos^2(2 theta). The angle is wrapped modulo
/// pi/2.
double hwp_as_beam_splitter(double theta);

/// Applies one declarative element to an ensemble.
Ensemble apply_element(const Ensemble& ensemble, const CircuitElement& element);

}  // namespace photonamp

#endif
