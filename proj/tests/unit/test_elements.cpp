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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "../oracles.hpp"

using namespace photonamp;

namespace {

ModeRegister two_modes(int cutoff = 4) {
    return ModeRegister({ModeInfo{"a", ModeRole::kAux}, ModeInfo{"b", ModeRole::kAux}},
                        cutoff);
}

OccupationVector occ(std::vector<int> counts) {
    return OccupationVector(std::move(counts));
}

}  // namespace

TEST_CASE("balanced splitter on a single photon") {
    ModeRegister reg = two_modes();
    PureState out = apply_beam_splitter(make_basis_state(reg, occ({1, 0})), 0.5, "a", "b");
    CHECK(out.amplitude(occ({1, 0})).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(out.amplitude(occ({0, 1})).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(out.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("t=1 keeps photon content; mode 2 flips sign per photon") {
    ModeRegister reg = two_modes();
    PureState s1 = apply_beam_splitter(make_basis_state(reg, occ({2, 0})), 1.0, "a", "b");
    CHECK(s1.amplitude(occ({2, 0})).real() == doctest::Approx(1.0));

    PureState s2 = apply_beam_splitter(make_basis_state(reg, occ({0, 1})), 1.0, "a", "b");
    CHECK(s2.amplitude(occ({0, 1})).real() == doctest::Approx(-1.0));
}

TEST_CASE("two photons bunch on a balanced splitter") {
    ModeRegister reg = two_modes();
    PureState out = apply_beam_splitter(make_basis_state(reg, occ({1, 1})), 0.5, "a", "b");
    // The |1,1> component cancels exactly, not merely within tolerance.
    CHECK(out.amplitude(occ({1, 1})) == complex{0.0, 0.0});
    CHECK(out.amplitude(occ({2, 0})).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(out.amplitude(occ({0, 2})).real() == doctest::Approx(-1.0 / std::sqrt(2.0)));
}

TEST_CASE("beam splitter matches the polynomial-expansion oracle") {
    ModeRegister reg = two_modes(6);
    for (double t : {0.0, 0.3, 0.5, 0.77, 1.0}) {
        for (int n1 = 0; n1 <= 3; ++n1) {
            for (int n2 = 0; n2 <= 3; ++n2) {
                PureState out =
                    apply_beam_splitter(make_basis_state(reg, occ({n1, n2})), t, "a", "b");
                auto expected = oracle::beam_splitter_oracle(n1, n2, t);
                for (const auto& [mono, amp] : expected) {
                    CHECK(out.amplitude(occ({mono.first, mono.second})).real() ==
                          doctest::Approx(amp).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("unitarity on random states") {
    ModeRegister reg({ModeInfo{"a", ModeRole::kAux}, ModeInfo{"b", ModeRole::kAux},
                      ModeInfo{"c", ModeRole::kAux}},
                     4);
    std::mt19937 rng(123456);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        PureState s = oracle::random_state(rng, reg, 4, reg.cutoff() / 2);
        double t = uniform(rng);
        PureState after = apply_beam_splitter(s, t, "a", "b");
        after = apply_phase(after, uniform(rng) * 6.28, "c");
        CHECK(std::abs(after.norm_squared() - s.norm_squared()) <= 1e-12);
    }
}

TEST_CASE("splitter followed by its complement swaps the modes up to sign") {
    // B(1-t) applied to the swapped pair undoes B(t) into a mode swap
    // with (-1)^(n2) on the original second mode.
    ModeRegister reg = two_modes();
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        PureState s = oracle::random_state(rng, reg, 4, reg.cutoff() / 2);
        double t = uniform(rng);
        PureState out = apply_beam_splitter(apply_beam_splitter(s, t, "a", "b"),
                                            1.0 - t, "b", "a");
        for (const auto& [o, amp] : s.amplitudes()) {
            complex expected = amp * (o[1] % 2 == 0 ? 1.0 : -1.0);
            complex actual = out.amplitude(occ({o[1], o[0]}));
            CHECK(std::abs(actual - expected) <= 1e-12);
        }
    }
}

TEST_CASE("cutoff overflow") {
    ModeRegister reg = two_modes(2);
    // |2,2> can reach |4,0>: real amplitude past the cutoff must throw.
    CHECK_THROWS_AS(
        apply_beam_splitter(make_basis_state(reg, occ({2, 2})), 0.5, "a", "b"),
        CutoffViolation);

    // A component whose overflow amplitude stays below the pruning
    // threshold is dropped silently.
    PureState tiny(reg, {{occ({0, 0}), 1.0}, {occ({2, 2}), 1.5e-15}});
    PureState out = apply_beam_splitter(tiny, 0.5, "a", "b");
    CHECK(out.amplitude(occ({0, 0})).real() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("loss channel basics") {
    ModeRegister reg = two_modes();

    Ensemble one = Ensemble::from_pure(make_basis_state(reg, occ({1, 0})));
    Ensemble kept = apply_loss(one, 1.0, "a");
    CHECK(kept.branches().size() == 1);
    CHECK(photon_number_distribution(kept, "a").at(1) == doctest::Approx(1.0));

    Ensemble dumped = apply_loss(one, 0.0, "a");
    CHECK(dumped.total_weight() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(photon_number_distribution(dumped, "a").at(0) == doctest::Approx(1.0));
}

TEST_CASE("loss channel is binomial") {
    ModeRegister reg = two_modes();
    Ensemble two = Ensemble::from_pure(make_basis_state(reg, occ({2, 0})));
    auto d = photon_number_distribution(apply_loss(two, 0.5, "a"), "a");
    CHECK(d.at(2) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(d.at(1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.at(0) == doctest::Approx(0.25).epsilon(1e-12));

    for (int n = 0; n <= 4; ++n) {
        for (double eta : {0.1, 0.25, 0.5, 0.9}) {
            Ensemble in = Ensemble::from_pure(make_basis_state(reg, occ({n, 0})));
            auto dist = photon_number_distribution(apply_loss(in, eta, "a"), "a");
            for (int k = 0; k <= n; ++k) {
                double expected = oracle::binomial_pmf(n, eta, k);
                double actual = dist.count(k) ? dist.at(k) : 0.0;
                CHECK(std::abs(actual - expected) <= 1e-12);
            }
        }
    }
}

TEST_CASE("loss conserves weight and commutes across modes") {
    ModeRegister reg({ModeInfo{"a", ModeRole::kAux}, ModeInfo{"b", ModeRole::kAux}}, 3);
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        Ensemble e = oracle::random_ensemble(rng, reg);
        double eta1 = uniform(rng);
        double eta2 = uniform(rng);
        Ensemble ab = apply_loss(apply_loss(e, eta1, "a"), eta2, "b");
        Ensemble ba = apply_loss(apply_loss(e, eta2, "b"), eta1, "a");
        CHECK(std::abs(ab.total_weight() - e.total_weight()) <= 1e-12);
        CHECK(oracle::density_distance(oracle::density_map(ab), oracle::density_map(ba)) <=
              1e-12);
    }
}

TEST_CASE("phase shifter") {
    ModeRegister reg = two_modes();
    PureState one = make_basis_state(reg, occ({1, 0}));

    PureState same = apply_phase(one, 0.0, "a");
    CHECK(same.amplitude(occ({1, 0})) == complex{1.0, 0.0});

    PureState flipped = apply_phase(one, std::numbers::pi, "a");
    CHECK(flipped.amplitude(occ({1, 0})).real() == doctest::Approx(-1.0));

    PureState plus(reg, {{occ({1, 0}), 1.0 / std::sqrt(2.0)},
                         {occ({0, 1}), 1.0 / std::sqrt(2.0)}});
    PureState rotated = apply_phase(plus, std::numbers::pi / 2.0, "a");
    CHECK(rotated.amplitude(occ({1, 0})).imag() ==
          doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(rotated.amplitude(occ({0, 1})).real() ==
          doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("half-wave plate as beam splitter") {
    const double pi = std::numbers::pi;
    CHECK(hwp_as_beam_splitter(0.0) == doctest::Approx(1.0));
    CHECK(hwp_as_beam_splitter(pi / 8.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(hwp_as_beam_splitter(pi / 4.0) == doctest::Approx(0.0).epsilon(1e-12));
    // wraps modulo pi/2
    CHECK(hwp_as_beam_splitter(pi / 2.0 + pi / 8.0) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("circuit element validation") {
    CHECK_THROWS_AS(CircuitElement::beam_splitter(1.2, "a", "b"), Error);
    CHECK_THROWS_AS(CircuitElement::beam_splitter(0.5, "a", "a"), Error);
    CHECK_THROWS_AS(CircuitElement::loss(-0.1, "a"), Error);

    ModeRegister reg = two_modes();
    Ensemble e = Ensemble::from_pure(make_basis_state(reg, occ({1, 0})));
    Ensemble out = apply_element(e, CircuitElement::beam_splitter(0.5, "a", "b"));
    CHECK(photon_number_distribution(out, "b").at(1) == doctest::Approx(0.5));
}
