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

#include "photonamp/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace photonamp {

namespace {

constexpr double kBranchWeightFloor = 1e-30;

}  // namespace

ModeRegister::ModeRegister(std::vector<ModeInfo> modes, int cutoff)
    : modes_(std::move(modes)), cutoff_(cutoff) {
    if (cutoff_ < 1) {
        throw Error("mode register cutoff must be >= 1");
    }
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        for (std::size_t j = i + 1; j < modes_.size(); ++j) {
            if (modes_[i].label == modes_[j].label) {
                throw Error("duplicate mode label '" + modes_[i].label + "'");
            }
        }
    }
}

std::size_t ModeRegister::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (modes_[i].label == label) {
            return i;
        }
    }
    throw UnknownMode("unknown mode label '" + std::string(label) + "'");
}

bool ModeRegister::has_mode(std::string_view label) const {
    return std::any_of(modes_.begin(), modes_.end(),
                       [&](const ModeInfo& m) { return m.label == label; });
}

ModeRegister ModeRegister::without(std::size_t index) const {
    std::vector<ModeInfo> rest = modes_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
    return ModeRegister(std::move(rest), cutoff_);
}

OccupationVector::OccupationVector(std::vector<int> counts)
    : counts_(std::move(counts)) {
    for (int n : counts_) {
        if (n < 0) {
            throw Error("negative photon count in occupation vector");
        }
    }
}

int OccupationVector::total() const {
    int sum = 0;
    for (int n : counts_) sum += n;
    return sum;
}

OccupationVector OccupationVector::with(std::size_t mode, int count) const {
    std::vector<int> copy = counts_;
    copy.at(mode) = count;
    return OccupationVector(std::move(copy));
}

OccupationVector OccupationVector::without(std::size_t mode) const {
    std::vector<int> copy = counts_;
    copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(mode));
    return OccupationVector(std::move(copy));
}

std::string OccupationVector::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) out << ',';
        out << counts_[i];
    }
    out << ')';
    return out.str();
}

PureState::PureState(ModeRegister reg, AmplitudeMap amplitudes)
    : register_(std::move(reg)) {
    for (auto& [occ, amp] : amplitudes) {
        if (occ.size() != register_.mode_count()) {
            throw Error("occupation vector " + occ.str() +
                        " does not match register size");
        }
        if (std::abs(amp) < kAmplitudePruneThreshold) {
            continue;
        }
        for (std::size_t m = 0; m < occ.size(); ++m) {
            if (occ[m] > register_.cutoff()) {
                throw CutoffViolation(
                    "occupation " + occ.str() + " exceeds cutoff " +
                    std::to_string(register_.cutoff()) + " in mode '" +
                    register_.mode(m).label + "'");
            }
        }
        amplitudes_.emplace(occ, amp);
    }
    double n2 = norm_squared();
    if (n2 > 1.0 + kProbabilityTolerance) {
        throw Error("pure state norm^2 " + std::to_string(n2) + " exceeds 1");
    }
}

complex PureState::amplitude(const OccupationVector& occ) const {
    auto it = amplitudes_.find(occ);
    return it == amplitudes_.end() ? complex{0.0, 0.0} : it->second;
}

double PureState::norm_squared() const {
    double sum = 0.0;
    for (const auto& [occ, amp] : amplitudes_) {
        sum += std::norm(amp);
    }
    return sum;
}

PureState PureState::normalised() const {
    double n2 = norm_squared();
    if (n2 <= 0.0) {
        throw ImpossibleEvent("cannot normalise the zero state");
    }
    return scaled(1.0 / std::sqrt(n2));
}

PureState PureState::scaled(complex factor) const {
    AmplitudeMap scaled_map;
    for (const auto& [occ, amp] : amplitudes_) {
        scaled_map.emplace(occ, amp * factor);
    }
    return PureState(register_, std::move(scaled_map));
}

Ensemble::Ensemble(ModeRegister reg, std::vector<Branch> branches)
    : register_(std::move(reg)) {
    for (auto& b : branches) {
        add_branch(b.weight, std::move(b.state));
    }
}

Ensemble Ensemble::from_pure(const PureState& state) {
    Ensemble e(state.mode_register());
    double w = state.norm_squared();
    if (w > kBranchWeightFloor) {
        e.add_branch(w, state.normalised());
    }
    return e;
}

double Ensemble::total_weight() const {
    double sum = 0.0;
    for (const auto& b : branches_) sum += b.weight;
    return sum;
}

void Ensemble::add_branch(double weight, PureState state) {
    if (weight < 0.0) {
        throw Error("negative branch weight");
    }
    if (weight < kBranchWeightFloor) {
        return;
    }
    if (!(state.mode_register() == register_)) {
        throw RegisterMismatch("branch register differs from ensemble register");
    }
    if (std::abs(state.norm_squared() - 1.0) > 1e-9) {
        throw Error("ensemble branches must hold unit-norm states");
    }
    if (total_weight() + weight > 1.0 + kProbabilityTolerance) {
        throw Error("ensemble weight exceeds 1");
    }
    branches_.push_back(Branch{weight, std::move(state)});
}

PureState make_basis_state(const ModeRegister& reg, const OccupationVector& occ) {
    PureState::AmplitudeMap amps;
    amps.emplace(occ, complex{1.0, 0.0});
    return PureState(reg, std::move(amps));
}

complex inner_product(const PureState& a, const PureState& b) {
    if (!(a.mode_register() == b.mode_register())) {
        throw RegisterMismatch("inner product between different registers");
    }
    // Iterate the smaller map.
    const PureState& small = a.amplitudes().size() <= b.amplitudes().size() ? a : b;
    const PureState& large = &small == &a ? b : a;
    complex sum{0.0, 0.0};
    for (const auto& [occ, amp] : small.amplitudes()) {
        complex other = large.amplitude(occ);
        if (&small == &a) {
            sum += std::conj(amp) * other;
        } else {
            sum += std::conj(other) * amp;
        }
    }
    return sum;
}

std::map<int, double> photon_number_distribution(const Ensemble& ensemble,
                                                 std::string_view mode) {
    std::size_t idx = ensemble.mode_register().index_of(mode);
    std::map<int, double> dist;
    for (const auto& branch : ensemble.branches()) {
        for (const auto& [occ, amp] : branch.state.amplitudes()) {
            dist[occ[idx]] += branch.weight * std::norm(amp);
        }
    }
    std::erase_if(dist, [](const auto& kv) { return kv.second <= 0.0; });
    return dist;
}

std::map<int, double> photon_number_distribution(const PureState& state,
                                                 std::string_view mode) {
    return photon_number_distribution(Ensemble::from_pure(state), mode);
}

namespace {

bool states_equal(const PureState& a, const PureState& b) {
    if (a.amplitudes().size() != b.amplitudes().size()) return false;
    auto ia = a.amplitudes().begin();
    auto ib = b.amplitudes().begin();
    for (; ia != a.amplitudes().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (std::abs(ia->second - ib->second) > 1e-14) return false;
    }
    return true;
}

}  // namespace

std::pair<Ensemble, double> merge_and_renormalise(const Ensemble& ensemble) {
    double total = ensemble.total_weight();
    if (total <= 0.0) {
        throw ImpossibleEvent("ensemble has zero total weight");
    }
    std::vector<Branch> merged;
    for (const auto& branch : ensemble.branches()) {
        bool found = false;
        for (auto& m : merged) {
            if (states_equal(m.state, branch.state)) {
                m.weight += branch.weight;
                found = true;
                break;
            }
        }
        if (!found) {
            merged.push_back(branch);
        }
    }
    Ensemble out(ensemble.mode_register());
    for (auto& m : merged) {
        out.add_branch(m.weight / total, std::move(m.state));
    }
    return {std::move(out), total};
}

std::map<int, std::pair<double, PureState>> split_by_mode_occupation(
    const PureState& state, std::string_view mode) {
    std::size_t idx = state.mode_register().index_of(mode);
    ModeRegister reduced = state.mode_register().without(idx);

    std::map<int, PureState::AmplitudeMap> groups;
    for (const auto& [occ, amp] : state.amplitudes()) {
        groups[occ[idx]].emplace(occ.without(idx), amp);
    }

    std::map<int, std::pair<double, PureState>> result;
    for (auto& [n, amps] : groups) {
        PureState part(reduced, std::move(amps));
        double p = part.norm_squared();
        if (p > kBranchWeightFloor) {
            result.emplace(n, std::make_pair(p, part.normalised()));
        }
    }
    return result;
}

Ensemble trace_out(const Ensemble& ensemble, std::string_view mode) {
    std::size_t idx = ensemble.mode_register().index_of(mode);
    Ensemble out(ensemble.mode_register().without(idx));
    for (const auto& branch : ensemble.branches()) {
        for (auto& [n, part] : split_by_mode_occupation(branch.state, mode)) {
            out.add_branch(branch.weight * part.first, std::move(part.second));
        }
    }
    return out;
}

}  // namespace photonamp
