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

#ifndef PHOTONAMP_FOCK_HPP
#define PHOTONAMP_FOCK_HPP

#include <compare>
#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "photonamp/errors.hpp"

namespace photonamp {

using complex = std::complex<double>;

/// Amplitudes below this magnitude are dropped from sparse states.
inline constexpr double kAmplitudePruneThreshold = 1e-15;
/// Reported probabilities are trusted to this absolute tolerance.
inline constexpr double kProbabilityTolerance = 1e-12;
/// Default per-mode Fock cutoff (two photon pairs).
inline constexpr int kDefaultCutoff = 4;

/// What a mode is used for inside a circuit. Purely descriptive; the
/// simulator itself only cares about mode identity.
enum class ModeRole {
    kInput,
    kLost,
    kAncillaOut,
    kAncillaMeas,
    kDet1,
    kDet2,
    kAux,
};

struct ModeInfo {
    std::string label;
    ModeRole role = ModeRole::kAux;

    friend bool operator==(const ModeInfo&, const ModeInfo&) = default;
};

/// Ordered set of labelled optical modes plus the shared Fock cutoff.
///
/// Registers are small (a handful of modes) and are carried by value in
/// every state. Two registers are compatible when labels, roles and
/// cutoff all agree.
class ModeRegister {
public:
    ModeRegister() = default;
    ModeRegister(std::vector<ModeInfo> modes, int cutoff);

    int cutoff() const { return cutoff_; }
    std::size_t mode_count() const { return modes_.size(); }
    const ModeInfo& mode(std::size_t index) const { return modes_.at(index); }
    const std::vector<ModeInfo>& modes() const { return modes_; }

    /// Index of the mode with the given label; throws UnknownMode.
    std::size_t index_of(std::string_view label) const;
    bool has_mode(std::string_view label) const;

    /// Copy of this register with one mode removed (used when a mode is
    /// measured or traced out).
    ModeRegister without(std::size_t index) const;

    friend bool operator==(const ModeRegister&, const ModeRegister&) = default;

private:
    std::vector<ModeInfo> modes_;
    int cutoff_ = kDefaultCutoff;
};

/// Photon counts per mode: the basis label of the truncated Fock space.
class OccupationVector {
public:
    OccupationVector() = default;
    explicit OccupationVector(std::vector<int> counts);

    int operator[](std::size_t mode) const { return counts_.at(mode); }
    std::size_t size() const { return counts_.size(); }
    int total() const;

    /// Copy with the count of one mode replaced.
    OccupationVector with(std::size_t mode, int count) const;
    /// Copy with one mode erased.
    OccupationVector without(std::size_t mode) const;

    const std::vector<int>& counts() const { return counts_; }
    std::string str() const;

    auto operator<=>(const OccupationVector&) const = default;

private:
    std::vector<int> counts_;
};

/// Sparse complex amplitude map over occupation vectors.
///
/// A PureState may be subnormalised: its squared norm is the probability
/// of the branch it represents. Amplitudes below kAmplitudePruneThreshold
/// are never stored.
class PureState {
public:
    using AmplitudeMap = std::map<OccupationVector, complex>;

    explicit PureState(ModeRegister reg) : register_(std::move(reg)) {}
    PureState(ModeRegister reg, AmplitudeMap amplitudes);

    const ModeRegister& mode_register() const { return register_; }
    const AmplitudeMap& amplitudes() const { return amplitudes_; }

    complex amplitude(const OccupationVector& occ) const;
    double norm_squared() const;

    /// Unit-norm copy; throws ImpossibleEvent on the zero state.
    PureState normalised() const;
    PureState scaled(complex factor) const;

private:
    ModeRegister register_;
    AmplitudeMap amplitudes_;
};

/// One pure branch of a mixed state: `weight` is the branch probability
/// and `state` has unit norm.
struct Branch {
    double weight = 0.0;
    PureState state;
};

/// Weighted collection of pure states representing a (possibly
/// subnormalised) mixed state. Total weight is the probability of the
/// event the ensemble is conditioned on.
class Ensemble {
public:
    Ensemble() = default;
    explicit Ensemble(ModeRegister reg) : register_(std::move(reg)) {}
    Ensemble(ModeRegister reg, std::vector<Branch> branches);

    /// Wraps a (possibly subnormalised) pure state: one branch whose
    /// weight is the squared norm. The zero state gives an empty ensemble.
    static Ensemble from_pure(const PureState& state);

    const ModeRegister& mode_register() const { return register_; }
    const std::vector<Branch>& branches() const { return branches_; }
    double total_weight() const;

    /// Appends a branch; weights below 1e-30 are discarded.
    void add_branch(double weight, PureState state);

private:
    ModeRegister register_;
    std::vector<Branch> branches_;
};

/// Unit-norm basis state |occ>.
PureState make_basis_state(const ModeRegister& reg, const OccupationVector& occ);

/// <a|b>, conjugate-linear in `a`. Registers must match.
complex inner_product(const PureState& a, const PureState& b);

/// Marginal photon-number distribution of one mode. Probabilities sum to
/// the total ensemble weight; only nonzero entries are returned.
std::map<int, double> photon_number_distribution(const Ensemble& ensemble,
                                                 std::string_view mode);
std::map<int, double> photon_number_distribution(const PureState& state,
                                                 std::string_view mode);

/// Merges identical branches, renormalises the total weight to one, and
/// returns the original weight (the probability of the event the
/// ensemble represents). Throws ImpossibleEvent on zero weight.
std::pair<Ensemble, double> merge_and_renormalise(const Ensemble& ensemble);

/// Decomposes a pure state by the photon count of one mode. For each
/// occupied count n the result holds the probability of n and the
/// normalised remainder state on the register without that mode.
std::map<int, std::pair<double, PureState>> split_by_mode_occupation(
    const PureState& state, std::string_view mode);

/// Partial trace over one mode: branches the ensemble by that mode's
/// photon count and removes the mode. Total weight is preserved.
Ensemble trace_out(const Ensemble& ensemble, std::string_view mode);

}  // namespace photonamp

#endif
