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

#ifndef PHOTONAMP_ERRORS_HPP
#define PHOTONAMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace photonamp {

/// Base class for every error raised by the simulator.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An occupation number would exceed the register's Fock cutoff with
/// non-negligible amplitude.
struct CutoffViolation : Error {
    using Error::Error;
};

/// Two states that must live on the same mode register do not.
struct RegisterMismatch : Error {
    using Error::Error;
};

/// A mode label that is not part of the register.
struct UnknownMode : Error {
    using Error::Error;
};

/// Conditioning on an outcome whose probability is zero.
struct ImpossibleEvent : Error {
    using Error::Error;
};

/// Gain evaluated where its defining ratio diverges or is 0/0.
struct UndefinedGain : Error {
    using Error::Error;
};

/// Fringe with zero mean: visibility has no value.
struct UndefinedVisibility : Error {
    using Error::Error;
};

/// Requested heralded efficiency cannot be reached anywhere in the
/// search bracket.
struct InfeasibleTarget : Error {
    using Error::Error;
};

/// Fewer (or degenerate) data rows than free fit parameters.
struct UnderdeterminedFit : Error {
    using Error::Error;
};

/// Invalid configuration value. `key` names the offending field using
/// dotted-path notation, e.g. "amplifier.t".
struct ConfigError : Error {
    explicit ConfigError(const std::string& key, const std::string& reason)
        : Error(key + ": " + reason), key(key) {}
    std::string key;
};

}  // namespace photonamp

#endif
