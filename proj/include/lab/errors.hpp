// SPDX-License-Identifier: Apache-2.0
//
// circulant-lab  Monte Carlo laboratory for circulant LTI channels under
// random phases and delocalisation of weighted circle sums
// Copyright (C) 2026 The circulant-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace lab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched or invalid vector/matrix dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// A documented call precondition was violated.
struct PreconditionError : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of the function.
struct DomainError : Error {
    using Error::Error;
};

/// Invalid estimator or experiment configuration.
struct ConfigError : Error {
    using Error::Error;
};

/// Requested resolution is not supported by the sample budget.
struct ResolutionError : Error {
    using Error::Error;
};

/// Malformed experiment description (CLI flags or JSON config).
struct ParseError : ConfigError {
    using ConfigError::ConfigError;
};

/// Filesystem/stream failure.
struct IoError : Error {
    using Error::Error;
};

}  // namespace lab
