// Copyright 2026 The steerlab Authors
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

#ifndef STEERLAB_ERROR_HPP
#define STEERLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace steerlab {

/// Bad argument: wrong dimensions, out-of-range qubit indices, unknown names.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A dimension exceeded the configured cap (see `max_dimension`).
struct SizeError : std::length_error {
    using std::length_error::length_error;
};

/// Input has no meaningful normalization (zero trace, zero vector).
struct DegenerateInputError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A domain invariant does not hold. The message names the invariant.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed JSON document. `path` locates the offending node, e.g. `$.state.terms[1]`.
struct ParseError : std::invalid_argument {
    std::string path;
    ParseError(std::string path, const std::string &message)
        : std::invalid_argument(path + ": " + message), path(std::move(path)) {
    }
};

/// The operation needs rank-1 (or Bell-like) settings and got something else.
struct UnsupportedSettingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its precondition (e.g. mixed states where pure are required).
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// The simplex solver hit its iteration cap.
struct SolverLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace steerlab

#endif
