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

#ifndef STEERLAB_BELLLIKE_HPP
#define STEERLAB_BELLLIKE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steerlab/measurements.hpp"
#include "steerlab/states.hpp"

namespace steerlab {

/// One ensemble component written as
///   s_plus |+phi_slot> |bob_plus> + s_minus |-phi_slot> |bob_minus>.
struct TwoTermComponent {
    std::size_t slot;
    Complex s_plus;
    Complex s_minus;
    StateVector bob_plus;
    StateVector bob_minus;
};

struct TwoTermForm {
    BellLikeBasis basis;
    std::vector<TwoTermComponent> components;

    /// The full N-qubit vector of one component.
    StateVector component_vector(std::size_t index) const;
};

struct TwoTermViolation {
    std::size_t component;
    /// One of "multi-slot support", "single-term support", "identical collapses", "shared slot".
    std::string reason;
};

struct TwoTermResult {
    std::optional<TwoTermForm> form;
    std::vector<TwoTermViolation> violations;

    bool ok() const {
        return form.has_value();
    }
};

/// Expands each component over the basis family pairs. Succeeds iff every component lives on a
/// single pair with two distinct Bob collapses and no two components share a pair.
TwoTermResult two_term_extract(const EnsembleState &ensemble, const BellLikeBasis &basis, std::size_t alice_qubits);

/// True iff no two components are equal up to a global phase.
bool no_shared_component_check(const TwoTermForm &form, double tol = 1e-8);

/// 2^(M-1) components on distinct computational-family slots with random coefficients
/// (|s|^2 in [0.1, 0.9], random phases) and Haar-random Bob pairs, any two of which overlap
/// by at most 0.999. Weights are uniform in [0.2, 1] before normalization.
/// Throws ArgumentError unless 1 <= M < N.
EnsembleState max_rank_family(std::size_t n_qubits, std::size_t alice_qubits, std::uint64_t seed);

/// Appends a component on the first family's slot 0 that reuses that slot's Bob pair with fresh
/// coefficients. The result can no longer satisfy the pure-state requirement.
EnsembleState with_shared_slot_component(const EnsembleState &family, std::size_t alice_qubits, std::uint64_t seed);

/// Two Bell-like settings over the same family. Throws ValidationError when the angles differ by
/// a multiple of pi/2 (the settings then coincide up to relabeling).
SteeringProtocol bell_like_protocol(std::size_t n_qubits, std::size_t alice_qubits, double beta_1, double beta_2,
                                    const std::string &family = "computational");

}  // namespace steerlab

#endif
