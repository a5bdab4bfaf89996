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

#ifndef STEERLAB_STEERING_HPP
#define STEERLAB_STEERING_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steerlab/config.hpp"
#include "steerlab/measurements.hpp"
#include "steerlab/states.hpp"

namespace steerlab {

struct ConditionalState {
    std::string outcome;
    /// Bob's unnormalized operator tr_A[(P_a x 1) rho].
    ComplexMatrix op;
    double probability;
};

/// Bob's assemblage for one setting.
struct ConditionalStateSet {
    int setting_index = 1;
    std::string setting_label;
    std::size_t bob_qubits = 0;
    std::vector<ConditionalState> entries;

    /// sum_a rho_tilde_a, which equals rho_B for any setting.
    ComplexMatrix marginal() const;
};

/// Throws ArgumentError when rho and the protocol disagree on dimensions.
ConditionalStateSet conditional_states(const DensityMatrix &rho, const SteeringProtocol &protocol, int which);

struct CollapseSlot {
    std::string outcome;
    /// |(<b| x 1)|psi>|.
    double coefficient;
    /// The projection normalized; empty when the coefficient vanishes.
    std::optional<StateVector> collapsed;
};

struct CollapseComponent {
    double weight;
    std::vector<CollapseSlot> slots;
};

/// Every ensemble component expanded in a setting's basis:
///   |psi_alpha> = sum_b coefficient_{alpha,b} |b> |collapsed_{alpha,b}>.
struct CollapseDecomposition {
    std::string setting_label;
    std::size_t bob_dim = 0;
    std::vector<CollapseComponent> components;

    /// sum_alpha p_alpha |coefficient|^2 |collapsed><collapsed| for one outcome slot.
    ComplexMatrix reconstruct(std::size_t slot) const;
};

/// Throws UnsupportedSettingError for settings that are not rank 1.
CollapseDecomposition collapse_decomposition(const EnsembleState &ensemble, const MeasurementSetting &setting, std::size_t alice_qubits);

/// Diagnostic: for each pair of components and each slot where both are non-empty, the complex
/// factor c with s_alpha|eta_alpha> = c s_alpha'|eta_alpha'> (least squares) and the residual
/// norm of that fit. A zero residual for every pair in a slot is what makes the slot pure.
struct ProportionalityFactor {
    std::size_t alpha;
    std::size_t alpha_prime;
    std::size_t slot;
    Complex factor;
    double residual;
};
std::vector<ProportionalityFactor> proportionality_factors(const CollapseDecomposition &decomposition);

struct OutcomeRef {
    int setting;
    std::string outcome;
    bool operator==(const OutcomeRef &) const = default;
};

struct OutcomePurity {
    OutcomeRef ref;
    double probability;
    /// Empty for excluded (zero-probability) outcomes.
    std::optional<double> purity;
};

struct PurityCheck {
    bool ok = false;
    std::vector<OutcomePurity> outcomes;
    std::vector<OutcomeRef> excluded;
};

/// Every outcome with probability above `tol.zero_probability` must have purity >= 1 - tol.purity.
PurityCheck purity_requirement(const ConditionalStateSet &set_1, const ConditionalStateSet &set_2, const Tolerances &tol = {});

struct DuplicatePair {
    OutcomeRef first;
    OutcomeRef second;
};

struct MeasurementCheck {
    bool ok = false;
    std::vector<DuplicatePair> cross_setting;
    std::vector<DuplicatePair> within_setting;
};

/// Compares normalized conditional states up to global phase. Throws PreconditionError when a
/// non-negligible conditional state is mixed.
MeasurementCheck measurement_requirement(const ConditionalStateSet &set_1, const ConditionalStateSet &set_2, const Tolerances &tol = {});

/// Normalized vector of a rank-1 positive operator (read off its largest-diagonal column).
StateVector pure_state_of(const ComplexMatrix &op);

enum class Verdict { Paradox, NoParadoxPurity, NoParadoxCrossDuplicate };
std::string_view to_string(Verdict verdict);

enum class DecompositionSource { Given, Eigen };
std::string_view to_string(DecompositionSource source);

/// Outcome of the LHS linear-program cross-check, attached to a report by the caller.
struct LpSummary {
    bool feasible = false;
    /// True when the candidate ensemble is not provably complete (mixed conditional states).
    bool relative_to_candidates = false;
    double phase_one_objective = 0;
    std::size_t candidates = 0;
    std::size_t iterations = 0;
};

struct ParadoxReport {
    Verdict verdict = Verdict::NoParadoxPurity;
    PurityCheck purity;
    MeasurementCheck measurement;
    /// Sum of all conditional-state traces over both settings; 2 for any valid input.
    double quantum_trace_sum = 0;
    /// tr(sum_xi p_xi rho_xi) = tr(rho_B) for the LHS ensemble forced by purity; empty when the
    /// requirements do not force one.
    std::optional<double> lhs_trace_sum;
    /// Distinct normalized conditional states (the forced LHS members) when purity holds.
    std::size_t distinct_states = 0;
    /// Within- and cross-setting duplicates both present; the verdict rule for this case is a convention.
    bool ambiguous_duplicates = false;
    DecompositionSource decomposition_used = DecompositionSource::Given;
    std::size_t ensemble_terms = 0;
    std::vector<std::string> warnings;
    std::optional<LpSummary> lp;
};

/// Full pipeline: both assemblages, both requirements, verdict and trace ledger. A raw density
/// matrix is decomposed canonically (`canonical_ensemble`) and the report says so.
/// Never throws on a valid state/protocol pair; dimension mismatches throw ArgumentError.
ParadoxReport certify(const AnyState &state, const SteeringProtocol &protocol, const Tolerances &tol = {});

struct RankBound {
    std::size_t rank;
    std::size_t bound;
    bool satisfied;
};

/// True when both settings were built by `bell_like_setting` over the same pair family.
bool is_shared_family_bell_like(const SteeringProtocol &protocol, double tol = 1e-10);

/// rank(rho) against 2^(M-1). Throws UnsupportedSettingError unless the protocol is a
/// shared-family Bell-like pair.
RankBound rank_bound_check(const DensityMatrix &rho, const SteeringProtocol &protocol, double rank_tol = 1e-9);

}  // namespace steerlab

#endif
