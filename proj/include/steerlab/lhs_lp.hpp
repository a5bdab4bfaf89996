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

#ifndef STEERLAB_LHS_LP_HPP
#define STEERLAB_LHS_LP_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "steerlab/config.hpp"
#include "steerlab/states.hpp"
#include "steerlab/steering.hpp"

namespace steerlab {

/// Deduplicated normalized conditional states of both settings, zero-probability outcomes skipped.
/// Complete when every conditional state is pure; throws PreconditionError otherwise.
std::vector<DensityMatrix> candidate_ensemble(const ConditionalStateSet &set_1, const ConditionalStateSet &set_2,
                                              const Tolerances &tol = {});

struct CandidateSet {
    std::vector<DensityMatrix> members;
    /// False when some conditional state was mixed and had to be split into eigenvectors.
    bool complete = true;
};

/// Pure conditional states contribute themselves, mixed ones contribute their canonical
/// eigenvectors. Never throws on valid sets.
CandidateSet general_candidates(const ConditionalStateSet &set_1, const ConditionalStateSet &set_2,
                                const Tolerances &tol = {});

enum class RowGroup { Assemblage, Coupling, Normalization };

/// Equality-form LP  A x = b, x >= 0. Column layout, per member m:
///   w_m(a|1) for every outcome of setting 1, then w_m(a|2), then the member weight p_m.
struct LpProblem {
    std::size_t members = 0;
    std::size_t outcomes_1 = 0;
    std::size_t outcomes_2 = 0;
    std::size_t bob_dim = 0;
    std::vector<std::string> labels_1;
    std::vector<std::string> labels_2;
    std::vector<ComplexMatrix> candidates;
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// Row-major rows x cols.
    std::vector<double> a;
    std::vector<double> b;
    std::vector<RowGroup> groups;

    std::size_t block() const {
        return outcomes_1 + outcomes_2 + 1;
    }
    /// `setting` is 1 or 2.
    std::size_t w_index(std::size_t member, int setting, std::size_t outcome) const {
        return member * block() + (setting == 1 ? outcome : outcomes_1 + outcome);
    }
    std::size_t weight_index(std::size_t member) const {
        return member * block() + outcomes_1 + outcomes_2;
    }
};

struct LpOptions {
    /// Drop the sum-of-weights row (the relaxation used to inspect hand-built assignments).
    bool normalization = true;
};

/// Throws ArgumentError on an empty candidate list or a dimension mismatch.
LpProblem build_lp(const ConditionalStateSet &set_1, const ConditionalStateSet &set_2,
                   const std::vector<DensityMatrix> &candidates, const LpOptions &options = {});

struct GroupResiduals {
    double assemblage = 0;
    double coupling = 0;
    double normalization = 0;
};

/// Max |(A x - b)_r| per row group.
GroupResiduals residual_by_group(const LpProblem &problem, const std::vector<double> &x);

struct LhsMember {
    double weight;
    ComplexMatrix state;
};

struct LhsModel {
    std::vector<LhsMember> members;
    /// responses[k][a][m] = probability of outcome a of setting k+1 given member m.
    std::array<std::vector<std::vector<double>>, 2> responses;
};

struct FeasibilityResult {
    bool feasible = false;
    double phase_one_objective = 0;
    std::size_t iterations = 0;
    /// Primal vertex, length problem.cols.
    std::vector<double> solution;
    std::optional<LhsModel> model;
};

/// Dense-tableau Phase-I simplex with Bland's rule. Feasible iff the optimum is at most
/// `tol.lp_feasibility`. Throws SolverLimitError after `max_iterations` pivots.
FeasibilityResult solve_feasibility(const LpProblem &problem, const Tolerances &tol = {},
                                    std::size_t max_iterations = 1'000'000);

/// Largest violation over weight normalization, response normalization, negativity,
/// assemblage reproduction (Frobenius) and the Bob marginal.
double verify_model(const LhsModel &model, const ConditionalStateSet &set_1, const ConditionalStateSet &set_2);

struct LpCheck {
    LpProblem problem;
    FeasibilityResult result;
    LpSummary summary;
};

/// Conditional states, candidates (general mode when some state is mixed), build and solve.
LpCheck lp_cross_check(const AnyState &state, const SteeringProtocol &protocol, const Tolerances &tol = {});

}  // namespace steerlab

#endif
