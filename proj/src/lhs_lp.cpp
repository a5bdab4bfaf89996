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

#include "steerlab/lhs_lp.hpp"

#include <algorithm>
#include <cmath>

#include "steerlab/error.hpp"

namespace steerlab {

namespace {

void add_unique(std::vector<StateVector> &out, StateVector v, double tol) {
    for (const auto &u : out) {
        if (phase_equal(u, v, tol)) {
            return;
        }
    }
    out.push_back(std::move(v));
}

std::vector<DensityMatrix> as_members(const std::vector<StateVector> &vectors, std::size_t bob_qubits) {
    std::vector<DensityMatrix> out;
    out.reserve(vectors.size());
    for (const auto &v : vectors) {
        out.push_back(DensityMatrix::from_convex_sum(bob_qubits, v.projector()));
    }
    return out;
}

const ConditionalStateSet &pick(const ConditionalStateSet &a, const ConditionalStateSet &b, int k) {
    return k == 1 ? a : b;
}

}  // namespace

std::vector<DensityMatrix> candidate_ensemble(const ConditionalStateSet &set_1, const ConditionalStateSet &set_2,
                                              const Tolerances &tol) {
    std::vector<StateVector> vectors;
    for (const auto *set : {&set_1, &set_2}) {
        for (const auto &e : set->entries) {
            if (!(e.probability > tol.zero_probability)) {
                continue;
            }
            if (purity(e.op) < 1.0 - tol.purity) {
                throw PreconditionError("conditional state for outcome " + e.outcome +
                                        " is mixed; the pure candidate set is incomplete");
            }
            add_unique(vectors, pure_state_of(e.op), tol.phase_equality);
        }
    }
    return as_members(vectors, set_1.bob_qubits);
}

CandidateSet general_candidates(const ConditionalStateSet &set_1, const ConditionalStateSet &set_2,
                                const Tolerances &tol) {
    CandidateSet out;
    std::vector<StateVector> vectors;
    for (const auto *set : {&set_1, &set_2}) {
        for (const auto &e : set->entries) {
            if (!(e.probability > tol.zero_probability)) {
                continue;
            }
            if (purity(e.op) >= 1.0 - tol.purity) {
                add_unique(vectors, pure_state_of(e.op), tol.phase_equality);
                continue;
            }
            out.complete = false;
            ComplexMatrix normalized = Complex(1.0 / e.probability) * e.op;
            auto eig = canonicalize_degenerate(hermitian_eig(normalized));
            for (std::size_t k = eig.values.size(); k-- > 0;) {
                if (eig.values[k] > tol.rank) {
                    add_unique(vectors, eig.vectors[k], tol.phase_equality);
                }
            }
        }
    }
    out.members = as_members(vectors, set_1.bob_qubits);
    return out;
}

LpProblem build_lp(const ConditionalStateSet &set_1, const ConditionalStateSet &set_2,
                   const std::vector<DensityMatrix> &candidates, const LpOptions &options) {
    if (candidates.empty()) {
        throw ArgumentError("build_lp needs at least one candidate");
    }
    if (set_1.bob_qubits != set_2.bob_qubits) {
        throw ArgumentError("conditional state sets disagree on Bob's dimension");
    }
    LpProblem p;
    p.bob_dim = std::size_t{1} << set_1.bob_qubits;
    p.members = candidates.size();
    p.outcomes_1 = set_1.entries.size();
    p.outcomes_2 = set_2.entries.size();
    for (const auto &e : set_1.entries) {
        p.labels_1.push_back(e.outcome);
    }
    for (const auto &e : set_2.entries) {
        p.labels_2.push_back(e.outcome);
    }
    for (const auto &c : candidates) {
        if (c.dim() != p.bob_dim) {
            throw ArgumentError("candidate dimension " + std::to_string(c.dim()) + " does not match Bob's " +
                                std::to_string(p.bob_dim));
        }
        p.candidates.push_back(c.matrix());
    }
    p.cols = p.members * p.block();
    std::size_t d = p.bob_dim;
    p.rows = 2 * d * d * (p.outcomes_1 + p.outcomes_2) + 2 * p.members + (options.normalization ? 1 : 0);
    p.a.assign(p.rows * p.cols, 0.0);
    p.b.assign(p.rows, 0.0);
    p.groups.reserve(p.rows);

    std::size_t r = 0;
    for (int k = 1; k <= 2; k++) {
        const auto &set = pick(set_1, set_2, k);
        for (std::size_t a = 0; a < set.entries.size(); a++) {
            const auto &target = set.entries[a].op;
            for (std::size_t i = 0; i < d; i++) {
                for (std::size_t j = 0; j < d; j++) {
                    for (int part = 0; part < 2; part++) {
                        for (std::size_t m = 0; m < p.members; m++) {
                            Complex v = p.candidates[m](i, j);
                            p.a[r * p.cols + p.w_index(m, k, a)] = part == 0 ? v.real() : v.imag();
                        }
                        p.b[r] = part == 0 ? target(i, j).real() : target(i, j).imag();
                        p.groups.push_back(RowGroup::Assemblage);
                        r++;
                    }
                }
            }
        }
    }
    for (std::size_t m = 0; m < p.members; m++) {
        for (int k = 1; k <= 2; k++) {
            std::size_t n = k == 1 ? p.outcomes_1 : p.outcomes_2;
            for (std::size_t a = 0; a < n; a++) {
                p.a[r * p.cols + p.w_index(m, k, a)] = 1.0;
            }
            p.a[r * p.cols + p.weight_index(m)] = -1.0;
            p.groups.push_back(RowGroup::Coupling);
            r++;
        }
    }
    if (options.normalization) {
        for (std::size_t m = 0; m < p.members; m++) {
            p.a[r * p.cols + p.weight_index(m)] = 1.0;
        }
        p.b[r] = 1.0;
        p.groups.push_back(RowGroup::Normalization);
        r++;
    }
    return p;
}

GroupResiduals residual_by_group(const LpProblem &problem, const std::vector<double> &x) {
    if (x.size() != problem.cols) {
        throw ArgumentError("assignment has " + std::to_string(x.size()) + " entries, problem has " +
                            std::to_string(problem.cols) + " columns");
    }
    GroupResiduals out;
    for (std::size_t r = 0; r < problem.rows; r++) {
        double s = -problem.b[r];
        for (std::size_t c = 0; c < problem.cols; c++) {
            s += problem.a[r * problem.cols + c] * x[c];
        }
        double &slot = problem.groups[r] == RowGroup::Assemblage ? out.assemblage
                       : problem.groups[r] == RowGroup::Coupling ? out.coupling
                                                                  : out.normalization;
        slot = std::max(slot, std::abs(s));
    }
    return out;
}

namespace {

// Rebuilds the tableau for `basis` from the initial one: solves B X = T0 by Gaussian elimination
// with partial pivoting, then recomputes the Phase-I cost row. False when B is numerically singular.
bool reinvert(const std::vector<double> &initial, std::size_t m, std::size_t n, const std::vector<std::size_t> &basis,
              std::vector<double> &t) {
    const std::size_t width = n + m + 1;
    const std::size_t span = m + width;
    std::vector<double> w(m * span);
    for (std::size_t r = 0; r < m; r++) {
        for (std::size_t k = 0; k < m; k++) {
            w[r * span + k] = initial[r * width + basis[k]];
        }
        std::copy_n(&initial[r * width], width, &w[r * span + m]);
    }
    for (std::size_t k = 0; k < m; k++) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r < m; r++) {
            if (std::abs(w[r * span + k]) > std::abs(w[p * span + k])) {
                p = r;
            }
        }
        double piv = w[p * span + k];
        if (std::abs(piv) < 1e-13) {
            return false;
        }
        if (p != k) {
            std::swap_ranges(&w[p * span], &w[p * span] + span, &w[k * span]);
        }
        double *row = &w[k * span];
        for (std::size_t c = k; c < span; c++) {
            row[c] /= piv;
        }
        for (std::size_t r = 0; r < m; r++) {
            double f = w[r * span + k];
            if (r == k || f == 0) {
                continue;
            }
            double *dst = &w[r * span];
            for (std::size_t c = k; c < span; c++) {
                dst[c] -= f * row[c];
            }
        }
    }
    for (std::size_t r = 0; r < m; r++) {
        std::copy_n(&w[r * span + m], width, &t[r * width]);
        t[r * width + basis[r]] = 1.0;
    }
    // Cost 1 on artificial columns, 0 elsewhere.
    double *cost = &t[m * width];
    std::fill_n(cost, width, 0.0);
    std::fill_n(cost + n, m, 1.0);
    for (std::size_t r = 0; r < m; r++) {
        if (basis[r] < n) {
            continue;
        }
        const double *row = &t[r * width];
        for (std::size_t c = 0; c < width; c++) {
            cost[c] -= row[c];
        }
    }
    for (std::size_t r = 0; r < m; r++) {
        cost[basis[r]] = 0.0;
    }
    return true;
}

}  // namespace

FeasibilityResult solve_feasibility(const LpProblem &problem, const Tolerances &tol, std::size_t max_iterations) {
    constexpr double kReducedCostTol = 1e-10;
    constexpr double kPivotTol = 1e-7;
    constexpr double kDropTol = 1e-12;
    constexpr std::size_t kReinversionInterval = 50;
    const std::size_t n = problem.cols;
    auto row_of = [&](std::size_t r) { return &problem.a[r * n]; };

    const std::size_t m = problem.rows;
    const std::size_t width = n + m + 1;
    const std::size_t rhs = n + m;

    // Rows 0..m-1 constraints, row m the Phase-I reduced costs. Artificial i sits in column n + i.
    std::vector<double> t((m + 1) * width, 0.0);
    auto at = [&](std::size_t r, std::size_t c) -> double & { return t[r * width + c]; };
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; r++) {
        double b = problem.b[r];
        double sign = b < 0 ? -1.0 : 1.0;
        for (std::size_t c = 0; c < n; c++) {
            at(r, c) = sign * row_of(r)[c];
        }
        at(r, n + r) = 1.0;
        at(r, rhs) = sign * b;
        basis[r] = n + r;
        for (std::size_t c = 0; c < n; c++) {
            at(m, c) -= at(r, c);
        }
        at(m, rhs) -= at(r, rhs);
    }

    const std::vector<double> initial(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(m * width));
    FeasibilityResult out;
    std::size_t since_reinversion = 0;
    while (true) {
        if (since_reinversion >= kReinversionInterval) {
            reinvert(initial, m, n, basis, t);
            since_reinversion = 0;
        }
        // Artificials never re-enter: once one leaves, its column plays no further role in Phase I.
        std::size_t enter = width;
        for (std::size_t c = 0; c < n; c++) {
            if (at(m, c) < -kReducedCostTol) {
                enter = c;
                break;
            }
        }
        if (enter == width) {
            // Confirm optimality on a freshly rebuilt tableau.
            if (since_reinversion > 0 && reinvert(initial, m, n, basis, t)) {
                since_reinversion = 0;
                continue;
            }
            break;
        }
        std::size_t leave = m;
        double best = 0;
        for (std::size_t r = 0; r < m; r++) {
            double piv = at(r, enter);
            if (piv <= kPivotTol) {
                continue;
            }
            double ratio = std::max(0.0, at(r, rhs)) / piv;
            if (leave == m || ratio < best - 1e-12 || (ratio <= best + 1e-12 && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == m) {
            // Unbounded direction; the Phase-I objective is bounded below, so this only happens
            // through rounding.
            if (since_reinversion > 0 && reinvert(initial, m, n, basis, t)) {
                since_reinversion = 0;
                continue;
            }
            break;
        }
        if (++out.iterations > max_iterations) {
            throw SolverLimitError("simplex exceeded " + std::to_string(max_iterations) + " iterations");
        }
        double piv = at(leave, enter);
        for (std::size_t c = 0; c < width; c++) {
            double &v = at(leave, c);
            v /= piv;
            if (std::abs(v) < kDropTol) {
                v = 0;
            }
        }
        at(leave, enter) = 1;
        for (std::size_t r = 0; r <= m; r++) {
            if (r == leave) {
                continue;
            }
            double f = at(r, enter);
            if (f == 0) {
                continue;
            }
            double *dst = &t[r * width];
            const double *src = &t[leave * width];
            for (std::size_t c = 0; c < width; c++) {
                dst[c] -= f * src[c];
                if (std::abs(dst[c]) < kDropTol) {
                    dst[c] = 0;
                }
            }
            dst[enter] = 0;
            // Degenerate pivots leave rounding noise in the basic values; negative noise breaks
            // the ratio test's anti-cycling guarantee.
            if (r < m && dst[rhs] < 0 && dst[rhs] > -kDropTol) {
                dst[rhs] = 0;
            }
        }
        basis[leave] = enter;
        since_reinversion++;
    }

    out.phase_one_objective = std::max(0.0, -at(m, rhs));
    out.solution.assign(n, 0.0);
    for (std::size_t r = 0; r < m; r++) {
        if (basis[r] < n) {
            out.solution[basis[r]] = std::max(0.0, at(r, rhs));
        }
    }
    // The tableau value is trusted only as far as the extracted point satisfies A x = b; the
    // L1 violation of that point bounds the Phase-I optimum from above as well.
    double violation = 0;
    for (std::size_t r = 0; r < problem.rows; r++) {
        double s = -problem.b[r];
        for (std::size_t c = 0; c < n; c++) {
            s += row_of(r)[c] * out.solution[c];
        }
        violation += std::abs(s);
    }
    if (out.phase_one_objective <= tol.lp_feasibility) {
        out.phase_one_objective = std::max(out.phase_one_objective, violation);
    }
    out.feasible = out.phase_one_objective <= tol.lp_feasibility;
    if (!out.feasible) {
        return out;
    }

    LhsModel model;
    for (std::size_t mem = 0; mem < problem.members; mem++) {
        model.members.push_back({out.solution[problem.weight_index(mem)], problem.candidates[mem]});
    }
    for (int k = 1; k <= 2; k++) {
        std::size_t count = k == 1 ? problem.outcomes_1 : problem.outcomes_2;
        auto &resp = model.responses[k - 1];
        resp.assign(count, std::vector<double>(problem.members, 0.0));
        for (std::size_t mem = 0; mem < problem.members; mem++) {
            double total = 0;
            for (std::size_t a = 0; a < count; a++) {
                total += out.solution[problem.w_index(mem, k, a)];
            }
            for (std::size_t a = 0; a < count; a++) {
                // Members carrying no weight get uniform responses; any choice reproduces the data.
                resp[a][mem] = total < 1e-12 ? 1.0 / static_cast<double>(count)
                                             : out.solution[problem.w_index(mem, k, a)] / total;
            }
        }
    }
    out.model = std::move(model);
    return out;
}

double verify_model(const LhsModel &model, const ConditionalStateSet &set_1, const ConditionalStateSet &set_2) {
    double worst = 0;
    double total_weight = 0;
    for (const auto &mem : model.members) {
        total_weight += mem.weight;
        worst = std::max(worst, -mem.weight);
    }
    worst = std::max(worst, std::abs(total_weight - 1.0));

    for (int k = 1; k <= 2; k++) {
        const auto &set = pick(set_1, set_2, k);
        const auto &resp = model.responses[k - 1];
        if (resp.size() != set.entries.size()) {
            throw ArgumentError("model responses do not match the outcome count of setting " + std::to_string(k));
        }
        for (std::size_t mem = 0; mem < model.members.size(); mem++) {
            double s = 0;
            for (const auto &row : resp) {
                if (row.size() != model.members.size()) {
                    throw ArgumentError("model responses do not match the member count");
                }
                s += row[mem];
                worst = std::max(worst, -row[mem]);
            }
            worst = std::max(worst, std::abs(s - 1.0));
        }
        for (std::size_t a = 0; a < set.entries.size(); a++) {
            ComplexMatrix acc = Complex(-1.0) * set.entries[a].op;
            for (std::size_t mem = 0; mem < model.members.size(); mem++) {
                acc += Complex(resp[a][mem] * model.members[mem].weight) * model.members[mem].state;
            }
            worst = std::max(worst, acc.frobenius_norm());
        }
    }

    ComplexMatrix marginal = Complex(-1.0) * set_1.marginal();
    for (const auto &mem : model.members) {
        marginal += Complex(mem.weight) * mem.state;
    }
    return std::max(worst, marginal.frobenius_norm());
}

LpCheck lp_cross_check(const AnyState &state, const SteeringProtocol &protocol, const Tolerances &tol) {
    DensityMatrix rho = density_of(state);
    auto set_1 = conditional_states(rho, protocol, 1);
    auto set_2 = conditional_states(rho, protocol, 2);
    CandidateSet cands = general_candidates(set_1, set_2, tol);
    LpProblem problem = build_lp(set_1, set_2, cands.members);
    FeasibilityResult result = solve_feasibility(problem, tol);
    LpSummary summary;
    summary.feasible = result.feasible;
    summary.relative_to_candidates = !cands.complete;
    summary.phase_one_objective = result.phase_one_objective;
    summary.candidates = cands.members.size();
    summary.iterations = result.iterations;
    return {std::move(problem), std::move(result), summary};
}

}  // namespace steerlab
