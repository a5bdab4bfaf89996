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

#include "steerlab/belllike.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "steerlab/error.hpp"

namespace steerlab {

namespace {

constexpr double kSupportTol = 1e-10;

/// (<a| x 1)|psi> for an Alice vector a.
std::vector<Complex> bob_projection(const StateVector &psi, const StateVector &alice, std::size_t d_b) {
    std::vector<Complex> out(d_b);
    for (std::size_t x = 0; x < alice.dim(); x++) {
        Complex ax = std::conj(alice[x]);
        if (ax == Complex{}) {
            continue;
        }
        for (std::size_t i = 0; i < d_b; i++) {
            out[i] += ax * psi[x * d_b + i];
        }
    }
    return out;
}

double norm_of(const std::vector<Complex> &v) {
    return std::sqrt(std::real(inner(v, v)));
}

}  // namespace

StateVector TwoTermForm::component_vector(std::size_t index) const {
    const auto &c = components.at(index);
    const auto &[plus, minus] = basis.family.at(c.slot);
    std::size_t d_b = c.bob_plus.dim();
    std::vector<Complex> amps(plus.dim() * d_b);
    for (std::size_t x = 0; x < plus.dim(); x++) {
        for (std::size_t i = 0; i < d_b; i++) {
            amps[x * d_b + i] = c.s_plus * plus[x] * c.bob_plus[i] + c.s_minus * minus[x] * c.bob_minus[i];
        }
    }
    return StateVector::normalize(std::move(amps));
}

TwoTermResult two_term_extract(const EnsembleState &ensemble, const BellLikeBasis &basis, std::size_t alice_qubits) {
    if (basis.m_qubits != alice_qubits || alice_qubits >= ensemble.n_qubits()) {
        throw ArgumentError("Bell-like basis acts on " + std::to_string(basis.m_qubits) + " qubits, expected " +
                            std::to_string(alice_qubits) + " of " + std::to_string(ensemble.n_qubits()));
    }
    std::size_t d_b = ensemble.dim() >> alice_qubits;
    TwoTermResult out;
    TwoTermForm form{basis, {}};
    std::vector<std::optional<std::size_t>> slot_owner(basis.family.size());

    for (std::size_t alpha = 0; alpha < ensemble.terms().size(); alpha++) {
        const StateVector &psi = ensemble.terms()[alpha].vector;
        std::vector<std::size_t> support;
        std::vector<std::pair<std::vector<Complex>, std::vector<Complex>>> parts;
        for (std::size_t i = 0; i < basis.family.size(); i++) {
            auto p = bob_projection(psi, basis.family[i].first, d_b);
            auto m = bob_projection(psi, basis.family[i].second, d_b);
            double w = std::real(inner(p, p)) + std::real(inner(m, m));
            if (w > kSupportTol) {
                support.push_back(i);
            }
            parts.emplace_back(std::move(p), std::move(m));
        }
        if (support.size() != 1) {
            out.violations.push_back({alpha, "multi-slot support"});
            continue;
        }
        std::size_t q = support.front();
        auto &[p, m] = parts[q];
        double np = norm_of(p);
        double nm = norm_of(m);
        if (np * np <= kSupportTol || nm * nm <= kSupportTol) {
            out.violations.push_back({alpha, "single-term support"});
            continue;
        }
        StateVector bob_plus = StateVector::normalize(p);
        StateVector bob_minus = StateVector::normalize(m);
        if (phase_equal(bob_plus, bob_minus)) {
            out.violations.push_back({alpha, "identical collapses"});
            continue;
        }
        if (slot_owner[q]) {
            out.violations.push_back({alpha, "shared slot"});
            continue;
        }
        slot_owner[q] = alpha;
        form.components.push_back({q, np, nm, std::move(bob_plus), std::move(bob_minus)});
    }
    if (out.violations.empty()) {
        out.form = std::move(form);
    }
    return out;
}

bool no_shared_component_check(const TwoTermForm &form, double tol) {
    std::vector<StateVector> full;
    for (std::size_t k = 0; k < form.components.size(); k++) {
        full.push_back(form.component_vector(k));
    }
    for (std::size_t a = 0; a < full.size(); a++) {
        for (std::size_t b = a + 1; b < full.size(); b++) {
            if (phase_equal(full[a], full[b], tol)) {
                return false;
            }
        }
    }
    return true;
}

EnsembleState max_rank_family(std::size_t n_qubits, std::size_t alice_qubits, std::uint64_t seed) {
    if (alice_qubits < 1 || alice_qubits >= n_qubits) {
        throw ArgumentError("need 1 <= alice_qubits < n_qubits (got M=" + std::to_string(alice_qubits) +
                            ", N=" + std::to_string(n_qubits) + ")");
    }
    std::size_t d_a = std::size_t{1} << alice_qubits;
    std::size_t d_b = std::size_t{1} << (n_qubits - alice_qubits);
    if (d_a * d_b > max_dimension()) {
        throw SizeError("2^" + std::to_string(n_qubits) + " exceeds the maximum dimension");
    }
    std::size_t k_slots = d_a / 2;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> share(0.1, 0.9);
    std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> weight(0.2, 1.0);

    std::vector<std::vector<Complex>> bob_vectors;
    auto distinct_enough = [&](const std::vector<Complex> &v) {
        for (const auto &u : bob_vectors) {
            if (std::abs(inner(u, v)) > 0.999) {
                return false;
            }
        }
        return true;
    };

    std::vector<EnsembleTerm> terms;
    double total = 0;
    for (std::size_t q = 0; q < k_slots; q++) {
        double p = share(rng);
        Complex s_plus = std::polar(std::sqrt(p), phase(rng));
        Complex s_minus = std::polar(std::sqrt(1 - p), phase(rng));
        std::vector<Complex> eta_plus, eta_minus;
        do {
            eta_plus = haar_amplitudes(d_b, rng);
        } while (!distinct_enough(eta_plus));
        bob_vectors.push_back(eta_plus);
        do {
            eta_minus = haar_amplitudes(d_b, rng);
        } while (!distinct_enough(eta_minus));
        bob_vectors.push_back(eta_minus);

        std::vector<Complex> amps(d_a * d_b);
        for (std::size_t i = 0; i < d_b; i++) {
            amps[q * d_b + i] = s_plus * eta_plus[i];
            amps[(d_a - 1 - q) * d_b + i] = s_minus * eta_minus[i];
        }
        double w = weight(rng);
        total += w;
        terms.push_back({w, StateVector::normalize(std::move(amps))});
    }
    for (auto &t : terms) {
        t.weight /= total;
    }
    return EnsembleState(n_qubits, std::move(terms));
}

EnsembleState with_shared_slot_component(const EnsembleState &family, std::size_t alice_qubits, std::uint64_t seed) {
    auto extracted = two_term_extract(family, BellLikeBasis::computational(alice_qubits, 0.0), alice_qubits);
    if (!extracted.ok() || extracted.form->components.empty()) {
        throw ArgumentError("input is not a two-term family over the computational pairs");
    }
    TwoTermForm form = *extracted.form;
    TwoTermComponent extra = form.components.front();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> share(0.1, 0.9);
    std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
    // Keep the new split well away from the existing one so the mixture is visibly mixed.
    double old_share = std::norm(extra.s_plus);
    double p = share(rng);
    if (std::abs(p - old_share) < 0.2) {
        p = old_share < 0.5 ? old_share + 0.3 : old_share - 0.3;
    }
    extra.s_plus = std::polar(std::sqrt(p), phase(rng));
    extra.s_minus = std::polar(std::sqrt(1 - p), phase(rng));
    form.components.push_back(extra);

    std::size_t k = family.terms().size();
    std::vector<EnsembleTerm> terms;
    for (const auto &t : family.terms()) {
        terms.push_back({t.weight * static_cast<double>(k) / static_cast<double>(k + 1), t.vector});
    }
    terms.push_back({1.0 / static_cast<double>(k + 1), form.component_vector(form.components.size() - 1)});
    return EnsembleState(family.n_qubits(), std::move(terms));
}

SteeringProtocol bell_like_protocol(std::size_t n_qubits, std::size_t alice_qubits, double beta_1, double beta_2,
                                    const std::string &family) {
    auto make = [&](double beta) {
        if (family == "computational") {
            return BellLikeBasis::computational(alice_qubits, beta);
        }
        if (family == "bell") {
            return BellLikeBasis::bell(alice_qubits, beta);
        }
        throw ArgumentError("unknown Bell-like family '" + family + "'");
    };
    return SteeringProtocol(n_qubits, alice_qubits, bell_like_setting(make(beta_1)), bell_like_setting(make(beta_2)));
}

}  // namespace steerlab
