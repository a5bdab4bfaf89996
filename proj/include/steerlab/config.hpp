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

#ifndef STEERLAB_CONFIG_HPP
#define STEERLAB_CONFIG_HPP

#include <cstddef>

namespace steerlab {

/// Numerical thresholds shared by every module. Defaults match the documented behaviour;
/// the CLI exposes `--tolerance` which overrides `purity` and `phase_equality` together.
struct Tolerances {
    double hermiticity = 1e-10;
    double eigen_residual = 1e-9;
    double rank = 1e-9;
    /// Pure iff |tr(rho_hat^2) - 1| < purity.
    double purity = 1e-8;
    /// Equal up to global phase iff 1 - |<u|v>| < phase_equality.
    double phase_equality = 1e-8;
    /// Outcomes with tr(rho_tilde) below this are treated as never occurring.
    double zero_probability = 1e-10;
    double lp_feasibility = 1e-9;
};

inline constexpr std::size_t DEFAULT_MAX_DIMENSION = std::size_t{1} << 12;

/// Largest Hilbert-space dimension any operator may have. Reads `STEERLAB_MAX_DIM`
/// on every call, falling back to 2^12 when unset or unparsable.
std::size_t max_dimension();

}  // namespace steerlab

#endif
