// Copyright 2026 The Fuelcell Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "fuelcell/cluster.hpp"
#include "fuelcell/dynamics.hpp"
#include "fuelcell/generator.hpp"

namespace fuelcell {

/// Stationary (<a>, <a^2>, <n>) of the moment equations.
/// Throws Error(AboveThreshold) unless r_g > r_e.
MomentState steady_moments(const FuelCoefficients& coeffs, const MaserParams& params);

enum class TemperatureStatus { Finite, Infinite, Negative };

std::string_view to_string(TemperatureStatus s);

struct ThermalReport {
    TemperatureStatus status = TemperatureStatus::Finite;
    /// k_B T / (hbar omega_c). +inf at threshold; negative for inverted fuels.
    double temperature = 0.0;
    std::optional<double> nbar;  // bath occupation, below threshold only
    std::optional<double> n_ss;  // steady photon number, below threshold only
    bool below_threshold = false;

    /// Same quantities for the phase-averaged fuel, when the state is known.
    std::optional<TemperatureStatus> phase_averaged_status;
    std::optional<double> t_phase_averaged;
};

/// Temperature fixed by detailed balance, exp(-1/T) = r_e / r_g.
/// Throws Error(NotThermalFuel) if |lambda| or |xi| exceeds 1e-12.
ThermalReport effective_temperature(const FuelCoefficients& coeffs);
/// As above, additionally reporting the phase-averaged counterpart.
ThermalReport effective_temperature(const ClusterState& state);

struct SqueezedBathReport {
    double kappa = 0.0;  // damping rate mu (r_g - r_e) / 2
    double n_cap = 0.0;  // N = r_e / (r_g - r_e)
    double m_cap = 0.0;  // M = 2|xi| / (r_g - r_e)
    double r = 0.0;      // squeezing parameter
    double nbar = 0.0;   // ambient thermal occupation
    double phase = 0.0;  // arg(xi)
};

/// Maps the fuel onto a squeezed thermal bath,
///   N = (nbar + 1/2) cosh 2r - 1/2,   M = (nbar + 1/2) sinh 2r.
/// Needs lambda = 0 and r_g > r_e. Throws Error(AboveThreshold) or
/// Error(Unphysical) when M exceeds sqrt(N (N + 1)).
SqueezedBathReport squeezed_bath_params(const FuelCoefficients& coeffs, const MaserParams& params);

/// Steady photon number for the single-excitation three-atom family.
double w_state_photon_number(double theta, double psi, double phi, double delta);

struct GhzPhotonNumber {
    double value = 0.0;  // +inf when divergent
    bool divergent = false;
};

/// Steady photon number for cos(t/2)|eee> + sin(t/2)|ggg>; divergent for
/// sin^2(t/2) <= cos^2(t/2).
GhzPhotonNumber ghz_photon_number(double theta);

/// Photon-number increments of successive passages from the vacuum,
/// n_j = sum_{i=1..j} k^{i-1} n_1, for thermal fuels.
struct ThresholdIncrement {
    double k = 1.0;
    double first_increment = 0.0;
    bool convergent = false;

    double partial_sum(std::size_t j) const;
    /// n_1 / (1 - k); +inf when not convergent.
    double limit() const;
};

/// k = 1 - (g tau)^2 (r_g - r_e)/2 and n_1 = (g tau)^2 r_e / 2.
ThresholdIncrement threshold_increment(const FuelCoefficients& coeffs, double g_tau);
/// Factors of one application of 1 + (g tau)^2 (r_e/2 L_e + r_g/2 L_d):
/// k = 1 - (g tau)^2 (r_g - r_e) and n_1 = (g tau)^2 r_e. Same limit.
ThresholdIncrement kicked_map_increment(const FuelCoefficients& coeffs, double g_tau);

enum class MachineKind { FirstKind, SecondKind, AtThreshold, Inverted };

std::string_view to_string(MachineKind k);

inline constexpr double kMachineKindTolerance = 1e-12;

MachineKind classify_machine_kind(const FuelCoefficients& coeffs);

}  // namespace fuelcell
