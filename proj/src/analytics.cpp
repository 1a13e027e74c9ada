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

#include "fuelcell/analytics.hpp"

#include <cmath>
#include <limits>

#include "fuelcell/errors.hpp"

namespace fuelcell {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_below_threshold(const FuelCoefficients& c) {
    if (!(c.gap() > kMachineKindTolerance)) {
        throw Error(ErrorCode::AboveThreshold,
                    "r_g - r_e = " + std::to_string(c.gap()) + ": no stationary state below threshold",
                    "coefficients");
    }
}

}  // namespace

MomentState steady_moments(const FuelCoefficients& c, const MaserParams& params) {
    require_below_threshold(c);
    const double gap = c.gap();
    const double gt = params.g_tau();
    const Complex i(0.0, 1.0);
    MomentState m;
    m.mean_a = -2.0 * i * c.lambda / (gt * gap);
    m.mean_a2 = -2.0 * (c.xi / gap + 2.0 * c.lambda * c.lambda / (gt * gt * gap * gap));
    m.mean_n = c.r_e / gap + 4.0 * std::norm(c.lambda) / (gt * gt * gap * gap);
    return m;
}

std::string_view to_string(TemperatureStatus s) {
    switch (s) {
        case TemperatureStatus::Finite: return "finite";
        case TemperatureStatus::Infinite: return "infinite";
        case TemperatureStatus::Negative: return "negative";
    }
    return "unknown";
}

ThermalReport effective_temperature(const FuelCoefficients& c) {
    if (std::abs(c.lambda) > kMachineKindTolerance || std::abs(c.xi) > kMachineKindTolerance) {
        throw Error(ErrorCode::NotThermalFuel,
                    "fuel has displacement or squeezing coherences; the field does not thermalize",
                    "coefficients");
    }
    ThermalReport report;
    const double gap = c.gap();
    if (std::abs(gap) <= kMachineKindTolerance) {
        report.status = TemperatureStatus::Infinite;
        report.temperature = kInf;
        return report;
    }
    // 1/ln(r_g/r_e): r_e = 0 gives zero temperature, r_g = 0 gives -0.
    report.temperature = 1.0 / std::log(c.r_g / c.r_e);
    if (gap < 0.0) {
        report.status = TemperatureStatus::Negative;
        return report;
    }
    report.status = TemperatureStatus::Finite;
    report.below_threshold = true;
    report.nbar = c.r_e / gap;
    report.n_ss = c.r_e / gap;
    return report;
}

ThermalReport effective_temperature(const ClusterState& state) {
    ThermalReport report = effective_temperature(coefficients_from_table(state));
    const ThermalReport averaged = effective_temperature(coefficients_from_table(phase_average(state)));
    report.phase_averaged_status = averaged.status;
    report.t_phase_averaged = averaged.temperature;
    return report;
}

SqueezedBathReport squeezed_bath_params(const FuelCoefficients& c, const MaserParams& params) {
    if (std::abs(c.lambda) > kMachineKindTolerance) {
        throw Error(ErrorCode::InvalidArgument,
                    "squeezed-bath form needs lambda = 0 (displacement present)", "lambda");
    }
    require_below_threshold(c);
    const double gap = c.gap();
    SqueezedBathReport r;
    r.kappa = params.mu() * gap / 2.0;
    r.n_cap = c.r_e / gap;
    r.m_cap = 2.0 * std::abs(c.xi) / gap;
    r.phase = std::arg(c.xi);

    const double bound = std::sqrt(r.n_cap * (r.n_cap + 1.0));
    if (r.m_cap > bound + 1e-9 * std::max(1.0, bound)) {
        throw Error(ErrorCode::Unphysical,
                    "M = " + std::to_string(r.m_cap) + " exceeds sqrt(N(N+1)) = " + std::to_string(bound),
                    "xi");
    }
    // tanh 2r = 2M / (2N + 1) = 4|xi| / (r_e + r_g)
    const double y = std::min(4.0 * std::abs(c.xi) / (c.r_e + c.r_g), 1.0);
    r.r = 0.5 * std::atanh(y);
    const double nbar = 0.5 * (2.0 * r.n_cap + 1.0) * std::sqrt((1.0 - y) * (1.0 + y)) - 0.5;
    r.nbar = (nbar < 0.0 && nbar > -1e-9) ? 0.0 : nbar;
    return r;
}

double w_state_photon_number(double theta, double psi, double phi, double delta) {
    const double c = std::cos(psi / 2.0);
    return 1.0 + std::sin(2.0 * theta) * c * c * std::cos(phi) +
           std::cos(theta) * std::sin(psi) * std::cos(delta) +
           std::sin(theta) * std::sin(psi) * std::cos(phi - delta);
}

GhzPhotonNumber ghz_photon_number(double theta) {
    const double c2 = std::cos(theta / 2.0) * std::cos(theta / 2.0);
    const double s2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
    if (s2 <= c2) return GhzPhotonNumber{kInf, true};
    return GhzPhotonNumber{c2 / (s2 - c2), false};
}

double ThresholdIncrement::partial_sum(std::size_t j) const {
    if (k == 1.0) return first_increment * static_cast<double>(j);
    // n_1 (1 - k^j) / (1 - k)
    return first_increment * -std::expm1(static_cast<double>(j) * std::log(k)) / (1.0 - k);
}

double ThresholdIncrement::limit() const {
    if (!convergent) return kInf;
    return first_increment / (1.0 - k);
}

namespace {

ThresholdIncrement increment_with(const FuelCoefficients& c, double g_tau, double factor) {
    if (std::abs(c.lambda) > kMachineKindTolerance || std::abs(c.xi) > kMachineKindTolerance) {
        throw Error(ErrorCode::NotThermalFuel, "threshold recursion needs lambda = xi = 0",
                    "coefficients");
    }
    const double gt2 = g_tau * g_tau;
    ThresholdIncrement inc;
    inc.k = 1.0 - factor * gt2 * c.gap();
    inc.first_increment = factor * gt2 * c.r_e;
    inc.convergent = c.gap() > 0.0;
    return inc;
}

}  // namespace

ThresholdIncrement threshold_increment(const FuelCoefficients& c, double g_tau) {
    return increment_with(c, g_tau, 0.5);
}

ThresholdIncrement kicked_map_increment(const FuelCoefficients& c, double g_tau) {
    return increment_with(c, g_tau, 1.0);
}

std::string_view to_string(MachineKind k) {
    switch (k) {
        case MachineKind::FirstKind: return "first_kind";
        case MachineKind::SecondKind: return "second_kind";
        case MachineKind::AtThreshold: return "at_threshold";
        case MachineKind::Inverted: return "inverted";
    }
    return "unknown";
}

MachineKind classify_machine_kind(const FuelCoefficients& c) {
    if (std::abs(c.lambda) > kMachineKindTolerance || std::abs(c.xi) > kMachineKindTolerance) {
        return MachineKind::FirstKind;
    }
    const double gap = c.gap();
    if (std::abs(gap) <= kMachineKindTolerance) return MachineKind::AtThreshold;
    return gap > 0.0 ? MachineKind::SecondKind : MachineKind::Inverted;
}

}  // namespace fuelcell
