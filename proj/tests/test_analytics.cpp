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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fuelcell/analytics.hpp"
#include "fuelcell/errors.hpp"
#include "support/random_states.hpp"

using namespace fuelcell;
using std::numbers::pi;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("steady moments") {
    const MaserParams params;
    const MomentState w = steady_moments(FuelCoefficients{3.0, 4.0, 0.0, 0.0}, params);
    CHECK(std::abs(w.mean_a) == 0.0);
    CHECK(std::abs(w.mean_a2) == 0.0);
    CHECK(w.mean_n == doctest::Approx(3.0).epsilon(1e-15));

    const MomentState empty = steady_moments(FuelCoefficients{0.0, 2.0, 0.0, 0.0}, params);
    CHECK(empty.mean_n == 0.0);
    CHECK(std::abs(empty.mean_a) == 0.0);

    const FuelCoefficients sq = coefficients_from_table(make_named_state("two_atom_squeeze", {{"theta", 0.3}}));
    const MomentState s = steady_moments(sq, params);
    CHECK(s.mean_a2.real() == doctest::Approx(-std::sin(0.6) / (2.0 * std::cos(0.6))).epsilon(1e-12));
    CHECK(s.mean_a2.real() == doctest::Approx(-0.34207).epsilon(1e-4));

    CHECK(code_of([&] { steady_moments(FuelCoefficients{2.0, 2.0, 0.0, 0.0}, params); }) ==
          ErrorCode::AboveThreshold);
    CHECK(code_of([&] { steady_moments(FuelCoefficients{3.0, 2.0, 0.0, 0.0}, params); }) ==
          ErrorCode::AboveThreshold);
}

TEST_CASE("steady moments of a displaced fuel") {
    const MaserParams params{1.0, 0.1, 1.0};
    const FuelCoefficients c{1.0, 2.0, Complex(0.3, 0.4), 0.0};
    const MomentState m = steady_moments(c, params);
    // <a> = -2 i lambda / (g tau (r_g - r_e)); the coherent part adds |<a>|^2 to n.
    const Complex a = Complex(0.0, -2.0) * c.lambda / (params.g_tau() * c.gap());
    CHECK(std::abs(m.mean_a - a) < 1e-12);
    CHECK(std::abs(m.mean_a2 - a * a) < 1e-12);
    CHECK(m.mean_n == doctest::Approx(c.r_e / c.gap() + std::norm(a)).epsilon(1e-12));
}

TEST_CASE("effective temperature") {
    const ThermalReport w = effective_temperature(FuelCoefficients{3.0, 4.0, 0.0, 0.0});
    CHECK(w.status == TemperatureStatus::Finite);
    CHECK(w.below_threshold);
    CHECK(w.temperature == doctest::Approx(1.0 / std::log(4.0 / 3.0)).epsilon(1e-14));
    CHECK(w.temperature == doctest::Approx(3.476).epsilon(1e-3));
    REQUIRE(w.nbar);
    CHECK(*w.nbar == doctest::Approx(3.0));

    const ThermalReport avg = effective_temperature(FuelCoefficients{1.0, 2.0, 0.0, 0.0});
    CHECK(avg.temperature == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-14));

    const ThermalReport full = effective_temperature(make_named_state("w_symmetric"));
    REQUIRE(full.t_phase_averaged);
    CHECK(*full.t_phase_averaged == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-12));
    CHECK(full.temperature == doctest::Approx(1.0 / std::log(4.0 / 3.0)).epsilon(1e-12));

    const ThermalReport ghz = effective_temperature(make_named_state("ghz_symmetric"));
    CHECK(ghz.status == TemperatureStatus::Infinite);
    CHECK(std::isinf(ghz.temperature));
    CHECK_FALSE(ghz.below_threshold);
    CHECK_FALSE(ghz.nbar);

    const ThermalReport e = effective_temperature(make_named_state("e_state"));
    CHECK(e.status == TemperatureStatus::Negative);
    CHECK(e.temperature < 0.0);

    CHECK(effective_temperature(make_named_state("ground")).temperature == 0.0);
    CHECK(code_of([] { effective_temperature(make_named_state("two_atom_squeeze")); }) ==
          ErrorCode::NotThermalFuel);
}

TEST_CASE("we mixture temperature ratio approaches seven thirds") {
    double previous = 0.0;
    for (double eps : {0.1, 0.01, 0.001}) {
        const ThermalReport r = effective_temperature(make_named_state("we_mixture", {{"epsilon", eps}}));
        REQUIRE(r.t_phase_averaged);
        const double ratio = r.temperature / *r.t_phase_averaged;
        CHECK(r.temperature > *r.t_phase_averaged);
        if (previous > 0.0) CHECK(std::abs(ratio - 7.0 / 3.0) < std::abs(previous - 7.0 / 3.0));
        previous = ratio;
    }
    CHECK(std::abs(previous - 7.0 / 3.0) < 1e-3);
}

TEST_CASE("squeezed bath parameters") {
    const MaserParams params;
    const auto report = [&](double theta) {
        return squeezed_bath_params(
            coefficients_from_table(make_named_state("two_atom_squeeze", {{"theta", theta}})), params);
    };
    CHECK(report(1e-9).r < 1e-8);
    const SqueezedBathReport r6 = report(0.6);
    CHECK(r6.r == doctest::Approx(std::atanh(std::tan(0.6))).epsilon(1e-12));
    CHECK(std::abs(r6.r - 0.836849624779) < 1e-9);
    CHECK(std::abs(r6.nbar) < 1e-12);
    CHECK(report(pi / 4 - 1e-3).r > 3.0);
    double previous = -1.0;
    for (double theta = 0.05; theta < pi / 4; theta += 0.05) {
        const double r = report(theta).r;
        CHECK(r > previous);
        previous = r;
    }
    for (double theta : {0.1, 0.4, 0.7}) {
        const SqueezedBathReport b = report(theta);
        CHECK(b.m_cap <= std::sqrt(b.n_cap * (b.n_cap + 1.0)) + 1e-12);
        CHECK(b.kappa == doctest::Approx(params.mu() * std::cos(2.0 * theta)));
    }

    CHECK(code_of([&] { squeezed_bath_params(FuelCoefficients{1.0, 1.0, 0.0, 0.2}, params); }) ==
          ErrorCode::AboveThreshold);
    CHECK(code_of([&] { squeezed_bath_params(FuelCoefficients{0.0, 1.0, 0.0, 0.4}, params); }) ==
          ErrorCode::Unphysical);
    CHECK(code_of([&] { squeezed_bath_params(FuelCoefficients{0.5, 1.0, 0.1, 0.1}, params); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("w family photon number") {
    CHECK(w_state_photon_number(pi / 4, 2.0 * std::asin(1.0 / std::sqrt(3.0)), 0.0, 0.0) ==
          doctest::Approx(3.0).epsilon(1e-14));
    CHECK(w_state_photon_number(0.0, 0.0, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    double best = 0.0;
    for (int i = 0; i <= 60; ++i) {
        for (int j = 0; j <= 60; ++j) {
            best = std::max(best, w_state_photon_number(i * pi / 120, j * pi / 30, 0.0, 0.0));
        }
    }
    CHECK(best <= 3.0 + 1e-12);
    // Agrees with the generic table route for random angles.
    testing::Rng rng(2);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    for (int trial = 0; trial < 50; ++trial) {
        const double t = angle(rng), p = angle(rng), f = angle(rng), d = angle(rng);
        const FuelCoefficients c = coefficients_from_table(
            make_named_state("w_general", {{"theta", t}, {"psi", p}, {"phi", f}, {"delta", d}}));
        if (c.gap() < 0.05) continue;
        CHECK(w_state_photon_number(t, p, f, d) == doctest::Approx(c.r_e / c.gap()).epsilon(1e-10));
    }
}

TEST_CASE("ghz family photon number") {
    CHECK(ghz_photon_number(pi).value == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(ghz_photon_number(pi).value) < 1e-14);
    CHECK(ghz_photon_number(2.0 * pi / 3.0).value == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(ghz_photon_number(pi / 2).divergent);
    CHECK(ghz_photon_number(1.0).divergent);
    CHECK(std::isinf(ghz_photon_number(1.0).value));
    double previous = 0.0;
    for (double delta : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const GhzPhotonNumber g = ghz_photon_number(pi / 2 + delta);
        CHECK_FALSE(g.divergent);
        CHECK(g.value > previous);
        previous = g.value;
    }
}

TEST_CASE("threshold recursion") {
    const double gt = 0.05;
    const ThresholdIncrement w = threshold_increment(FuelCoefficients{3.0, 4.0, 0.0, 0.0}, gt);
    CHECK(w.k == doctest::Approx(0.99875).epsilon(1e-14));
    CHECK(w.convergent);
    CHECK(w.limit() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(w.partial_sum(0) == 0.0);
    CHECK(w.partial_sum(1) == doctest::Approx(w.first_increment));
    CHECK(std::abs(w.partial_sum(20000) - 3.0) < 3e-3);
    for (std::size_t j = 1; j < 100; ++j) CHECK(w.partial_sum(j + 1) > w.partial_sum(j));

    const ThresholdIncrement at = threshold_increment(FuelCoefficients{1.5, 1.5, 0.0, 0.0}, gt);
    CHECK(at.k == 1.0);
    CHECK_FALSE(at.convergent);
    CHECK(std::isinf(at.limit()));
    const ThresholdIncrement inv = threshold_increment(FuelCoefficients{4.0, 3.0, 0.0, 0.0}, gt);
    CHECK(inv.k > 1.0);
    CHECK_FALSE(inv.convergent);

    const ThresholdIncrement kicked = kicked_map_increment(FuelCoefficients{3.0, 4.0, 0.0, 0.0}, gt);
    CHECK(kicked.k == doctest::Approx(1.0 - gt * gt).epsilon(1e-14));
    CHECK(kicked.limit() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("machine kind") {
    CHECK(classify_machine_kind(coefficients_from_table(make_named_state("two_atom_squeeze"))) ==
          MachineKind::FirstKind);
    CHECK(classify_machine_kind(coefficients_from_table(make_named_state("w_symmetric"))) == MachineKind::SecondKind);
    CHECK(classify_machine_kind(coefficients_from_table(make_named_state("ghz_symmetric"))) ==
          MachineKind::AtThreshold);
    CHECK(classify_machine_kind(coefficients_from_table(make_named_state("e_state"))) == MachineKind::Inverted);
    CHECK(classify_machine_kind(FuelCoefficients{1.0, 1.0 + 1e-13, 0.0, 0.0}) == MachineKind::AtThreshold);
    CHECK(classify_machine_kind(FuelCoefficients{1.0, 2.0, 1e-13, 0.0}) == MachineKind::SecondKind);
    CHECK(classify_machine_kind(FuelCoefficients{1.0, 2.0, 1e-11, 0.0}) == MachineKind::FirstKind);

    testing::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const FuelCoefficients c = coefficients_from_table(testing::random_block_diagonal_state(rng, 1 + trial % 3));
        const MachineKind k = classify_machine_kind(c);
        CHECK(k != MachineKind::FirstKind);
        CHECK((k == MachineKind::SecondKind) == (c.gap() > 1e-12));
    }
}
