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

#include "fuelcell/errors.hpp"
#include "fuelcell/generator.hpp"
#include "support/random_states.hpp"

using namespace fuelcell;

namespace {

Operator random_density(testing::Rng& rng, int dim, int support) {
    Operator rho = Operator::Zero(dim, dim);
    const Operator g = testing::ginibre(rng, support, support);
    rho.topLeftCorner(support, support) = g * g.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

}  // namespace

TEST_CASE("maser parameters") {
    MaserParams p;
    CHECK(p.g_tau() == doctest::Approx(0.05));
    CHECK(p.mu() == doctest::Approx(0.0025));
    CHECK_NOTHROW(p.validate());
    CHECK_FALSE(p.strong_coupling());
    p.p = 0.0;
    CHECK_NOTHROW(p.validate());
    p.p = -1.0;
    CHECK_THROWS_AS(p.validate(), Error);
    p = MaserParams{};
    p.tau = 0.0;
    CHECK_THROWS_AS(p.validate(), Error);
    p = MaserParams{1.0, 1.2, 1.0};
    CHECK_THROWS_AS(p.validate(), Error);
    p = MaserParams{1.0, 0.4, 1.0};
    CHECK(p.strong_coupling());
}

TEST_CASE("table coefficients of the named fuels") {
    const FuelCoefficients e = coefficients_from_table(make_named_state("e_state"));
    CHECK(e.r_e == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(e.r_g == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(std::abs(e.lambda) < 1e-15);
    CHECK(std::abs(e.xi) < 1e-15);

    const FuelCoefficients ghz = coefficients_from_table(make_named_state("ghz_symmetric"));
    CHECK(ghz.r_e == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(ghz.r_g == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(std::abs(ghz.lambda) + std::abs(ghz.xi) < 1e-15);

    for (double eps : {-0.3, 0.0, 0.01, 0.25}) {
        const FuelCoefficients we = coefficients_from_table(make_named_state("we_mixture", {{"epsilon", eps}}));
        CHECK(std::abs(we.r_e - (3.5 - eps)) < 1e-14);
        CHECK(std::abs(we.r_g - (3.5 + eps)) < 1e-14);
    }

    const FuelCoefficients w = coefficients_from_table(make_named_state("w_symmetric"));
    CHECK(w.r_e == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(w.r_g == doctest::Approx(4.0).epsilon(1e-14));

    for (double theta : {0.0, 0.1, 0.3, 0.7}) {
        const FuelCoefficients sq =
            coefficients_from_table(make_named_state("two_atom_squeeze", {{"theta", theta}}));
        CHECK(std::abs(sq.r_e - 2.0 * std::sin(theta) * std::sin(theta)) < 1e-14);
        CHECK(std::abs(sq.r_g - 2.0 * std::cos(theta) * std::cos(theta)) < 1e-14);
        CHECK(std::abs(sq.xi - 0.5 * std::sin(2.0 * theta)) < 1e-14);
        CHECK(std::abs(sq.lambda) < 1e-15);
    }

    for (int n = 1; n <= 3; ++n) {
        const FuelCoefficients g = coefficients_from_table(make_named_state("ground", {{"n_atoms", double(n)}}));
        CHECK(g.r_e == 0.0);
        CHECK(g.r_g == doctest::Approx(double(n)));
        const FuelCoefficients x = coefficients_from_table(make_named_state("excited", {{"n_atoms", double(n)}}));
        CHECK(x.r_e == doctest::Approx(double(n)));
        CHECK(x.r_g == 0.0);
    }
}

TEST_CASE("single-atom coherence drives the displacement") {
    StateSpec spec{"custom_pure", {}, StateVector::Ones(2) / std::sqrt(2.0), std::nullopt};
    const FuelCoefficients c = coefficients_from_table(make_named_state(spec));
    CHECK(c.r_e == doctest::Approx(0.5));
    CHECK(c.r_g == doctest::Approx(0.5));
    CHECK(std::abs(c.lambda - 0.5) < 1e-15);
}

TEST_CASE("table rates stay non-negative over random states") {
    testing::Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const FuelCoefficients c = coefficients_from_table(testing::random_cluster_state(rng, 1 + trial % 3));
        CHECK(c.r_e >= 0.0);
        CHECK(c.r_g >= 0.0);
    }
}

TEST_CASE("propagator oracle reproduces simple fuels") {
    const double gt = 0.05;
    for (int n = 1; n <= 3; ++n) {
        const FuelCoefficients c =
            coefficients_from_propagator(make_named_state("ground", {{"n_atoms", double(n)}}), gt);
        CHECK(std::abs(c.r_e) < (gt * n) * (gt * n));
        CHECK(std::abs(c.r_g - n) < 10.0 * gt * n);
        CHECK(std::abs(c.lambda) < 1e-9);
        CHECK(std::abs(c.xi) < 1e-9);
    }
    const FuelCoefficients w = coefficients_from_propagator(make_named_state("w_symmetric"), gt);
    CHECK(std::abs(w.r_e - 3.0) < 10.0 * gt * 4.0);
    CHECK(std::abs(w.r_g - 4.0) < 10.0 * gt * 4.0);
}

TEST_CASE("propagator oracle error shrinks quadratically with g tau") {
    const ClusterState s = make_named_state("w_general", {{"theta", 0.4}, {"psi", 1.1}, {"phi", 0.3}});
    const FuelCoefficients table = coefficients_from_table(s);
    const double coarse = relative_coefficient_error(coefficients_from_propagator(s, 0.04), table);
    const double fine = relative_coefficient_error(coefficients_from_propagator(s, 0.004), table);
    CHECK(fine < coarse);
    CHECK(coarse / fine > 80.0);
    CHECK(coarse / fine < 120.0);
}

TEST_CASE("propagator oracle agrees with the table on random states") {
    testing::Rng rng(99);
    const double gt = 0.05;
    for (int trial = 0; trial < 30; ++trial) {
        const ClusterState s = testing::random_cluster_state(rng, 1 + trial % 3);
        const OracleFit fit = fit_coefficients_from_propagator(s, gt);
        CHECK(relative_coefficient_error(fit.coefficients, coefficients_from_table(s)) <= 10.0 * gt);
        CHECK(fit.conjugation_mismatch < 10.0 * gt);
    }
}

TEST_CASE("propagator oracle option checks") {
    const ClusterState s = make_named_state("w_symmetric");
    CHECK_THROWS_AS(fit_coefficients_from_propagator(s, 0.0), Error);
    CHECK_THROWS_AS(fit_coefficients_from_propagator(s, 1.5), Error);
    OracleOptions tight;
    tight.residual_tolerance = 1e-14;
    try {
        coefficients_from_propagator(s, 0.05, tight);
        FAIL("expected a projection residual error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ProjectionResidual);
    }
}

TEST_CASE("lexicographic ordering misreads three-atom fuels") {
    const ClusterState s = make_named_state("w_symmetric");
    OracleOptions lex;
    lex.ordering = BasisOrdering::Lexicographic;
    const double gt = 0.01;
    const FuelCoefficients table = coefficients_from_table(s);
    CHECK(relative_coefficient_error(coefficients_from_propagator(s, gt), table) < 10.0 * gt);
    CHECK(relative_coefficient_error(coefficients_from_propagator(s, gt, lex), table) > 10.0 * gt);
}

TEST_CASE("superoperator building blocks") {
    testing::Rng rng(4);
    const int d = 6;
    const Operator x = testing::ginibre(rng, d, d);
    const Operator l = testing::ginibre(rng, d, d);
    const Operator r = testing::ginibre(rng, d, d);
    CHECK((unvectorize(sandwich(l, r) * vectorize(x), d) - l * x * r).norm() < 1e-12);
    CHECK((unvectorize(left_multiply(l) * vectorize(x), d) - l * x).norm() < 1e-12);
    CHECK((unvectorize(right_multiply(r) * vectorize(x), d) - x * r).norm() < 1e-12);
    const Operator comm = unvectorize(commutator(l) * vectorize(x), d);
    CHECK((comm - Complex(0.0, -1.0) * (l * x - x * l)).norm() < 1e-12);
}

TEST_CASE("liouvillian construction") {
    const FockSpace fock(10);
    const MaserParams params;
    const Liouvillian zero = build_liouvillian(FuelCoefficients{}, params, fock);
    CHECK(zero.matrix().nonZeros() == 0);
    CHECK(zero.norm1() == 0.0);

    const FuelCoefficients ghz = coefficients_from_table(make_named_state("ghz_symmetric"));
    const Liouvillian lg = build_liouvillian(ghz, params, fock);
    const Superoperator expected = (0.75 * params.mu()) * (lindblad_excitation(fock) + lindblad_decay(fock));
    CHECK(Superoperator(lg.matrix() - expected).norm() < 1e-15);
    REQUIRE(lg.source().has_value());
    CHECK(lg.source()->r_e == ghz.r_e);
}

TEST_CASE("liouvillian preserves trace and hermiticity") {
    testing::Rng rng(8);
    const FockSpace fock(12);
    const MaserParams params{1.0, 0.1, 0.7};
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        FuelCoefficients c;
        c.r_e = u(rng);
        c.r_g = u(rng);
        c.lambda = testing::gaussian_complex(rng);
        c.xi = testing::gaussian_complex(rng) * 0.3;
        const Liouvillian l = build_liouvillian(c, params, fock);
        // Keep the test state off the top levels, where truncation breaks the
        // ladder algebra.
        const Operator rho = random_density(rng, fock.dim(), fock.dim() - 3);
        const Operator drho = l.apply(rho);
        CHECK(std::abs(drho.trace()) < 1e-12);
        CHECK(hermiticity_error(drho) < 1e-12);
    }
}

TEST_CASE("kick map") {
    const FockSpace fock(12);
    const FieldState vac = FieldState::vacuum(fock);
    const ClusterState w = make_named_state("w_symmetric");
    for (KickMode mode : {KickMode::Exact, KickMode::SecondOrder}) {
        const FieldState same = kick_map(w, vac, 0.0, mode);
        CHECK((same.matrix() - vac.matrix()).norm() < 1e-14);
    }

    const ClusterState up = make_named_state("excited", {{"n_atoms", 1}});
    for (double gt : {0.05, 0.3, 1.2}) {
        const FieldState out = kick_map(up, vac, gt, KickMode::Exact);
        CHECK(out.mean_n() == doctest::Approx(std::sin(gt) * std::sin(gt)).epsilon(1e-12));
    }

    testing::Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const ClusterState s = testing::random_cluster_state(rng, 1 + trial % 3);
        const FieldState field(fock, random_density(rng, fock.dim(), 5));
        const FieldState out = kick_map(s, field, 0.2, KickMode::Exact);
        CHECK(std::abs(out.matrix().trace() - 1.0) < 1e-12);
        CHECK(out.min_eigenvalue() > -1e-12);
    }

    CHECK_THROWS_AS(kick_map(w, FieldState::fock_state(fock, 11), 0.5, KickMode::Exact), Error);
    CHECK_THROWS_AS(KickOperator(w, -0.1, fock, KickMode::Exact), Error);
    const KickOperator other(w, 0.1, FockSpace(8), KickMode::Exact);
    CHECK_THROWS_AS(other.apply(vac), Error);
}

TEST_CASE("kraus operators are complete below the guard band") {
    const FockSpace fock(10);
    testing::Rng rng(17);
    const ClusterState s = testing::random_cluster_state(rng, 3);
    const KickOperator kick(s, 0.2, fock, KickMode::Exact);
    Operator sum = Operator::Zero(fock.dim(), fock.dim());
    for (const auto& k : kick.kraus()) sum += k.adjoint() * k;
    const int safe = fock.trusted_levels() - 3;
    CHECK((sum.topLeftCorner(safe, safe) - Operator::Identity(safe, safe)).cwiseAbs().maxCoeff() < 1e-12);
}
