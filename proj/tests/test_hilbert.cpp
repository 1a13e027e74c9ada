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

#include <unsupported/Eigen/KroneckerProduct>

#include "fuelcell/errors.hpp"
#include "fuelcell/hilbert.hpp"
#include "support/random_states.hpp"

using namespace fuelcell;

namespace {

int joint(int atom, int n, const FockSpace& fock) { return atom * fock.dim() + n; }

}  // namespace

TEST_CASE("basis labels follow the excitation-sorted ordering") {
    const auto& three = basis_labels(3);
    const char* expected[] = {"eee", "eeg", "ege", "gee", "egg", "geg", "gge", "ggg"};
    for (int i = 0; i < 8; ++i) {
        CHECK(three[static_cast<std::size_t>(i)].bits == expected[i]);
        CHECK(three[static_cast<std::size_t>(i)].index == i);
        CHECK(basis_index(expected[i]) == i);
    }
    for (int n = 1; n <= 3; ++n) {
        for (const auto& label : basis_labels(n)) {
            int e = 0;
            for (char c : label.bits) e += c == 'e';
            CHECK(label.excitations == e);
        }
    }
    const auto& lex = basis_labels(3, BasisOrdering::Lexicographic);
    CHECK(lex[3].bits == "egg");
    CHECK(lex[4].bits == "gee");
    CHECK_THROWS_AS(atomic_dimension(4), Error);
    CHECK_THROWS_AS(basis_index("gxe"), Error);
}

TEST_CASE("fock space keeps a guard band") {
    CHECK(FockSpace(2).guard_levels() == 1);
    CHECK(FockSpace(60).guard_levels() == 6);
    CHECK(FockSpace(60).trusted_levels() == 54);
    CHECK_THROWS_AS(FockSpace(1), Error);
}

TEST_CASE("ladder operators") {
    const FockSpace two(2);
    Operator expected(2, 2);
    expected << 0, 1, 0, 0;
    CHECK((annihilation(two) - expected).norm() == 0.0);

    const FockSpace fock(12);
    const Operator a = annihilation(fock);
    StateVector vac = StateVector::Zero(12);
    vac(0) = 1.0;
    CHECK((a * vac).norm() == 0.0);
    const Operator n = number_operator(fock);
    for (int k = 0; k < 12; ++k) CHECK(std::abs(n(k, k) - double(k)) < 1e-14);
    CHECK((creation(fock) - a.adjoint()).norm() == 0.0);
    // [a, a+] = 1 except on the top level of the truncation.
    const Operator comm = a * creation(fock) - creation(fock) * a;
    for (int k = 0; k + 1 < 12; ++k) CHECK(std::abs(comm(k, k) - 1.0) < 1e-14);
}

TEST_CASE("interaction hamiltonian matrix elements") {
    const FockSpace two(2);
    const Operator h1 = interaction_hamiltonian(1, two, 1.0);
    // |e,0> <- |g,1>
    CHECK(std::abs(h1(joint(0, 0, two), joint(1, 1, two)) - 1.0) < 1e-14);

    const FockSpace fock(6);
    const double g = 0.7;
    const Operator h3 = interaction_hamiltonian(3, fock, g);
    for (int n = 0; n + 1 < fock.dim(); ++n) {
        CHECK(std::abs(h3(joint(basis_index("eee"), n, fock), joint(basis_index("eeg"), n + 1, fock)) -
                       g * std::sqrt(n + 1.0)) < 1e-14);
    }
}

TEST_CASE("interaction hamiltonian is hermitian across sizes") {
    for (int atoms = 1; atoms <= 3; ++atoms) {
        for (int dim : {2, 3, 7, 15}) {
            const Operator h = interaction_hamiltonian(atoms, FockSpace(dim), 1.3);
            CHECK(hermiticity_error(h) < 1e-14);
        }
    }
}

TEST_CASE("exact propagator") {
    const FockSpace fock(5);
    const Operator zero = Operator::Zero(10, 10);
    CHECK(unitarity_error(exact_propagator(zero, 0.3)) < 1e-14);
    CHECK((exact_propagator(zero, 0.3) - Operator::Identity(10, 10)).norm() < 1e-14);

    testing::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Operator g = testing::ginibre(rng, 9, 9);
        const Operator h = 0.5 * (g + g.adjoint());
        CHECK(unitarity_error(exact_propagator(h, 0.9)) < 1e-12);
    }
    Operator bad = Operator::Zero(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(exact_propagator(bad, 1.0), Error);
}

TEST_CASE("single-atom exact propagator has the Rabi form") {
    const FockSpace fock(40);
    const double g_tau = 0.37;
    const Operator u = exact_propagator(interaction_hamiltonian(1, fock, 1.0), g_tau);
    for (int n = 0; n + 1 < fock.dim(); ++n) {
        const double c = std::cos(g_tau * std::sqrt(n + 1.0));
        CHECK(std::abs(u(joint(0, n, fock), joint(0, n, fock)) - c) < 1e-12);
        CHECK(std::abs(u(joint(1, n + 1, fock), joint(1, n + 1, fock)) - c) < 1e-12);
        const Complex s = Complex(0.0, -1.0) * std::sin(g_tau * std::sqrt(n + 1.0));
        CHECK(std::abs(u(joint(0, n, fock), joint(1, n + 1, fock)) - s) < 1e-12);
    }
}

TEST_CASE("second-order propagator blocks") {
    const FockSpace fock(8);
    const double gt = 0.1;
    const Operator u1 = second_order_propagator(1, gt, fock);
    for (int n = 0; n < fock.dim(); ++n) {
        CHECK(std::abs(u1(joint(0, n, fock), joint(0, n, fock)) - (1.0 - 0.5 * gt * gt * (n + 1))) < 1e-15);
        if (n + 1 < fock.dim()) {
            const Complex expected = Complex(0.0, -gt) * std::sqrt(n + 1.0);
            CHECK(std::abs(u1(joint(0, n, fock), joint(1, n + 1, fock)) - expected) < 1e-15);
        }
    }
    const Operator u3 = second_order_propagator(3, gt, fock);
    for (int n = 0; n < fock.dim(); ++n) {
        CHECK(std::abs(u3(joint(0, n, fock), joint(0, n, fock)) - 0.5 * (2.0 - 3.0 * gt * gt * (n + 1))) < 1e-15);
        CHECK(std::abs(u3(joint(7, n, fock), joint(7, n, fock)) - (1.0 - 1.5 * gt * gt * n)) < 1e-15);
    }
}

TEST_CASE("second-order propagator error is cubic in g tau") {
    const FockSpace fock(20);
    for (int atoms = 1; atoms <= 3; ++atoms) {
        const auto idx = trusted_joint_indices(atoms, fock);
        const Operator p = collective_coupling(atoms, fock);
        double previous = 0.0;
        for (double gt : {1e-1, 1e-2, 1e-3}) {
            const double err =
                operator_norm(restrict_to(second_order_propagator(atoms, gt, fock) - exact_propagator(p, gt), idx));
            if (previous > 0.0) {
                CHECK(previous / err > 500.0);
                CHECK(previous / err < 2000.0);
            }
            previous = err;
        }
    }
}

TEST_CASE("second-order propagator agrees with the exact one to O(g tau^3) entrywise") {
    const FockSpace fock(10);
    for (int atoms = 1; atoms <= 3; ++atoms) {
        const double gt = 1e-2;
        const auto idx = trusted_joint_indices(atoms, fock);
        const Operator d = second_order_propagator(atoms, gt, fock) -
                           exact_propagator(collective_coupling(atoms, fock), gt);
        CHECK(restrict_to(d, idx).cwiseAbs().maxCoeff() < 50.0 * gt * gt * gt);
    }
}

TEST_CASE("dicke transform") {
    const Operator t2 = dicke_transform(2);
    CHECK(unitarity_error(t2) < 1e-14);
    CHECK((t2.adjoint() * t2 - Operator::Identity(4, 4)).norm() < 1e-14);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(t2(1, 0)) < 1e-15);
    CHECK(std::abs(t2(1, 1) - s) < 1e-15);
    CHECK(std::abs(t2(1, 2)) < 1e-15);
    CHECK(std::abs(t2(1, 3) - s) < 1e-15);

    const Operator t3 = dicke_transform(3);
    CHECK((t3.adjoint() * t3 - Operator::Identity(8, 8)).norm() < 1e-14);
    const FockSpace fock(6);
    const Operator big = Eigen::kroneckerProduct(t3, Operator::Identity(6, 6)).eval();
    const Operator block = big.adjoint() * collective_coupling(3, fock) * big;
    // Spin-3/2 states occupy the first four Dicke columns.
    const Eigen::Index q = 4 * 6;
    CHECK(block.topRightCorner(q, block.cols() - q).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(block.bottomLeftCorner(block.rows() - q, q).cwiseAbs().maxCoeff() < 1e-14);
    CHECK_THROWS_AS(dicke_transform(1), Error);
}

TEST_CASE("joint state partial traces") {
    testing::Rng rng(3);
    const Operator ga = testing::ginibre(rng, 4, 4);
    Operator atoms = ga * ga.adjoint();
    atoms /= atoms.trace();
    const Operator gf = testing::ginibre(rng, 5, 5);
    Operator field = gf * gf.adjoint();
    field /= field.trace();
    const JointState js = JointState::product(atoms, field);
    CHECK(js.n_atoms() == 2);
    CHECK(js.fock().dim() == 5);
    CHECK((js.trace_out_atoms() - field).norm() < 1e-13);
    CHECK((js.trace_out_field() - atoms).norm() < 1e-13);
    CHECK_THROWS_AS(JointState(2, FockSpace(5), Operator::Zero(10, 10)), Error);
}
