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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "fuelcell/basis.hpp"

namespace fuelcell {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Truncated single-mode Fock space |0>..|dim-1>.
///
/// The top 10% of levels (at least one) form a guard band. Population found
/// there means the truncation is no longer faithful to the infinite ladder.
class FockSpace {
public:
    explicit FockSpace(int dim);

    int dim() const noexcept { return dim_; }
    int guard_levels() const noexcept { return guard_; }
    /// Levels below the guard band.
    int trusted_levels() const noexcept { return dim_ - guard_; }

    friend bool operator==(const FockSpace&, const FockSpace&) = default;

private:
    int dim_;
    int guard_;
};

Operator annihilation(const FockSpace& fock);
Operator creation(const FockSpace& fock);
Operator number_operator(const FockSpace& fock);

/// Collective coupling P = a S+ + a^dagger S- on atoms (x) field, standard
/// basis ordering. The interaction Hamiltonian is g P.
Operator collective_coupling(int n_atoms, const FockSpace& fock,
                             BasisOrdering ordering = BasisOrdering::Standard);

/// H_int = g sum_j (a sigma_j^+ + a^dagger sigma_j^-), hbar = 1.
Operator interaction_hamiltonian(int n_atoms, const FockSpace& fock, double g);

/// exp(-i H tau) via the Hermitian eigendecomposition of H.
/// Throws Error(NotHermitian) when ||H - H^dagger|| is above 1e-12 (relative).
Operator exact_propagator(const Operator& hamiltonian, double tau);

/// Closed-form propagator to second order in g*tau, assembled element by
/// element from the analytic block tables for one, two and three atoms.
/// Elements that vanish analytically are exact zeros. Rows that reach the
/// guard band are only as good as the truncated ladder operators.
Operator second_order_propagator(int n_atoms, double g_tau, const FockSpace& fock,
                                 BasisOrdering ordering = BasisOrdering::Standard);

/// Computational-to-Dicke basis change for 2 or 3 atoms (atomic space only).
/// Columns are the collective states: triplet then singlet for N=2,
/// quadruplet then two doublets for N=3.
Operator dicke_transform(int n_atoms);

/// Joint state of an atomic cluster and the field, ordered atoms (x) field:
/// joint index = atom_index * fock.dim() + photon_number.
class JointState {
public:
    JointState(int n_atoms, FockSpace fock, Operator matrix);

    static JointState product(const Operator& atoms, const Operator& field);

    int n_atoms() const noexcept { return n_atoms_; }
    const FockSpace& fock() const noexcept { return fock_; }
    const Operator& matrix() const noexcept { return matrix_; }

    Operator trace_out_atoms() const;
    Operator trace_out_field() const;

private:
    int n_atoms_;
    FockSpace fock_;
    Operator matrix_;
};

/// ||A - A^dagger||_max.
double hermiticity_error(const Operator& m);

/// ||U U^dagger - 1||_max.
double unitarity_error(const Operator& u);

/// Spectral norm (largest singular value).
double operator_norm(const Operator& m);

/// Joint-space indices whose photon number lies below the guard band.
std::vector<int> trusted_joint_indices(int n_atoms, const FockSpace& fock);

/// Submatrix on the given row and column index sets.
Operator restrict_to(const Operator& m, const std::vector<int>& indices);

}  // namespace fuelcell
