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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuelcell/basis.hpp"
#include "fuelcell/hilbert.hpp"

namespace fuelcell {

inline constexpr double kClusterTolerance = 1e-10;

struct ValidationReport {
    int n_atoms = 0;
    double hermiticity_error = 0.0;
    double trace_error = 0.0;      // |Tr rho - 1|
    double min_eigenvalue = 0.0;
    int rank = 0;                  // eigenvalues above the tolerance
    double tolerance = kClusterTolerance;

    bool hermitian() const { return hermiticity_error <= tolerance; }
    bool unit_trace() const { return trace_error <= tolerance; }
    bool positive() const { return min_eigenvalue >= -tolerance; }
    bool valid() const { return hermitian() && unit_trace() && positive(); }

    /// Human-readable list of violated invariants, empty when valid.
    std::vector<std::string> violations() const;
};

/// Checks a candidate cluster density matrix. The atom count is inferred
/// from the dimension; anything other than 2, 4 or 8 rows throws
/// Error(DimensionMismatch).
ValidationReport validate(const Operator& matrix, double tolerance = kClusterTolerance);

/// Density matrix of an N-atom cluster in the standard basis ordering.
/// Construction validates; an invalid matrix throws Error(InvalidState).
class ClusterState {
public:
    static ClusterState from_matrix(const Operator& matrix, double tolerance = kClusterTolerance);
    static ClusterState from_amplitudes(const StateVector& amplitudes);
    /// Replaces M by (M + M^dagger)/2 before validating, recording the change.
    static ClusterState from_symmetrized(const Operator& matrix, double tolerance = kClusterTolerance);

    int n_atoms() const noexcept { return n_atoms_; }
    int dimension() const noexcept { return static_cast<int>(matrix_.rows()); }
    const Operator& matrix() const noexcept { return matrix_; }
    /// 0-based element a_ij.
    Complex operator()(int i, int j) const { return matrix_(i, j); }

    /// Size of the Hermitian symmetrization applied to a custom matrix,
    /// max |M - (M + M^dagger)/2|. Zero for every other constructor.
    double symmetrization_adjustment() const noexcept { return adjustment_; }

private:
    ClusterState(int n_atoms, Operator matrix, double adjustment)
        : n_atoms_(n_atoms), matrix_(std::move(matrix)), adjustment_(adjustment) {}

    int n_atoms_;
    Operator matrix_;
    double adjustment_;
};

enum class CoherenceClass { Population, HeatExchange, Displacement, Squeezing, Ineffective };

std::string_view to_string(CoherenceClass c);

/// Role of the density-matrix element (i, j), 0-based indices.
///
/// With d the difference in excitation number and h the Hamming distance:
/// i == j is a population, d = 0 a heat-exchange coherence, d = 1 with a
/// single flipped atom a displacement coherence, d = 2 a squeezing
/// coherence; everything else never reaches the second-order generator.
CoherenceClass classify_entry(int i, int j, int n_atoms);

/// Drops every coherence, keeping the populations.
ClusterState phase_average(const ClusterState& state);

/// Named fuels. Angles in radians.
///
///   two_atom_squeeze   theta in [0, pi/4)       cos t |gg> + sin t |ee>
///   w_general          theta, psi, phi, delta   single-excitation family
///   w_symmetric                                 (|gge>+|geg>+|egg>)/sqrt3
///   ghz_general        theta                    cos(t/2)|eee> + sin(t/2)|ggg>
///   ghz_symmetric                               theta = pi/2
///   e_state                                     (|eeg>+|ege>+|gee>)/sqrt3
///   we_mixture         epsilon in [-1/2, 1/2]   (1/2+eps) W + (1/2-eps) E
///   ground, excited    n_atoms in {1,2,3}
///   custom_pure        amplitudes (normalized within 1e-10)
///   custom_matrix      matrix (symmetrized first)
struct StateSpec {
    std::string name;
    std::map<std::string, double> params;
    std::optional<StateVector> amplitudes;
    std::optional<Operator> matrix;
};

inline constexpr double kDefaultWeMixtureEpsilon = 0.01;

ClusterState make_named_state(const StateSpec& spec);
ClusterState make_named_state(std::string_view name, const std::map<std::string, double>& params = {});

/// Names accepted by make_named_state, excluding the custom_* entries.
const std::vector<std::string>& named_state_catalog();

}  // namespace fuelcell
