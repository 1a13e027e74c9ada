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

#include <optional>
#include <vector>

#include <Eigen/Sparse>

#include "fuelcell/cluster.hpp"
#include "fuelcell/field.hpp"

namespace fuelcell {

/// Coupling g, interaction time tau and Poisson injection rate p.
struct MaserParams {
    double g = 1.0;
    double tau = 0.05;
    double p = 1.0;

    double g_tau() const noexcept { return g * tau; }
    /// Effective coupling rate p (g tau)^2.
    double mu() const noexcept { return p * g_tau() * g_tau(); }

    /// Throws Error(ParameterOutOfRange) unless g, tau > 0, p >= 0 and g tau < 1.
    /// p = 0 is allowed: it switches the bath off.
    void validate() const;
    /// The second-order generator is a poor description from here on.
    bool strong_coupling() const noexcept { return g_tau() >= 0.3; }
};

/// Master-equation coefficients of a fuel.
struct FuelCoefficients {
    double r_e = 0.0;  // absorption weight
    double r_g = 0.0;  // emission weight
    Complex lambda{};  // displacement amplitude, couples to a^dagger
    Complex xi{};      // squeezing amplitude

    double gap() const noexcept { return r_g - r_e; }
};

/// Largest absolute difference over (r_e, r_g, Re/Im lambda, Re/Im xi),
/// divided by the largest absolute entry of the reference.
double relative_coefficient_error(const FuelCoefficients& value, const FuelCoefficients& reference);

/// Closed-form coefficient sums over the cluster matrix elements.
/// Throws Error(InvalidState) if an interference sum is not real or a rate
/// is more negative than -1e-10; smaller negatives are clamped to zero.
FuelCoefficients coefficients_from_table(const ClusterState& state);

struct OracleOptions {
    int fock_dim = 12;
    BasisOrdering ordering = BasisOrdering::Standard;
    /// Relative projection residual allowed; <= 0 selects 10 g_tau.
    double residual_tolerance = 0.0;
};

struct OracleFit {
    FuelCoefficients coefficients;
    /// ||(S - 1)/(g tau)^2 - fitted generator|| / ||(S - 1)/(g tau)^2|| on the trusted block.
    double residual = 0.0;
    /// Disagreement between the fitted xi and conj(coefficient of the squeeze-decay term),
    /// and the same for lambda; both vanish for a Lindblad-form map.
    double conjugation_mismatch = 0.0;
};

/// Independent route to the coefficients: builds the kicked map from the
/// second-order propagator, forms (S - 1)/(g tau)^2 and projects it onto the
/// generator basis {L_e, L_d, L_s^e, L_s^d, -i[a^dagger, .], -i[a, .]}.
OracleFit fit_coefficients_from_propagator(const ClusterState& state, double g_tau,
                                           const OracleOptions& options = {});

/// As above; throws Error(ProjectionResidual) when the residual exceeds the tolerance.
FuelCoefficients coefficients_from_propagator(const ClusterState& state, double g_tau,
                                              const OracleOptions& options = {});

/// Column-major vectorization: vec(A X B) = (B^T kron A) vec(X).
using Superoperator = Eigen::SparseMatrix<Complex>;

Superoperator sandwich(const Operator& left, const Operator& right);  // X -> left X right
Superoperator left_multiply(const Operator& a);                       // X -> a X
Superoperator right_multiply(const Operator& a);                      // X -> X a

Superoperator lindblad_excitation(const FockSpace& fock);  // 2a+ X a - a a+ X - X a a+
Superoperator lindblad_decay(const FockSpace& fock);       // 2a X a+ - a+a X - X a+a
Superoperator squeeze_excitation(const FockSpace& fock);   // 2a+ X a+ - a+a+ X - X a+a+
Superoperator squeeze_decay(const FockSpace& fock);        // 2a X a - a a X - X a a
Superoperator commutator(const Operator& h);               // X -> -i[h, X]

Eigen::VectorXcd vectorize(const Operator& m);
Operator unvectorize(const Eigen::VectorXcd& v, int dim);

class Liouvillian {
public:
    Liouvillian(FockSpace fock, Superoperator matrix,
                std::optional<FuelCoefficients> source = std::nullopt);

    const FockSpace& fock() const noexcept { return fock_; }
    const Superoperator& matrix() const noexcept { return matrix_; }
    /// Coefficients the generator was built from, when known.
    const std::optional<FuelCoefficients>& source() const noexcept { return source_; }

    Operator apply(const Operator& rho) const;
    /// Induced 1-norm (max column sum).
    double norm1() const;

private:
    FockSpace fock_;
    Superoperator matrix_;
    std::optional<FuelCoefficients> source_;
};

/// rho' = -i[H_eff, rho] + mu (xi L_s^e + xi* L_s^d) rho + mu (r_e/2 L_e + r_g/2 L_d) rho
/// with H_eff = p g tau (lambda a^dagger + lambda* a).
Liouvillian build_liouvillian(const FuelCoefficients& coeffs, const MaserParams& params,
                              const FockSpace& fock);

enum class KickMode { Exact, SecondOrder };

/// The single-passage map rho -> Tr_atoms[U (rho_a x rho) U^dagger], stored
/// as Kraus operators and as a sparse superoperator. Building it is the
/// expensive part; applying it is a sparse product.
class KickOperator {
public:
    KickOperator(const ClusterState& state, double g_tau, const FockSpace& fock, KickMode mode);

    const FockSpace& fock() const noexcept { return fock_; }
    const Superoperator& superoperator() const noexcept { return super_; }
    const std::vector<Operator>& kraus() const noexcept { return kraus_; }

    FieldState apply(const FieldState& field) const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& vec_rho) const { return super_ * vec_rho; }

private:
    FockSpace fock_;
    std::vector<Operator> kraus_;
    Superoperator super_;
};

/// One passage of the cluster through the cavity. Throws Error(Leakage) when
/// the output puts more than leak_tol on the guard band.
FieldState kick_map(const ClusterState& state, const FieldState& field, double g_tau, KickMode mode,
                    double leak_tol = 1e-6);

}  // namespace fuelcell
