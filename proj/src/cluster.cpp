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

#include "fuelcell/cluster.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "fuelcell/errors.hpp"

namespace fuelcell {

namespace {

int atoms_for_dimension(Eigen::Index dim) {
    switch (dim) {
        case 2: return 1;
        case 4: return 2;
        case 8: return 3;
        default:
            throw Error(ErrorCode::DimensionMismatch,
                        "cluster matrix dimension must be 2, 4 or 8, got " + std::to_string(dim),
                        "matrix");
    }
}

std::string format_magnitude(double value) {
    std::ostringstream out;
    out.precision(3);
    out << value;
    return out.str();
}

}  // namespace

std::vector<std::string> ValidationReport::violations() const {
    std::vector<std::string> out;
    if (!hermitian()) out.push_back("hermiticity violation " + format_magnitude(hermiticity_error));
    if (!unit_trace()) out.push_back("trace violation " + format_magnitude(trace_error));
    if (!positive()) out.push_back("positivity violation " + format_magnitude(-min_eigenvalue));
    return out;
}

ValidationReport validate(const Operator& matrix, double tolerance) {
    if (matrix.rows() != matrix.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "cluster matrix must be square", "matrix");
    }
    ValidationReport report;
    report.n_atoms = atoms_for_dimension(matrix.rows());
    report.tolerance = tolerance;
    report.hermiticity_error = hermiticity_error(matrix);
    report.trace_error = std::abs(matrix.trace() - Complex(1.0, 0.0));

    Eigen::SelfAdjointEigenSolver<Operator> eig(0.5 * (matrix + matrix.adjoint()),
                                                Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& values = eig.eigenvalues();
    report.min_eigenvalue = values.minCoeff();
    report.rank = static_cast<int>((values.array() > tolerance).count());
    return report;
}

ClusterState ClusterState::from_matrix(const Operator& matrix, double tolerance) {
    const ValidationReport report = validate(matrix, tolerance);
    if (!report.valid()) {
        std::string message = "invalid cluster state:";
        for (const auto& v : report.violations()) message += " " + v + ";";
        throw Error(ErrorCode::InvalidState, message, "matrix");
    }
    return ClusterState(report.n_atoms, matrix, 0.0);
}

ClusterState ClusterState::from_amplitudes(const StateVector& amplitudes) {
    const int n_atoms = atoms_for_dimension(amplitudes.size());
    const double norm = amplitudes.squaredNorm();
    if (std::abs(norm - 1.0) > kClusterTolerance) {
        throw Error(ErrorCode::NotNormalized,
                    "amplitudes have squared norm " + format_magnitude(norm), "amplitudes");
    }
    Operator rho = amplitudes * amplitudes.adjoint();
    return ClusterState(n_atoms, std::move(rho), 0.0);
}

ClusterState ClusterState::from_symmetrized(const Operator& m, double tolerance) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "cluster matrix must be square", "matrix");
    }
    const Operator symmetric = 0.5 * (m + m.adjoint());
    const double adjustment = (m - symmetric).cwiseAbs().maxCoeff();
    ClusterState state = from_matrix(symmetric, tolerance);
    state.adjustment_ = adjustment;
    return state;
}

std::string_view to_string(CoherenceClass c) {
    switch (c) {
        case CoherenceClass::Population: return "population";
        case CoherenceClass::HeatExchange: return "heat_exchange";
        case CoherenceClass::Displacement: return "displacement";
        case CoherenceClass::Squeezing: return "squeezing";
        case CoherenceClass::Ineffective: return "ineffective";
    }
    return "unknown";
}

CoherenceClass classify_entry(int i, int j, int n_atoms) {
    const int dim = atomic_dimension(n_atoms);
    if (i < 0 || j < 0 || i >= dim || j >= dim) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") outside a " + std::to_string(dim) + "x" + std::to_string(dim) + " cluster",
                    "index");
    }
    if (i == j) return CoherenceClass::Population;
    const auto& labels = basis_labels(n_atoms);
    const BasisLabel& li = labels[static_cast<std::size_t>(i)];
    const BasisLabel& lj = labels[static_cast<std::size_t>(j)];
    const int d = std::abs(li.excitations - lj.excitations);
    const int h = hamming_distance(li, lj);
    if (d == 0) return CoherenceClass::HeatExchange;
    if (d == 1 && h == 1) return CoherenceClass::Displacement;
    if (d == 2) return CoherenceClass::Squeezing;
    return CoherenceClass::Ineffective;
}

ClusterState phase_average(const ClusterState& state) {
    Operator diag = state.matrix().diagonal().asDiagonal();
    return ClusterState::from_matrix(diag);
}

namespace {

using Params = std::map<std::string, double>;

double take(const Params& params, const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void require_keys(const std::string& name, const Params& params,
                  std::initializer_list<const char*> allowed) {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [key, value] : params) {
        if (!keys.contains(key)) {
            throw Error(ErrorCode::InvalidArgument,
                        "state '" + name + "' takes no parameter '" + key + "'", key);
        }
        if (!std::isfinite(value)) {
            throw Error(ErrorCode::ParameterOutOfRange, "parameter '" + key + "' is not finite", key);
        }
    }
}

StateVector basis_vector(int n_atoms, std::initializer_list<std::pair<const char*, Complex>> terms) {
    StateVector psi = StateVector::Zero(atomic_dimension(n_atoms));
    for (const auto& [bits, amplitude] : terms) psi(basis_index(bits)) += amplitude;
    return psi;
}

int atom_count_param(const std::string& name, const Params& params) {
    const double n = take(params, "n_atoms", 3.0);
    if (n != std::round(n) || n < 1 || n > 3) {
        throw Error(ErrorCode::ParameterOutOfRange,
                    "state '" + name + "' needs n_atoms in {1,2,3}", "n_atoms");
    }
    return static_cast<int>(n);
}

StateVector w_symmetric_vector() {
    const double s = 1.0 / std::sqrt(3.0);
    return basis_vector(3, {{"gge", s}, {"geg", s}, {"egg", s}});
}

StateVector e_state_vector() {
    const double s = 1.0 / std::sqrt(3.0);
    return basis_vector(3, {{"eeg", s}, {"ege", s}, {"gee", s}});
}

}  // namespace

const std::vector<std::string>& named_state_catalog() {
    static const std::vector<std::string> names = {
        "two_atom_squeeze", "w_general", "w_symmetric", "ghz_general", "ghz_symmetric",
        "e_state",          "we_mixture", "ground",     "excited",
    };
    return names;
}

ClusterState make_named_state(std::string_view name, const std::map<std::string, double>& params) {
    StateSpec spec;
    spec.name = std::string(name);
    spec.params = params;
    return make_named_state(spec);
}

ClusterState make_named_state(const StateSpec& spec) {
    const std::string& name = spec.name;
    const Params& p = spec.params;
    using std::numbers::pi;

    if (name == "two_atom_squeeze") {
        require_keys(name, p, {"theta"});
        const double theta = take(p, "theta", 0.3);
        if (theta < 0.0 || theta >= pi / 4) {
            throw Error(ErrorCode::ParameterOutOfRange,
                        "two_atom_squeeze needs 0 <= theta < pi/4", "theta");
        }
        return ClusterState::from_amplitudes(
            basis_vector(2, {{"gg", std::cos(theta)}, {"ee", std::sin(theta)}}));
    }
    if (name == "w_general") {
        require_keys(name, p, {"theta", "psi", "phi", "delta"});
        const double theta = take(p, "theta", pi / 4);
        const double psi = take(p, "psi", 2.0 * std::asin(1.0 / std::sqrt(3.0)));
        const double phi = take(p, "phi", 0.0);
        const double delta = take(p, "delta", 0.0);
        const double c = std::cos(psi / 2);
        return ClusterState::from_amplitudes(basis_vector(
            3, {{"egg", std::cos(theta) * c},
                {"geg", std::sin(theta) * c * std::polar(1.0, phi)},
                {"gge", std::sin(psi / 2) * std::polar(1.0, delta)}}));
    }
    if (name == "w_symmetric") {
        require_keys(name, p, {});
        return ClusterState::from_amplitudes(w_symmetric_vector());
    }
    if (name == "ghz_general" || name == "ghz_symmetric") {
        const bool general = name == "ghz_general";
        if (general) {
            require_keys(name, p, {"theta"});
        } else {
            require_keys(name, p, {});
        }
        const double theta = general ? take(p, "theta", 2.0 * pi / 3) : pi / 2;
        return ClusterState::from_amplitudes(
            basis_vector(3, {{"eee", std::cos(theta / 2)}, {"ggg", std::sin(theta / 2)}}));
    }
    if (name == "e_state") {
        require_keys(name, p, {});
        return ClusterState::from_amplitudes(e_state_vector());
    }
    if (name == "we_mixture") {
        require_keys(name, p, {"epsilon"});
        const double eps = take(p, "epsilon", kDefaultWeMixtureEpsilon);
        if (eps < -0.5 || eps > 0.5) {
            throw Error(ErrorCode::ParameterOutOfRange, "we_mixture needs |epsilon| <= 1/2",
                        "epsilon");
        }
        const StateVector w = w_symmetric_vector();
        const StateVector e = e_state_vector();
        const Operator rho = (0.5 + eps) * (w * w.adjoint()) + (0.5 - eps) * (e * e.adjoint());
        return ClusterState::from_matrix(rho);
    }
    if (name == "ground" || name == "excited") {
        require_keys(name, p, {"n_atoms"});
        const int n = atom_count_param(name, p);
        StateVector psi = StateVector::Zero(atomic_dimension(n));
        psi(name == "excited" ? 0 : psi.size() - 1) = 1.0;
        return ClusterState::from_amplitudes(psi);
    }
    if (name == "custom_pure") {
        require_keys(name, p, {});
        if (!spec.amplitudes) {
            throw Error(ErrorCode::InvalidArgument, "custom_pure needs amplitudes", "amplitudes");
        }
        return ClusterState::from_amplitudes(*spec.amplitudes);
    }
    if (name == "custom_matrix") {
        require_keys(name, p, {});
        if (!spec.matrix) {
            throw Error(ErrorCode::InvalidArgument, "custom_matrix needs a matrix", "matrix");
        }
        return ClusterState::from_symmetrized(*spec.matrix);
    }
    throw Error(ErrorCode::UnknownState, "unknown state name '" + name + "'", "name");
}

}  // namespace fuelcell
