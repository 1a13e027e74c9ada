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

#include "fuelcell/hilbert.hpp"

#include <cmath>
#include <initializer_list>
#include <utility>

#include <Eigen/Eigenvalues>

#include "fuelcell/errors.hpp"

namespace fuelcell {

FockSpace::FockSpace(int dim) : dim_(dim), guard_(0) {
    if (dim < 2) {
        throw Error(ErrorCode::InvalidArgument,
                    "Fock space needs at least 2 levels, got " + std::to_string(dim), "fock_dim");
    }
    guard_ = std::max(1, static_cast<int>(std::ceil(0.1 * dim - 1e-9)));
}

Operator annihilation(const FockSpace& fock) {
    const int d = fock.dim();
    Operator a = Operator::Zero(d, d);
    for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Operator creation(const FockSpace& fock) { return annihilation(fock).adjoint(); }

Operator number_operator(const FockSpace& fock) {
    const int d = fock.dim();
    Operator n = Operator::Zero(d, d);
    for (int k = 0; k < d; ++k) n(k, k) = k;
    return n;
}

namespace {

int find_label(const std::vector<BasisLabel>& labels, const std::string& bits) {
    for (const auto& label : labels) {
        if (label.bits == bits) return label.index;
    }
    throw Error(ErrorCode::InvalidArgument, "missing basis label " + bits);
}

// One atomic block U_ij of the second-order propagator:
//   identity * 1 - i g_tau (a_coef a + adag_coef a^dagger)
//     + g_tau^2 (a2 a^2 + adag2 a^dagger^2 + n_coef n + constant)
struct BlockForm {
    double identity = 0.0;
    double a = 0.0;
    double adag = 0.0;
    double a2 = 0.0;
    double adag2 = 0.0;
    double n = 0.0;
    double constant = 0.0;
};

constexpr BlockForm kLower{0, 1, 0, 0, 0, 0, 0};      // -i g_tau a
constexpr BlockForm kRaise{0, 0, 1, 0, 0, 0, 0};      // -i g_tau a^dagger
constexpr BlockForm kLower2{0, 0, 0, -1, 0, 0, 0};    // -(g_tau)^2 a^2
constexpr BlockForm kRaise2{0, 0, 0, 0, -1, 0, 0};    // -(g_tau)^2 a^dagger^2
constexpr BlockForm kExchange{0, 0, 0, 0, 0, -1, -0.5};  // -1/2 (g_tau)^2 (2n + 1)

struct Entry {
    int row;  // 1-based, as in the published tables
    int col;
    BlockForm form;
};

std::vector<Entry> propagator_table(int n_atoms) {
    std::vector<Entry> entries;
    auto add = [&entries](std::initializer_list<std::pair<int, int>> positions, BlockForm form) {
        for (auto [r, c] : positions) entries.push_back({r, c, form});
    };
    switch (n_atoms) {
        case 1:
            add({{1, 1}}, {1, 0, 0, 0, 0, -0.5, -0.5});
            add({{1, 2}}, kLower);
            add({{2, 1}}, kRaise);
            add({{2, 2}}, {1, 0, 0, 0, 0, -0.5, 0});
            break;
        case 2:
            add({{1, 1}}, {1, 0, 0, 0, 0, -1, -1});
            add({{1, 2}, {1, 3}, {2, 4}, {3, 4}}, kLower);
            add({{2, 1}, {3, 1}, {4, 2}, {4, 3}}, kRaise);
            add({{1, 4}}, kLower2);
            add({{4, 1}}, kRaise2);
            add({{2, 2}, {3, 3}}, {1, 0, 0, 0, 0, -1, -0.5});
            add({{2, 3}, {3, 2}}, kExchange);
            add({{4, 4}}, {1, 0, 0, 0, 0, -1, 0});
            break;
        case 3:
            add({{1, 1}}, {1, 0, 0, 0, 0, -1.5, -1.5});
            add({{2, 1}, {3, 1}, {5, 2}, {6, 2}, {5, 3}, {7, 3},
                 {4, 1}, {8, 5}, {6, 4}, {7, 4}, {8, 6}, {8, 7}},
                kRaise);
            add({{1, 2}, {1, 3}, {2, 5}, {2, 6}, {3, 5}, {3, 7},
                 {1, 4}, {5, 8}, {4, 6}, {4, 7}, {6, 8}, {7, 8}},
                kLower);
            add({{5, 1}, {6, 1}, {7, 1}, {8, 2}, {8, 3}, {8, 4}}, kRaise2);
            add({{1, 5}, {1, 6}, {1, 7}, {2, 8}, {3, 8}, {4, 8}}, kLower2);
            add({{2, 2}, {3, 3}, {4, 4}}, {1, 0, 0, 0, 0, -1.5, -1});
            add({{3, 2}, {4, 2}, {2, 3}, {4, 3}, {6, 5}, {7, 5},
                 {2, 4}, {3, 4}, {5, 6}, {7, 6}, {5, 7}, {6, 7}},
                kExchange);
            add({{5, 5}, {6, 6}, {7, 7}}, {1, 0, 0, 0, 0, -1.5, -0.5});
            add({{8, 8}}, {1, 0, 0, 0, 0, -1.5, 0});
            break;
        default:
            atomic_dimension(n_atoms);
    }
    return entries;
}

}  // namespace

Operator collective_coupling(int n_atoms, const FockSpace& fock, BasisOrdering ordering) {
    const int na = atomic_dimension(n_atoms);
    const int d = fock.dim();
    const auto& labels = basis_labels(n_atoms, ordering);
    Operator p = Operator::Zero(na * d, na * d);
    for (const auto& from : labels) {
        for (int atom = 0; atom < n_atoms; ++atom) {
            std::string bits = from.bits;
            const bool raise = !from.excited(atom);
            bits[static_cast<std::size_t>(atom)] = raise ? 'e' : 'g';
            const int to = find_label(labels, bits);
            for (int m = 0; m < d; ++m) {
                if (raise) {
                    // a sigma^+ : absorb one photon
                    if (m >= 1) p(to * d + m - 1, from.index * d + m) += std::sqrt(double(m));
                } else if (m + 1 < d) {
                    // a^dagger sigma^- : emit one photon
                    p(to * d + m + 1, from.index * d + m) += std::sqrt(double(m + 1));
                }
            }
        }
    }
    return p;
}

Operator interaction_hamiltonian(int n_atoms, const FockSpace& fock, double g) {
    return g * collective_coupling(n_atoms, fock);
}

Operator exact_propagator(const Operator& hamiltonian, double tau) {
    if (hamiltonian.rows() != hamiltonian.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "Hamiltonian must be square");
    }
    const double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());
    if (hermiticity_error(hamiltonian) > 1e-12 * scale) {
        throw Error(ErrorCode::NotHermitian, "exact_propagator requires a Hermitian generator");
    }
    const Operator symmetric = 0.5 * (hamiltonian + hamiltonian.adjoint());
    Eigen::SelfAdjointEigenSolver<Operator> eig(symmetric);
    if (eig.info() != Eigen::Success) {
        throw Error(ErrorCode::InvalidArgument, "eigendecomposition failed");
    }
    const Eigen::VectorXd& energies = eig.eigenvalues();
    StateVector phases(energies.size());
    for (Eigen::Index k = 0; k < energies.size(); ++k) {
        phases(k) = std::polar(1.0, -energies(k) * tau);
    }
    const Operator& v = eig.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
}

Operator second_order_propagator(int n_atoms, double g_tau, const FockSpace& fock,
                                 BasisOrdering ordering) {
    const int na = atomic_dimension(n_atoms);
    const int d = fock.dim();
    const Operator a = annihilation(fock);
    const Operator ad = creation(fock);
    const Operator a2 = a * a;
    const Operator ad2 = ad * ad;
    const Operator n = number_operator(fock);
    const Operator id = Operator::Identity(d, d);
    const Complex first_order(0.0, -g_tau);
    const double second_order = g_tau * g_tau;

    const auto& standard = basis_labels(n_atoms);
    const auto& target = basis_labels(n_atoms, ordering);
    std::vector<int> position(static_cast<std::size_t>(na));
    for (const auto& label : standard) {
        position[static_cast<std::size_t>(label.index)] = find_label(target, label.bits);
    }

    Operator u = Operator::Zero(na * d, na * d);
    for (const Entry& e : propagator_table(n_atoms)) {
        const BlockForm& f = e.form;
        Operator block = f.identity * id;
        if (f.a != 0.0 || f.adag != 0.0) block += first_order * (f.a * a + f.adag * ad);
        if (f.a2 != 0.0 || f.adag2 != 0.0 || f.n != 0.0 || f.constant != 0.0) {
            block += second_order * (f.a2 * a2 + f.adag2 * ad2 + f.n * n + f.constant * id);
        }
        const int r = position[static_cast<std::size_t>(e.row - 1)];
        const int c = position[static_cast<std::size_t>(e.col - 1)];
        u.block(r * d, c * d, d, d) = block;
    }
    return u;
}

Operator dicke_transform(int n_atoms) {
    if (n_atoms != 2 && n_atoms != 3) {
        throw Error(ErrorCode::UnsupportedAtomCount,
                    "Dicke transform is defined for 2 or 3 atoms", "n_atoms");
    }
    const double s2 = 1.0 / std::sqrt(2.0);
    if (n_atoms == 2) {
        Eigen::Matrix4d t;
        t << 1, 0, 0, 0,
             0, s2, 0, s2,
             0, s2, 0, -s2,
             0, 0, 1, 0;
        return t.cast<Complex>();
    }
    const double s3 = 1.0 / std::sqrt(3.0);
    const double s6 = 1.0 / std::sqrt(6.0);
    const double s23 = std::sqrt(2.0 / 3.0);
    Eigen::Matrix<double, 8, 8> t;
    t << 1, 0, 0, 0, 0, 0, 0, 0,
         0, s3, 0, 0, 0, 0, -s23, 0,
         0, s3, 0, 0, -s2, 0, s6, 0,
         0, s3, 0, 0, s2, 0, s6, 0,
         0, 0, s3, 0, 0, -s2, 0, -s6,
         0, 0, s3, 0, 0, s2, 0, -s6,
         0, 0, s3, 0, 0, 0, 0, s23,
         0, 0, 0, 1, 0, 0, 0, 0;
    return t.cast<Complex>();
}

JointState::JointState(int n_atoms, FockSpace fock, Operator matrix)
    : n_atoms_(n_atoms), fock_(fock), matrix_(std::move(matrix)) {
    const int total = atomic_dimension(n_atoms) * fock_.dim();
    if (matrix_.rows() != total || matrix_.cols() != total) {
        throw Error(ErrorCode::DimensionMismatch, "joint matrix has the wrong dimension");
    }
}

JointState JointState::product(const Operator& atoms, const Operator& field) {
    const int na = static_cast<int>(atoms.rows());
    int n_atoms = 0;
    while ((1 << n_atoms) < na) ++n_atoms;
    if ((1 << n_atoms) != na || atoms.cols() != na) {
        throw Error(ErrorCode::DimensionMismatch, "atomic matrix must be 2^N x 2^N");
    }
    const FockSpace fock(static_cast<int>(field.rows()));
    const int d = fock.dim();
    Operator joint(na * d, na * d);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j) joint.block(i * d, j * d, d, d) = atoms(i, j) * field;
    }
    return JointState(n_atoms, fock, std::move(joint));
}

Operator JointState::trace_out_atoms() const {
    const int d = fock_.dim();
    const int na = atomic_dimension(n_atoms_);
    Operator field = Operator::Zero(d, d);
    for (int i = 0; i < na; ++i) field += matrix_.block(i * d, i * d, d, d);
    return field;
}

Operator JointState::trace_out_field() const {
    const int d = fock_.dim();
    const int na = atomic_dimension(n_atoms_);
    Operator atoms(na, na);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j) atoms(i, j) = matrix_.block(i * d, j * d, d, d).trace();
    }
    return atoms;
}

double hermiticity_error(const Operator& m) {
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const Operator& u) {
    const Operator identity = Operator::Identity(u.rows(), u.cols());
    return (u * u.adjoint() - identity).cwiseAbs().maxCoeff();
}

double operator_norm(const Operator& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Operator> svd(m);
    return svd.singularValues()(0);
}

std::vector<int> trusted_joint_indices(int n_atoms, const FockSpace& fock) {
    const int na = atomic_dimension(n_atoms);
    std::vector<int> indices;
    for (int i = 0; i < na; ++i) {
        for (int m = 0; m < fock.trusted_levels(); ++m) indices.push_back(i * fock.dim() + m);
    }
    return indices;
}

Operator restrict_to(const Operator& m, const std::vector<int>& indices) {
    const auto k = static_cast<Eigen::Index>(indices.size());
    Operator sub(k, k);
    for (Eigen::Index r = 0; r < k; ++r) {
        for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = m(indices[r], indices[c]);
    }
    return sub;
}

}  // namespace fuelcell
