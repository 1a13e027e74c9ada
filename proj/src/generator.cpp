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

#include "fuelcell/generator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <unsupported/Eigen/KroneckerProduct>

#include "fuelcell/errors.hpp"

namespace fuelcell {

void MaserParams::validate() const {
    auto fail = [](const char* field, const std::string& message) {
        throw Error(ErrorCode::ParameterOutOfRange, message, field);
    };
    if (!(g > 0.0) || !std::isfinite(g)) fail("g", "coupling g must be positive");
    if (!(tau > 0.0) || !std::isfinite(tau)) fail("tau", "interaction time tau must be positive");
    if (!(p >= 0.0) || !std::isfinite(p)) fail("p", "injection rate p must be non-negative");
    if (!(g_tau() < 1.0)) fail("tau", "g*tau must be below 1");
}

double relative_coefficient_error(const FuelCoefficients& value, const FuelCoefficients& reference) {
    const std::array<double, 6> v = {value.r_e,         value.r_g,         value.lambda.real(),
                                     value.lambda.imag(), value.xi.real(), value.xi.imag()};
    const std::array<double, 6> r = {reference.r_e,         reference.r_g,
                                     reference.lambda.real(), reference.lambda.imag(),
                                     reference.xi.real(),     reference.xi.imag()};
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        diff = std::max(diff, std::abs(v[k] - r[k]));
        scale = std::max(scale, std::abs(r[k]));
    }
    return scale > 0.0 ? diff / scale : diff;
}

// ---------------------------------------------------------------------------
// Coefficient table

namespace {

using Pairs = std::initializer_list<std::pair<int, int>>;

// Elements are written 1-based, as a_ij.
Complex sum_of(const ClusterState& s, Pairs pairs) {
    Complex total = 0.0;
    for (const auto& [i, j] : pairs) total += s(i - 1, j - 1);
    return total;
}

double real_rate(Complex value, const char* name) {
    constexpr double kImagTolerance = 1e-9;
    constexpr double kClamp = -1e-10;
    if (std::abs(value.imag()) > kImagTolerance) {
        throw Error(ErrorCode::InvalidState,
                    std::string("rate ") + name + " has imaginary part " +
                        std::to_string(value.imag()) + "; interference sums must be real",
                    name);
    }
    if (value.real() < kClamp) {
        throw Error(ErrorCode::InvalidState,
                    std::string("rate ") + name + " is negative (" + std::to_string(value.real()) + ")",
                    name);
    }
    return std::max(0.0, value.real());
}

}  // namespace

FuelCoefficients coefficients_from_table(const ClusterState& s) {
    FuelCoefficients c;
    switch (s.n_atoms()) {
        case 1:
            c.r_e = real_rate(s(0, 0), "r_e");
            c.r_g = real_rate(s(1, 1), "r_g");
            c.lambda = s(0, 1);
            c.xi = 0.0;
            break;
        case 2: {
            const Complex middle = sum_of(s, {{2, 2}, {3, 3}, {2, 3}, {3, 2}});
            c.r_e = real_rate(2.0 * s(0, 0) + middle, "r_e");
            c.r_g = real_rate(2.0 * s(3, 3) + middle, "r_g");
            c.lambda = sum_of(s, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
            c.xi = s(0, 3);
            break;
        }
        case 3: {
            const Complex d_e = sum_of(s, {{2, 2}, {3, 3}, {4, 4}});
            const Complex d_w = sum_of(s, {{5, 5}, {6, 6}, {7, 7}});
            const Complex c_e = sum_of(s, {{2, 3}, {2, 4}, {3, 2}, {3, 4}, {4, 2}, {4, 3}});
            const Complex c_w = sum_of(s, {{5, 6}, {6, 5}, {5, 7}, {7, 5}, {6, 7}, {7, 6}});
            c.r_e = real_rate(3.0 * s(0, 0) + 2.0 * d_e + d_w + c_e + c_w, "r_e");
            c.r_g = real_rate(3.0 * s(7, 7) + 2.0 * d_w + d_e + c_e + c_w, "r_g");
            c.lambda = sum_of(s, {{2, 5}, {3, 5}, {4, 6}, {4, 7}, {2, 6}, {3, 7},
                                  {1, 2}, {1, 3}, {1, 4}, {5, 8}, {6, 8}, {7, 8}});
            c.xi = sum_of(s, {{2, 8}, {3, 8}, {4, 8}, {1, 5}, {1, 6}, {1, 7}});
            break;
        }
        default:
            throw Error(ErrorCode::UnsupportedAtomCount, "unsupported cluster size", "n_atoms");
    }
    return c;
}

// ---------------------------------------------------------------------------
// Superoperators

Eigen::VectorXcd vectorize(const Operator& m) {
    return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

Operator unvectorize(const Eigen::VectorXcd& v, int dim) {
    return Eigen::Map<const Operator>(v.data(), dim, dim);
}

Superoperator sandwich(const Operator& left, const Operator& right) {
    const Eigen::SparseMatrix<Complex> l = left.sparseView();
    const Eigen::SparseMatrix<Complex> rt = Operator(right.transpose()).sparseView();
    Superoperator out = Eigen::kroneckerProduct(rt, l);
    out.makeCompressed();
    return out;
}

Superoperator left_multiply(const Operator& a) {
    return sandwich(a, Operator::Identity(a.rows(), a.cols()));
}

Superoperator right_multiply(const Operator& a) {
    return sandwich(Operator::Identity(a.rows(), a.cols()), a);
}

namespace {

// 2 A X B - (B A) X - X (B A)
Superoperator dissipator(const Operator& a, const Operator& b) {
    const Operator ba = b * a;
    return 2.0 * sandwich(a, b) - left_multiply(ba) - right_multiply(ba);
}

}  // namespace

Superoperator lindblad_excitation(const FockSpace& fock) {
    const Operator a = annihilation(fock);
    return dissipator(a.adjoint(), a);
}

Superoperator lindblad_decay(const FockSpace& fock) {
    const Operator a = annihilation(fock);
    return dissipator(a, a.adjoint());
}

Superoperator squeeze_excitation(const FockSpace& fock) {
    const Operator ad = creation(fock);
    return dissipator(ad, ad);
}

Superoperator squeeze_decay(const FockSpace& fock) {
    const Operator a = annihilation(fock);
    return dissipator(a, a);
}

Superoperator commutator(const Operator& h) {
    const Complex minus_i(0.0, -1.0);
    return minus_i * (left_multiply(h) - right_multiply(h));
}

// ---------------------------------------------------------------------------
// Liouvillian

Liouvillian::Liouvillian(FockSpace fock, Superoperator matrix, std::optional<FuelCoefficients> source)
    : fock_(fock), matrix_(std::move(matrix)), source_(source) {
    const Eigen::Index n = static_cast<Eigen::Index>(fock_.dim()) * fock_.dim();
    if (matrix_.rows() != n || matrix_.cols() != n) {
        throw Error(ErrorCode::DimensionMismatch, "superoperator does not match the Fock space",
                    "liouvillian");
    }
    matrix_.makeCompressed();
}

Operator Liouvillian::apply(const Operator& rho) const {
    if (rho.rows() != fock_.dim() || rho.cols() != fock_.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "density matrix does not match the Fock space",
                    "rho");
    }
    return unvectorize(matrix_ * vectorize(rho), fock_.dim());
}

double Liouvillian::norm1() const {
    double best = 0.0;
    for (Eigen::Index k = 0; k < matrix_.outerSize(); ++k) {
        double col = 0.0;
        for (Superoperator::InnerIterator it(matrix_, k); it; ++it) col += std::abs(it.value());
        best = std::max(best, col);
    }
    return best;
}

Liouvillian build_liouvillian(const FuelCoefficients& c, const MaserParams& params,
                              const FockSpace& fock) {
    params.validate();
    const double mu = params.mu();
    const Operator a = annihilation(fock);
    const Operator h_eff =
        params.p * params.g_tau() * (c.lambda * a.adjoint() + std::conj(c.lambda) * a);

    const Eigen::Index n = static_cast<Eigen::Index>(fock.dim()) * fock.dim();
    Superoperator l(n, n);
    if (c.r_e != 0.0) l += (mu * c.r_e / 2.0) * lindblad_excitation(fock);
    if (c.r_g != 0.0) l += (mu * c.r_g / 2.0) * lindblad_decay(fock);
    if (c.xi != 0.0) {
        l += (mu * c.xi) * squeeze_excitation(fock);
        l += (mu * std::conj(c.xi)) * squeeze_decay(fock);
    }
    if (c.lambda != 0.0) l += commutator(h_eff);
    l.prune(Complex(0.0));
    return Liouvillian(fock, std::move(l), c);
}

// ---------------------------------------------------------------------------
// Kicked map

namespace {

// Pure-state decomposition rho_a = sum_k w_k |psi_k><psi_k|, dropping null weights.
std::vector<std::pair<double, StateVector>> ensemble_of(const ClusterState& state) {
    Eigen::SelfAdjointEigenSolver<Operator> eig(state.matrix());
    std::vector<std::pair<double, StateVector>> out;
    for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
        const double w = eig.eigenvalues()(k);
        if (w > 0.0) out.emplace_back(w, eig.eigenvectors().col(k));
    }
    return out;
}

// K_{n,k} = sqrt(w_k) sum_i psi_k(i) U_{n i}, with U_{n i} the field block
// taking atomic state i to atomic state n.
std::vector<Operator> kraus_operators(const ClusterState& state, const Operator& u, int dim) {
    const int na = state.dimension();
    std::vector<Operator> out;
    for (const auto& [w, psi] : ensemble_of(state)) {
        for (int n = 0; n < na; ++n) {
            Operator k = Operator::Zero(dim, dim);
            for (int i = 0; i < na; ++i) {
                if (psi(i) == 0.0) continue;
                k += psi(i) * u.block(n * dim, i * dim, dim, dim);
            }
            k *= std::sqrt(w);
            if (k.cwiseAbs().maxCoeff() > 0.0) out.push_back(std::move(k));
        }
    }
    return out;
}

Superoperator kraus_superoperator(const std::vector<Operator>& kraus, int dim) {
    using Triplet = Eigen::Triplet<Complex>;
    std::vector<Triplet> triplets;
    for (const auto& k : kraus) {
        const Eigen::SparseMatrix<Complex> s = k.sparseView();
        std::vector<Triplet> entries;
        for (Eigen::Index c = 0; c < s.outerSize(); ++c) {
            for (Eigen::SparseMatrix<Complex>::InnerIterator it(s, c); it; ++it) {
                entries.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
            }
        }
        // vec(K X K^dagger) = (conj(K) kron K) vec(X)
        for (const auto& left : entries) {
            const Complex cl = std::conj(left.value());
            for (const auto& right : entries) {
                triplets.emplace_back(left.row() * dim + right.row(), left.col() * dim + right.col(),
                                      cl * right.value());
            }
        }
    }
    const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
    Superoperator out(n, n);
    out.setFromTriplets(triplets.begin(), triplets.end());
    out.makeCompressed();
    return out;
}

// The coupling conserves atomic plus photonic excitations, so block U_{n i}
// only populates the diagonal m_out - m_in = exc(i) - exc(n). Clearing the
// rest removes eigensolver round-off and keeps the Kraus operators sparse.
void mask_to_excitation_shells(Operator& u, int n_atoms, int dim) {
    const auto& labels = basis_labels(n_atoms);
    const int na = static_cast<int>(labels.size());
    for (int n = 0; n < na; ++n) {
        for (int i = 0; i < na; ++i) {
            const int offset = labels[static_cast<std::size_t>(i)].excitations -
                               labels[static_cast<std::size_t>(n)].excitations;
            auto block = u.block(n * dim, i * dim, dim, dim);
            for (int c = 0; c < dim; ++c) {
                for (int r = 0; r < dim; ++r) {
                    if (r - c != offset) block(r, c) = 0.0;
                }
            }
        }
    }
}

}  // namespace

KickOperator::KickOperator(const ClusterState& state, double g_tau, const FockSpace& fock,
                           KickMode mode)
    : fock_(fock) {
    if (!(g_tau >= 0.0) || !std::isfinite(g_tau)) {
        throw Error(ErrorCode::ParameterOutOfRange, "g*tau must be non-negative", "g_tau");
    }
    Operator u;
    if (mode == KickMode::Exact) {
        u = exact_propagator(collective_coupling(state.n_atoms(), fock), g_tau);
        mask_to_excitation_shells(u, state.n_atoms(), fock.dim());
    } else {
        u = second_order_propagator(state.n_atoms(), g_tau, fock);
    }
    kraus_ = kraus_operators(state, u, fock.dim());
    super_ = kraus_superoperator(kraus_, fock.dim());
}

FieldState KickOperator::apply(const FieldState& field) const {
    if (!(field.fock() == fock_)) {
        throw Error(ErrorCode::DimensionMismatch, "field and kick use different truncations", "field");
    }
    return FieldState(fock_, unvectorize(super_ * vectorize(field.matrix()), fock_.dim()));
}

FieldState kick_map(const ClusterState& state, const FieldState& field, double g_tau, KickMode mode,
                    double leak_tol) {
    const KickOperator kick(state, g_tau, field.fock(), mode);
    FieldState out = kick.apply(field);
    const double leak = out.guard_population();
    if (leak > leak_tol) {
        throw Error(ErrorCode::Leakage,
                    "guard-band population " + std::to_string(leak) + " exceeds " +
                        std::to_string(leak_tol),
                    "fock_dim");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Propagator oracle

OracleFit fit_coefficients_from_propagator(const ClusterState& state, double g_tau,
                                           const OracleOptions& options) {
    if (!(g_tau > 0.0) || !(g_tau < 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "oracle needs 0 < g*tau < 1", "g_tau");
    }
    const FockSpace fock(options.fock_dim);
    const int dim = fock.dim();
    const int cutoff = fock.trusted_levels() - 2;
    if (cutoff < 3) {
        throw Error(ErrorCode::ParameterOutOfRange, "oracle Fock space too small", "fock_dim");
    }

    const Operator u = second_order_propagator(state.n_atoms(), g_tau, fock, options.ordering);
    const Superoperator s = kraus_superoperator(kraus_operators(state, u, dim), dim);

    // Superoperator rows/columns whose field indices both lie below the cutoff.
    std::vector<int> keep;
    for (int col = 0; col < cutoff; ++col) {
        for (int row = 0; row < cutoff; ++row) keep.push_back(row + dim * col);
    }
    const auto restrict = [&](const Superoperator& m) {
        const Operator dense(m);
        Eigen::VectorXcd flat(static_cast<Eigen::Index>(keep.size() * keep.size()));
        Eigen::Index k = 0;
        for (int c : keep) {
            for (int r : keep) flat(k++) = dense(r, c);
        }
        return flat;
    };

    const Operator a = annihilation(fock);
    const std::array<Superoperator, 6> basis = {
        lindblad_excitation(fock), lindblad_decay(fock), squeeze_excitation(fock),
        squeeze_decay(fock),       commutator(a.adjoint()), commutator(a),
    };
    Eigen::MatrixXcd design(static_cast<Eigen::Index>(keep.size() * keep.size()), 6);
    for (int k = 0; k < 6; ++k) design.col(k) = restrict(basis[static_cast<std::size_t>(k)]);

    Superoperator identity(s.rows(), s.cols());
    identity.setIdentity();
    const Eigen::VectorXcd target = restrict((s - identity) / Complex(g_tau * g_tau));

    const Eigen::VectorXcd x = design.colPivHouseholderQr().solve(target);
    const double target_norm = target.norm();

    OracleFit fit;
    fit.residual = target_norm > 0.0 ? (design * x - target).norm() / target_norm : 0.0;
    fit.coefficients.r_e = 2.0 * x(0).real();
    fit.coefficients.r_g = 2.0 * x(1).real();
    fit.coefficients.xi = 0.5 * (x(2) + std::conj(x(3)));
    fit.coefficients.lambda = 0.5 * g_tau * (x(4) + std::conj(x(5)));
    fit.conjugation_mismatch =
        std::max({std::abs(x(2) - std::conj(x(3))), g_tau * std::abs(x(4) - std::conj(x(5))),
                  2.0 * std::abs(x(0).imag()), 2.0 * std::abs(x(1).imag())});
    return fit;
}

FuelCoefficients coefficients_from_propagator(const ClusterState& state, double g_tau,
                                              const OracleOptions& options) {
    const OracleFit fit = fit_coefficients_from_propagator(state, g_tau, options);
    const double tol = options.residual_tolerance > 0.0 ? options.residual_tolerance : 10.0 * g_tau;
    if (fit.residual > tol) {
        throw Error(ErrorCode::ProjectionResidual,
                    "generator projection leaves relative residual " + std::to_string(fit.residual) +
                        " (tolerance " + std::to_string(tol) + ")",
                    "state");
    }
    return fit.coefficients;
}

}  // namespace fuelcell
