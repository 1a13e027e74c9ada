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

#include "fuelcell/field.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "fuelcell/errors.hpp"

namespace fuelcell {

FieldState::FieldState(FockSpace fock, Operator matrix) : fock_(fock), matrix_(std::move(matrix)) {
    if (matrix_.rows() != fock_.dim() || matrix_.cols() != fock_.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "field matrix is " + std::to_string(matrix_.rows()) + "x" +
                        std::to_string(matrix_.cols()) + ", expected dimension " +
                        std::to_string(fock_.dim()),
                    "field");
    }
}

FieldState FieldState::vacuum(const FockSpace& fock) { return fock_state(fock, 0); }

FieldState FieldState::fock_state(const FockSpace& fock, int n) {
    if (n < 0 || n >= fock.dim()) {
        throw Error(ErrorCode::IndexOutOfRange, "Fock level outside the truncation", "n");
    }
    Operator m = Operator::Zero(fock.dim(), fock.dim());
    m(n, n) = 1.0;
    return FieldState(fock, std::move(m));
}

FieldState FieldState::thermal(const FockSpace& fock, double nbar) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw Error(ErrorCode::ParameterOutOfRange, "thermal occupation must be >= 0", "nbar");
    }
    Eigen::VectorXd p(fock.dim());
    const double x = nbar / (nbar + 1.0);
    double w = 1.0;
    for (int n = 0; n < fock.dim(); ++n) {
        p(n) = w;
        w *= x;
    }
    p /= p.sum();
    return FieldState(fock, p.cast<Complex>().asDiagonal().toDenseMatrix());
}

Complex FieldState::mean_a() const {
    Complex s = 0.0;
    // Tr(a rho) = sum_n sqrt(n) rho(n, n-1)
    for (int n = 1; n < fock_.dim(); ++n) s += std::sqrt(static_cast<double>(n)) * matrix_(n, n - 1);
    return s;
}

Complex FieldState::mean_a2() const {
    Complex s = 0.0;
    for (int n = 2; n < fock_.dim(); ++n) {
        s += std::sqrt(static_cast<double>(n) * (n - 1)) * matrix_(n, n - 2);
    }
    return s;
}

double FieldState::mean_n() const {
    double s = 0.0;
    for (int n = 1; n < fock_.dim(); ++n) s += n * matrix_(n, n).real();
    return s;
}

double FieldState::purity() const { return (matrix_ * matrix_).trace().real(); }

double FieldState::trace_error() const { return std::abs(matrix_.trace() - Complex(1.0)); }

double FieldState::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Operator> eig(0.5 * (matrix_ + matrix_.adjoint()),
                                                Eigen::EigenvaluesOnly);
    return eig.eigenvalues().minCoeff();
}

double FieldState::guard_population() const {
    double s = 0.0;
    for (int n = fock_.trusted_levels(); n < fock_.dim(); ++n) s += matrix_(n, n).real();
    return s;
}

double FieldState::variance_x() const {
    const Complex a = mean_a();
    return 2.0 * mean_a2().real() + 2.0 * mean_n() + 1.0 - 4.0 * a.real() * a.real();
}

double FieldState::variance_y() const {
    const Complex a = mean_a();
    return -2.0 * mean_a2().real() + 2.0 * mean_n() + 1.0 - 4.0 * a.imag() * a.imag();
}

}  // namespace fuelcell
