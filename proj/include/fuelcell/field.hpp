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

#include "fuelcell/hilbert.hpp"

namespace fuelcell {

/// Density matrix of the truncated cavity mode.
///
/// Construction only checks shapes: evolved states are allowed to drift by
/// rounding, and callers decide how much drift they tolerate.
class FieldState {
public:
    FieldState(FockSpace fock, Operator matrix);

    static FieldState vacuum(const FockSpace& fock);
    /// Geometric populations nbar^n / (nbar+1)^(n+1), renormalized on the truncation.
    static FieldState thermal(const FockSpace& fock, double nbar);
    static FieldState fock_state(const FockSpace& fock, int n);

    const FockSpace& fock() const noexcept { return fock_; }
    const Operator& matrix() const noexcept { return matrix_; }

    Complex mean_a() const;
    Complex mean_a2() const;
    double mean_n() const;
    double purity() const;
    double trace_error() const;
    double min_eigenvalue() const;
    /// Total population on the guard-band levels.
    double guard_population() const;

    /// Var(a + a^dagger) and Var(-i(a - a^dagger)); a squeezed vacuum with
    /// real negative <a^2> has e^{-2r} and e^{2r}.
    double variance_x() const;
    double variance_y() const;

private:
    FockSpace fock_;
    Operator matrix_;
};

}  // namespace fuelcell
