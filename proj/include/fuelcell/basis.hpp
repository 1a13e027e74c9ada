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

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fuelcell {

/// One computational basis state of an N-atom cluster.
///
/// `bits` holds one character per atom, 'e' or 'g', atom 1 first. The
/// standard ordering sorts by descending excitation count; inside a sector
/// the order is
///
///   N=1: e, g
///   N=2: ee, eg, ge, gg
///   N=3: eee, eeg, ege, gee, egg, geg, gge, ggg
///
/// so that the coefficient sums of the cavity master equation are
/// expressed on contiguous index ranges (e.g. 2..4 and 5..7 for N=3).
struct BasisLabel {
    std::string bits;
    int excitations = 0;
    int index = 0;

    bool excited(int atom) const { return bits[static_cast<std::size_t>(atom)] == 'e'; }
};

enum class BasisOrdering {
    Standard,
    /// Plain lexicographic (Kronecker) order. For N=3 this swaps gee and egg;
    /// it exists only as a negative control for the propagator oracle.
    Lexicographic,
};

/// Throws Error(UnsupportedAtomCount) unless 1 <= n_atoms <= 3.
int atomic_dimension(int n_atoms);

const std::vector<BasisLabel>& basis_labels(int n_atoms,
                                            BasisOrdering ordering = BasisOrdering::Standard);

/// Index of a label such as "eeg" in the standard ordering.
int basis_index(std::string_view bits);

int hamming_distance(const BasisLabel& lhs, const BasisLabel& rhs);

}  // namespace fuelcell
