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

#include "fuelcell/basis.hpp"

#include <algorithm>
#include <array>

#include "fuelcell/errors.hpp"

namespace fuelcell {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::UnsupportedAtomCount: return "unsupported_atom_count";
        case ErrorCode::DimensionMismatch: return "dimension_mismatch";
        case ErrorCode::IndexOutOfRange: return "index_out_of_range";
        case ErrorCode::NotHermitian: return "not_hermitian";
        case ErrorCode::InvalidState: return "invalid_state";
        case ErrorCode::UnknownState: return "unknown_state";
        case ErrorCode::ParameterOutOfRange: return "parameter_out_of_range";
        case ErrorCode::NotNormalized: return "not_normalized";
        case ErrorCode::ProjectionResidual: return "projection_residual";
        case ErrorCode::Leakage: return "leakage";
        case ErrorCode::PositivityViolation: return "positivity_violation";
        case ErrorCode::DegenerateNullSpace: return "degenerate_null_space";
        case ErrorCode::AboveThreshold: return "above_threshold";
        case ErrorCode::NotThermalFuel: return "not_thermal_fuel";
        case ErrorCode::Unphysical: return "unphysical";
        case ErrorCode::Config: return "config";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

namespace {

std::vector<BasisLabel> make_labels(std::initializer_list<const char*> names) {
    std::vector<BasisLabel> labels;
    int index = 0;
    for (const char* name : names) {
        BasisLabel label;
        label.bits = name;
        label.excitations = static_cast<int>(std::count(label.bits.begin(), label.bits.end(), 'e'));
        label.index = index++;
        labels.push_back(std::move(label));
    }
    return labels;
}

}  // namespace

int atomic_dimension(int n_atoms) {
    if (n_atoms < 1 || n_atoms > 3) {
        throw Error(ErrorCode::UnsupportedAtomCount,
                    "clusters of " + std::to_string(n_atoms) + " atoms are not supported (1..3)",
                    "n_atoms");
    }
    return 1 << n_atoms;
}

const std::vector<BasisLabel>& basis_labels(int n_atoms, BasisOrdering ordering) {
    static const std::array<std::vector<BasisLabel>, 3> standard = {
        make_labels({"e", "g"}),
        make_labels({"ee", "eg", "ge", "gg"}),
        make_labels({"eee", "eeg", "ege", "gee", "egg", "geg", "gge", "ggg"}),
    };
    static const std::vector<BasisLabel> lexicographic3 =
        make_labels({"eee", "eeg", "ege", "egg", "gee", "geg", "gge", "ggg"});

    atomic_dimension(n_atoms);
    if (ordering == BasisOrdering::Lexicographic && n_atoms == 3) {
        return lexicographic3;
    }
    return standard[static_cast<std::size_t>(n_atoms - 1)];
}

int basis_index(std::string_view bits) {
    const int n_atoms = static_cast<int>(bits.size());
    for (const auto& label : basis_labels(n_atoms)) {
        if (label.bits == bits) return label.index;
    }
    throw Error(ErrorCode::InvalidArgument, "not a basis label: " + std::string(bits), "label");
}

int hamming_distance(const BasisLabel& lhs, const BasisLabel& rhs) {
    int distance = 0;
    for (std::size_t k = 0; k < lhs.bits.size(); ++k) {
        if (lhs.bits[k] != rhs.bits[k]) ++distance;
    }
    return distance;
}

}  // namespace fuelcell
