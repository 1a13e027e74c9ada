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

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuelcell {

enum class ErrorCode {
    InvalidArgument,
    UnsupportedAtomCount,
    DimensionMismatch,
    IndexOutOfRange,
    NotHermitian,
    InvalidState,
    UnknownState,
    ParameterOutOfRange,
    NotNormalized,
    ProjectionResidual,
    Leakage,
    PositivityViolation,
    DegenerateNullSpace,
    AboveThreshold,
    NotThermalFuel,
    Unphysical,
    Config,
    Io,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this type. `field` names the
/// offending input (config key, parameter name) when there is one.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string field = {})
        : std::runtime_error(message), code_(code), field_(std::move(field)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& field() const noexcept { return field_; }

private:
    ErrorCode code_;
    std::string field_;
};

}  // namespace fuelcell
