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

#include <iosfwd>
#include <optional>
#include <string>

#include "fuelcell/cli/config.hpp"

namespace fuelcell::cli {

/// Flags shared by every subcommand; set values override the config file.
struct CommonOptions {
    std::optional<std::string> config_path;
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> fock_dim;
    int jobs = 0;  // 0: FUELCELL_JOBS, then hardware concurrency
    std::optional<std::string> preset;  // sweep only
    bool allow_large = false;           // sweep only
    bool corrupt_ordering = false;      // validate only: negative-control hook
};

/// Resolved configuration: file (or defaults) with flag overrides applied.
RunConfig resolve_config(const CommonOptions& options);

// Each command writes its artifacts to the output directory, prints a
// human-readable summary to `out` and returns the process exit code
// (0 success, 1 failed check or disagreement).
int cmd_classify(const CommonOptions& options, std::ostream& out);
int cmd_coeffs(const CommonOptions& options, std::ostream& out);
int cmd_evolve(const CommonOptions& options, std::ostream& out);
int cmd_sweep(const CommonOptions& options, std::ostream& out);
int cmd_validate(const CommonOptions& options, std::ostream& out);

/// JSON diagnostic for an error, {"error": {"code", "message", "field"}}.
std::string error_diagnostic(const std::string& code, const std::string& message,
                             const std::string& field);

}  // namespace fuelcell::cli
