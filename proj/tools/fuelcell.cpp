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

// fuelcell command-line front end.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "fuelcell/cli/commands.hpp"
#include "fuelcell/errors.hpp"

namespace {

void add_common(CLI::App* cmd, fuelcell::cli::CommonOptions& o) {
    cmd->add_option("--config", o.config_path, "JSON run configuration");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--seed", o.seed, "random seed (overrides the config)");
    cmd->add_option("--fock-dim", o.fock_dim, "Fock-space truncation (overrides the config)");
    cmd->add_option("--jobs", o.jobs, "worker threads (default: FUELCELL_JOBS or all cores)");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace fuelcell::cli;
    CLI::App app{"Coherence-fuelled micromaser toolkit"};
    app.require_subcommand(1);

    CommonOptions options;
    auto* classify = app.add_subcommand("classify", "coherence classes of a cluster state");
    auto* coeffs = app.add_subcommand("coeffs", "master-equation coefficients, table vs propagator");
    auto* evolve = app.add_subcommand("evolve", "time evolution of the cavity field");
    auto* sweep = app.add_subcommand("sweep", "closed-form predictions over a parameter grid");
    auto* validate = app.add_subcommand("validate", "oracle-equivalence checks");
    for (auto* cmd : {classify, coeffs, evolve, sweep, validate}) add_common(cmd, options);
    sweep->add_option("--preset", options.preset, "fig6, fig7 or fig8");
    sweep->add_flag("--allow-large", options.allow_large, "lift the 10^6-point grid limit");
    validate->add_flag("--corrupt-ordering", options.corrupt_ordering,
                       "negative control: run the oracle with a scrambled basis ordering");
    coeffs->add_flag("--corrupt-ordering", options.corrupt_ordering,
                     "negative control: run the oracle with a scrambled basis ordering");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_diagnostic("usage", e.what(), "") << '\n';
        return 2;
    }

    try {
        if (*classify) return cmd_classify(options, std::cout);
        if (*coeffs) return cmd_coeffs(options, std::cout);
        if (*evolve) return cmd_evolve(options, std::cout);
        if (*sweep) return cmd_sweep(options, std::cout);
        if (*validate) return cmd_validate(options, std::cout);
    } catch (const fuelcell::Error& e) {
        std::cerr << error_diagnostic(std::string(fuelcell::to_string(e.code())), e.what(), e.field()) << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << error_diagnostic("internal", e.what(), "") << '\n';
        return 2;
    }
    return 2;
}
