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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuelcell/cluster.hpp"
#include "fuelcell/dynamics.hpp"
#include "fuelcell/generator.hpp"

namespace fuelcell::cli {

inline constexpr const char* kSchema = "fuelcell/1";

struct SweepAxis {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    double value(int i) const;
};

struct SweepSpec {
    std::string quantity;             // w_photon_number | squeezing_r | ghz_photon_number
    std::vector<SweepAxis> axes;      // first axis varies slowest
    std::map<std::string, double> fixed;
    bool allow_large = false;

    static constexpr std::size_t kMaxPoints = 1'000'000;
    std::size_t points() const;
    void validate() const;
};

/// Built-in grids: fig6, fig7, fig8.
SweepSpec sweep_preset(const std::string& name);

struct RunConfig {
    StateSpec state{"w_symmetric", {}, std::nullopt, std::nullopt};
    MaserParams maser;
    EvolutionConfig evolution;
    int fock_dim = 60;
    int trajectories = 1;
    int oracle_fock_dim = 12;
    // Finer step at which validate repeats the table-vs-oracle comparison;
    // at desk g*tau the 10 g*tau tolerance is too loose to catch a bad basis.
    double oracle_probe_g_tau = 0.01;
    std::optional<SweepSpec> sweep;
    std::string out_dir = ".";
};

/// Parses and schema-checks a config document; unknown keys are rejected
/// with Error(Config) naming the offending path.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace fuelcell::cli
