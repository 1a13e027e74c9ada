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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fuelcell/field.hpp"
#include "fuelcell/generator.hpp"

namespace fuelcell {

enum class EvolutionMethod { OdeRk4, ExpmStep, MonteCarlo };

std::string_view to_string(EvolutionMethod m);
EvolutionMethod parse_evolution_method(std::string_view name);

struct EvolutionConfig {
    double dt = 0.1;       // integration step; sampling interval for Monte Carlo
    double t_max = 10.0;
    EvolutionMethod method = EvolutionMethod::OdeRk4;
    std::uint64_t seed = 1;
    double leak_tol = 1e-6;
    int sample_stride = 1;  // record every n-th step

    void validate() const;
};

enum class TrajectoryStatus { Completed, LeakageAbort, PositivityAbort };

std::string_view to_string(TrajectoryStatus s);

struct Trajectory {
    std::vector<double> times;
    std::vector<Complex> mean_a;
    std::vector<Complex> mean_a2;
    std::vector<double> mean_n;
    std::vector<double> purity;
    std::vector<double> leakage;
    std::vector<std::size_t> kicks;  // cumulative injections (Monte Carlo only)

    TrajectoryStatus status = TrajectoryStatus::Completed;
    std::string message;
    std::size_t overlap_warnings = 0;  // inter-arrival gaps shorter than tau

    std::size_t size() const noexcept { return times.size(); }
    void record(double t, const FieldState& field, std::size_t kick_count = 0);
};

/// Integrates rho' = L rho. ode_rk4 requires dt * ||L||_1 < 0.1; expm_step
/// applies exp(L dt) by a scaled Taylor series. Stops early, keeping the
/// partial trajectory, on guard-band leakage or a negative eigenvalue below
/// -1e-8.
Trajectory evolve_master(const FieldState& initial, const Liouvillian& liouvillian,
                         const EvolutionConfig& config);

/// Poisson injections at rate p with exact single-passage kicks; the field is
/// frozen between arrivals. Reproducible for a given seed.
Trajectory evolve_monte_carlo(const FieldState& initial, const ClusterState& state,
                              const MaserParams& params, const EvolutionConfig& config);
Trajectory evolve_monte_carlo(const FieldState& initial, const KickOperator& kick,
                              const MaserParams& params, const EvolutionConfig& config);

/// Independent trajectories, trajectory k seeded from (config.seed, k).
std::vector<Trajectory> evolve_monte_carlo_ensemble(const FieldState& initial,
                                                    const ClusterState& state,
                                                    const MaserParams& params,
                                                    const EvolutionConfig& config,
                                                    int trajectories, int jobs = 1);

struct NoSteadyState {
    std::string reason;
};

using SteadyStateResult = std::variant<FieldState, NoSteadyState>;

struct SteadyStateOptions {
    double leak_tol = 1e-6;
    double positivity_tol = 1e-9;
};

/// Null vector of the generator, normalized to unit trace. Reports
/// NoSteadyState for fuels at or above threshold, non-positive null vectors,
/// and solutions that reach the guard band. Throws Error(DegenerateNullSpace)
/// when the null space is not one-dimensional.
SteadyStateResult steady_state(const Liouvillian& liouvillian, const SteadyStateOptions& options = {});

struct MomentState {
    Complex mean_a{};
    Complex mean_a2{};
    double mean_n = 0.0;
};

MomentState moments_of(const FieldState& field);

/// Closed-form solution of the linear moment equations for (<a>, <a^2>, <n>).
MomentState ehrenfest_evolve(const FuelCoefficients& coeffs, const MaserParams& params,
                             const MomentState& initial, double t);

}  // namespace fuelcell
