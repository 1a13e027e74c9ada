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

#include "fuelcell/dynamics.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/SparseLU>
#include <unsupported/Eigen/MatrixFunctions>

#include "fuelcell/errors.hpp"
#include "fuelcell/parallel.hpp"

namespace fuelcell {

std::string_view to_string(EvolutionMethod m) {
    switch (m) {
        case EvolutionMethod::OdeRk4: return "ode_rk4";
        case EvolutionMethod::ExpmStep: return "expm_step";
        case EvolutionMethod::MonteCarlo: return "monte_carlo";
    }
    return "unknown";
}

EvolutionMethod parse_evolution_method(std::string_view name) {
    if (name == "ode_rk4") return EvolutionMethod::OdeRk4;
    if (name == "expm_step") return EvolutionMethod::ExpmStep;
    if (name == "monte_carlo") return EvolutionMethod::MonteCarlo;
    throw Error(ErrorCode::InvalidArgument, "unknown evolution method '" + std::string(name) + "'",
                "method");
}

std::string_view to_string(TrajectoryStatus s) {
    switch (s) {
        case TrajectoryStatus::Completed: return "completed";
        case TrajectoryStatus::LeakageAbort: return "leakage_abort";
        case TrajectoryStatus::PositivityAbort: return "positivity_abort";
    }
    return "unknown";
}

void EvolutionConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(ErrorCode::ParameterOutOfRange, "dt must be positive", "dt");
    }
    if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
        throw Error(ErrorCode::ParameterOutOfRange, "t_max must be non-negative", "t_max");
    }
    if (!(leak_tol > 0.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "leak_tol must be positive", "leak_tol");
    }
    if (sample_stride < 1) {
        throw Error(ErrorCode::ParameterOutOfRange, "sample_stride must be >= 1", "sample_stride");
    }
}

void Trajectory::record(double t, const FieldState& field, std::size_t kick_count) {
    times.push_back(t);
    mean_a.push_back(field.mean_a());
    mean_a2.push_back(field.mean_a2());
    mean_n.push_back(field.mean_n());
    purity.push_back(field.purity());
    leakage.push_back(field.guard_population());
    kicks.push_back(kick_count);
}

namespace {

constexpr double kPositivityAbort = 1e-8;

std::size_t step_count(double t_max, double dt) {
    // Tolerate t_max/dt landing a hair below an integer.
    return static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
}

double guard_population(const Eigen::VectorXcd& v, const FockSpace& fock) {
    double s = 0.0;
    for (int n = fock.trusted_levels(); n < fock.dim(); ++n) {
        s += v(n + static_cast<Eigen::Index>(fock.dim()) * n).real();
    }
    return s;
}

Eigen::VectorXcd expm_action(const Superoperator& l, const Eigen::VectorXcd& v, double h,
                             double norm1) {
    const int substeps = std::max(1, static_cast<int>(std::ceil(norm1 * h / 0.5)));
    const double hs = h / substeps;
    Eigen::VectorXcd out = v;
    for (int s = 0; s < substeps; ++s) {
        Eigen::VectorXcd term = out;
        Eigen::VectorXcd sum = out;
        for (int k = 1; k <= 60; ++k) {
            term = (l * term) * (hs / k);
            sum += term;
            if (term.norm() <= 1e-17 * sum.norm()) break;
        }
        out = std::move(sum);
    }
    return out;
}

}  // namespace

Trajectory evolve_master(const FieldState& initial, const Liouvillian& liouvillian,
                         const EvolutionConfig& config) {
    config.validate();
    if (!(initial.fock() == liouvillian.fock())) {
        throw Error(ErrorCode::DimensionMismatch, "initial state and generator truncations differ",
                    "fock_dim");
    }
    const FockSpace& fock = liouvillian.fock();
    const Superoperator& l = liouvillian.matrix();
    const double norm1 = liouvillian.norm1();
    const double dt = config.dt;

    if (config.method == EvolutionMethod::OdeRk4 && dt * norm1 >= 0.1) {
        throw Error(ErrorCode::ParameterOutOfRange,
                    "dt * ||L||_1 = " + std::to_string(dt * norm1) +
                        " is not below 0.1; reduce dt to under " + std::to_string(0.1 / norm1),
                    "dt");
    }
    if (config.method == EvolutionMethod::MonteCarlo) {
        throw Error(ErrorCode::InvalidArgument, "monte_carlo needs a cluster state, not a generator",
                    "method");
    }

    Trajectory traj;
    Eigen::VectorXcd v = vectorize(initial.matrix());
    traj.record(0.0, initial);
    const std::size_t steps = step_count(config.t_max, dt);

    for (std::size_t step = 1; step <= steps; ++step) {
        if (config.method == EvolutionMethod::OdeRk4) {
            const Eigen::VectorXcd k1 = l * v;
            const Eigen::VectorXcd k2 = l * (v + (0.5 * dt) * k1);
            const Eigen::VectorXcd k3 = l * (v + (0.5 * dt) * k2);
            const Eigen::VectorXcd k4 = l * (v + dt * k3);
            v += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        } else {
            v = expm_action(l, v, dt, norm1);
        }
        const double t = static_cast<double>(step) * dt;
        const double leak = guard_population(v, fock);
        const bool sample = step % static_cast<std::size_t>(config.sample_stride) == 0 || step == steps;
        if (leak > config.leak_tol) {
            traj.record(t, FieldState(fock, unvectorize(v, fock.dim())));
            traj.status = TrajectoryStatus::LeakageAbort;
            traj.message = "guard-band population " + std::to_string(leak) + " exceeded leak_tol at t = " +
                           std::to_string(t);
            return traj;
        }
        if (sample) {
            const FieldState field(fock, unvectorize(v, fock.dim()));
            traj.record(t, field);
            const double min_eig = field.min_eigenvalue();
            if (min_eig < -kPositivityAbort) {
                traj.status = TrajectoryStatus::PositivityAbort;
                traj.message = "density matrix eigenvalue " + std::to_string(min_eig) + " at t = " +
                               std::to_string(t);
                return traj;
            }
        }
    }
    return traj;
}

Trajectory evolve_monte_carlo(const FieldState& initial, const KickOperator& kick,
                              const MaserParams& params, const EvolutionConfig& config) {
    config.validate();
    params.validate();
    if (!(initial.fock() == kick.fock())) {
        throw Error(ErrorCode::DimensionMismatch, "initial state and kick truncations differ",
                    "fock_dim");
    }
    const FockSpace& fock = kick.fock();
    std::mt19937_64 rng(config.seed);
    std::exponential_distribution<double> gap(params.p > 0.0 ? params.p : 1.0);
    const double never = std::numeric_limits<double>::infinity();

    Trajectory traj;
    Eigen::VectorXcd v = vectorize(initial.matrix());
    std::size_t kicks = 0;
    double next_arrival = params.p > 0.0 ? gap(rng) : never;
    traj.record(0.0, initial);

    const double interval = config.dt * config.sample_stride;
    const std::size_t samples = step_count(config.t_max, interval);
    for (std::size_t k = 1; k <= samples; ++k) {
        const double t = static_cast<double>(k) * interval;
        while (next_arrival <= t) {
            v = kick.apply(v);
            ++kicks;
            const double leak = guard_population(v, fock);
            if (leak > config.leak_tol) {
                traj.record(next_arrival, FieldState(fock, unvectorize(v, fock.dim())), kicks);
                traj.status = TrajectoryStatus::LeakageAbort;
                traj.message = "guard-band population " + std::to_string(leak) +
                               " exceeded leak_tol after " + std::to_string(kicks) + " kicks";
                return traj;
            }
            const double dt_next = gap(rng);
            if (dt_next < params.tau) ++traj.overlap_warnings;
            next_arrival += dt_next;
        }
        traj.record(t, FieldState(fock, unvectorize(v, fock.dim())), kicks);
    }
    return traj;
}

Trajectory evolve_monte_carlo(const FieldState& initial, const ClusterState& state,
                              const MaserParams& params, const EvolutionConfig& config) {
    params.validate();
    const KickOperator kick(state, params.g_tau(), initial.fock(), KickMode::Exact);
    return evolve_monte_carlo(initial, kick, params, config);
}

std::vector<Trajectory> evolve_monte_carlo_ensemble(const FieldState& initial,
                                                    const ClusterState& state,
                                                    const MaserParams& params,
                                                    const EvolutionConfig& config,
                                                    int trajectories, int jobs) {
    params.validate();
    if (trajectories < 1) {
        throw Error(ErrorCode::ParameterOutOfRange, "need at least one trajectory", "trajectories");
    }
    const KickOperator kick(state, params.g_tau(), initial.fock(), KickMode::Exact);
    std::vector<Trajectory> out(static_cast<std::size_t>(trajectories));
    parallel_for(out.size(), jobs, [&](std::size_t k) {
        std::seed_seq seq{static_cast<std::uint32_t>(config.seed & 0xffffffffu),
                          static_cast<std::uint32_t>(config.seed >> 32),
                          static_cast<std::uint32_t>(k)};
        std::uint64_t words[2];
        std::uint32_t raw[4];
        seq.generate(raw, raw + 4);
        words[0] = (static_cast<std::uint64_t>(raw[0]) << 32) | raw[1];
        words[1] = (static_cast<std::uint64_t>(raw[2]) << 32) | raw[3];
        EvolutionConfig c = config;
        c.seed = words[0] ^ (words[1] << 1);
        out[k] = evolve_monte_carlo(initial, kick, params, c);
    });
    return out;
}

SteadyStateResult steady_state(const Liouvillian& liouvillian, const SteadyStateOptions& options) {
    if (const auto& src = liouvillian.source(); src && src->gap() <= 1e-12) {
        return NoSteadyState{"r_g <= r_e: the fuel is at or above the maser threshold"};
    }
    const FockSpace& fock = liouvillian.fock();
    const int dim = fock.dim();
    const Superoperator& l = liouvillian.matrix();

    // Replace the first equation by the trace condition.
    using Triplet = Eigen::Triplet<Complex>;
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(l.nonZeros()) + static_cast<std::size_t>(dim));
    for (Eigen::Index c = 0; c < l.outerSize(); ++c) {
        for (Superoperator::InnerIterator it(l, c); it; ++it) {
            if (it.row() != 0) triplets.emplace_back(static_cast<int>(it.row()), static_cast<int>(c), it.value());
        }
    }
    for (int n = 0; n < dim; ++n) triplets.emplace_back(0, n + dim * n, Complex(1.0));
    Superoperator a(l.rows(), l.cols());
    a.setFromTriplets(triplets.begin(), triplets.end());
    a.makeCompressed();

    Eigen::SparseLU<Superoperator, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(a);
    lu.factorize(a);
    if (lu.info() != Eigen::Success) {
        throw Error(ErrorCode::DegenerateNullSpace,
                    "generator null space is not one-dimensional: " + lu.lastErrorMessage(),
                    "liouvillian");
    }
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(l.rows());
    rhs(0) = 1.0;
    const Eigen::VectorXcd x = lu.solve(rhs);
    const double scale = std::max(1.0, liouvillian.norm1()) * std::max(1.0, x.norm());
    const double residual = (l * x).norm() / scale;
    if (!x.allFinite() || residual > 1e-8) {
        throw Error(ErrorCode::DegenerateNullSpace,
                    "generator null space is not one-dimensional (residual " +
                        std::to_string(residual) + ")",
                    "liouvillian");
    }

    Operator rho = unvectorize(x, dim);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    FieldState field(fock, std::move(rho));
    const double min_eig = field.min_eigenvalue();
    if (min_eig < -options.positivity_tol) {
        return NoSteadyState{"null vector is not a density matrix (eigenvalue " +
                             std::to_string(min_eig) + ")"};
    }
    const double leak = field.guard_population();
    if (leak > options.leak_tol) {
        return NoSteadyState{"stationary solution reaches the truncation guard band (population " +
                             std::to_string(leak) + "); the untruncated mode has no steady state or "
                             "needs a larger Fock space"};
    }
    return field;
}

MomentState moments_of(const FieldState& field) {
    return MomentState{field.mean_a(), field.mean_a2(), field.mean_n()};
}

MomentState ehrenfest_evolve(const FuelCoefficients& c, const MaserParams& params,
                             const MomentState& initial, double t) {
    params.validate();
    const double mu = params.mu();
    const double gap = c.gap();
    const Complex i(0.0, 1.0);
    const Complex drive = params.p * params.g_tau() * c.lambda;  // p g tau lambda

    // State (<a>, <a^dagger>, <a^2>, <n>, 1).
    Eigen::Matrix<Complex, 5, 5> m = Eigen::Matrix<Complex, 5, 5>::Zero();
    m(0, 0) = -0.5 * mu * gap;
    m(0, 4) = -i * drive;
    m(1, 1) = -0.5 * mu * gap;
    m(1, 4) = i * std::conj(drive);
    m(2, 2) = -mu * gap;
    m(2, 0) = -2.0 * i * drive;
    m(2, 4) = -2.0 * mu * c.xi;
    m(3, 3) = -mu * gap;
    m(3, 4) = mu * c.r_e;
    m(3, 1) = -i * drive;
    m(3, 0) = i * std::conj(drive);

    Eigen::Matrix<Complex, 5, 1> v;
    v << initial.mean_a, std::conj(initial.mean_a), initial.mean_a2, initial.mean_n, 1.0;
    const Eigen::Matrix<Complex, 5, 5> prop = (m * t).exp();
    const Eigen::Matrix<Complex, 5, 1> out = prop * v;
    return MomentState{out(0), out(2), out(3).real()};
}

}  // namespace fuelcell
