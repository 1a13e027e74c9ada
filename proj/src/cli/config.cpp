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

#include "fuelcell/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "fuelcell/errors.hpp"

namespace fuelcell::cli {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& path, const std::string& message) {
    throw Error(ErrorCode::Config, message, path);
}

std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
}

void expect_object(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) config_error(path, "expected an object");
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& item : j.items()) {
        if (!keys.contains(item.key())) config_error(join(path, item.key()), "unknown key");
    }
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) config_error(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) config_error(path, "expected a finite number");
    return v;
}

int integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) config_error(path, "expected an integer");
    return j.get<int>();
}

std::string string(const json& j, const std::string& path) {
    if (!j.is_string()) config_error(path, "expected a string");
    return j.get<std::string>();
}

StateSpec parse_state(const json& j, const std::string& path) {
    expect_object(j, path, {"name", "params", "amplitudes", "matrix"});
    StateSpec spec;
    if (!j.contains("name")) config_error(join(path, "name"), "state name is required");
    spec.name = string(j["name"], join(path, "name"));
    if (j.contains("params")) {
        const std::string p = join(path, "params");
        if (!j["params"].is_object()) config_error(p, "expected an object");
        for (const auto& item : j["params"].items()) {
            spec.params[item.key()] = number(item.value(), join(p, item.key()));
        }
    }
    if (j.contains("amplitudes")) {
        const std::string p = join(path, "amplitudes");
        const json& arr = j["amplitudes"];
        if (!arr.is_array()) config_error(p, "expected an array of [re, im] pairs");
        StateVector v(static_cast<Eigen::Index>(arr.size()));
        for (std::size_t k = 0; k < arr.size(); ++k) {
            v(static_cast<Eigen::Index>(k)) = complex_from_json(arr[k], p + "[" + std::to_string(k) + "]");
        }
        spec.amplitudes = v;
    }
    if (j.contains("matrix")) {
        const std::string p = join(path, "matrix");
        const json& rows = j["matrix"];
        if (!rows.is_array() || rows.empty()) config_error(p, "expected an array of rows");
        const auto n = static_cast<Eigen::Index>(rows.size());
        Operator m(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
            const std::string rp = p + "[" + std::to_string(r) + "]";
            const json& row = rows[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
                config_error(rp, "matrix must be square");
            }
            for (Eigen::Index c = 0; c < n; ++c) {
                m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                            rp + "[" + std::to_string(c) + "]");
            }
        }
        spec.matrix = m;
    }
    return spec;
}

MaserParams parse_maser(const json& j, const std::string& path) {
    expect_object(j, path, {"g", "tau", "p"});
    MaserParams m;
    if (j.contains("g")) m.g = number(j["g"], join(path, "g"));
    if (j.contains("tau")) m.tau = number(j["tau"], join(path, "tau"));
    if (j.contains("p")) m.p = number(j["p"], join(path, "p"));
    return m;
}

void parse_evolution(const json& j, const std::string& path, RunConfig& cfg) {
    expect_object(j, path, {"method", "dt", "t_max", "fock_dim", "seed", "leak_tol", "sample_stride",
                            "trajectories"});
    EvolutionConfig& e = cfg.evolution;
    if (j.contains("method")) {
        const std::string p = join(path, "method");
        try {
            e.method = parse_evolution_method(string(j["method"], p));
        } catch (const Error& err) {
            config_error(p, err.what());
        }
    }
    if (j.contains("dt")) e.dt = number(j["dt"], join(path, "dt"));
    if (j.contains("t_max")) e.t_max = number(j["t_max"], join(path, "t_max"));
    if (j.contains("leak_tol")) e.leak_tol = number(j["leak_tol"], join(path, "leak_tol"));
    if (j.contains("sample_stride")) e.sample_stride = integer(j["sample_stride"], join(path, "sample_stride"));
    if (j.contains("seed")) {
        const std::string p = join(path, "seed");
        const json& v = j["seed"];
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
            config_error(p, "expected a non-negative integer");
        }
        e.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("fock_dim")) cfg.fock_dim = integer(j["fock_dim"], join(path, "fock_dim"));
    if (j.contains("trajectories")) cfg.trajectories = integer(j["trajectories"], join(path, "trajectories"));
}

SweepSpec parse_sweep(const json& j, const std::string& path) {
    expect_object(j, path, {"preset", "quantity", "axes", "fixed", "allow_large"});
    SweepSpec spec;
    if (j.contains("preset")) {
        if (j.contains("quantity") || j.contains("axes")) {
            config_error(path, "give either a preset or quantity/axes, not both");
        }
        try {
            spec = sweep_preset(string(j["preset"], join(path, "preset")));
        } catch (const Error& err) {
            config_error(join(path, "preset"), err.what());
        }
    } else {
        if (!j.contains("quantity")) config_error(join(path, "quantity"), "quantity is required");
        spec.quantity = string(j["quantity"], join(path, "quantity"));
        if (!j.contains("axes") || !j["axes"].is_array()) config_error(join(path, "axes"), "expected an array");
        for (std::size_t k = 0; k < j["axes"].size(); ++k) {
            const std::string p = join(path, "axes") + "[" + std::to_string(k) + "]";
            const json& a = j["axes"][k];
            expect_object(a, p, {"name", "start", "stop", "count"});
            for (const char* key : {"name", "start", "stop", "count"}) {
                if (!a.contains(key)) config_error(join(p, key), "required");
            }
            spec.axes.push_back(SweepAxis{string(a["name"], join(p, "name")), number(a["start"], join(p, "start")),
                                          number(a["stop"], join(p, "stop")), integer(a["count"], join(p, "count"))});
        }
    }
    if (j.contains("fixed")) {
        const std::string p = join(path, "fixed");
        if (!j["fixed"].is_object()) config_error(p, "expected an object");
        for (const auto& item : j["fixed"].items()) spec.fixed[item.key()] = number(item.value(), join(p, item.key()));
    }
    if (j.contains("allow_large")) {
        if (!j["allow_large"].is_boolean()) config_error(join(path, "allow_large"), "expected a boolean");
        spec.allow_large = j["allow_large"].get<bool>();
    }
    try {
        spec.validate();
    } catch (const Error& err) {
        config_error(err.field().empty() ? path : join(path, err.field()), err.what());
    }
    return spec;
}

const std::map<std::string, std::set<std::string>>& quantity_axes() {
    static const std::map<std::string, std::set<std::string>> axes = {
        {"w_photon_number", {"theta", "psi", "phi", "delta"}},
        {"squeezing_r", {"theta"}},
        {"ghz_photon_number", {"theta"}},
    };
    return axes;
}

}  // namespace

double SweepAxis::value(int i) const {
    if (count == 1) return start;
    return start + (stop - start) * (static_cast<double>(i) / (count - 1));
}

std::size_t SweepSpec::points() const {
    std::size_t n = 1;
    for (const auto& a : axes) {
        n *= static_cast<std::size_t>(std::max(0, a.count));
        if (n > 100 * kMaxPoints) break;  // no overflow games
    }
    return n;
}

void SweepSpec::validate() const {
    const auto& known = quantity_axes();
    const auto it = known.find(quantity);
    if (it == known.end()) {
        throw Error(ErrorCode::Config, "unknown sweep quantity '" + quantity + "'", "quantity");
    }
    if (axes.empty()) throw Error(ErrorCode::Config, "a sweep needs at least one axis", "axes");
    std::set<std::string> seen;
    for (const auto& a : axes) {
        if (!it->second.contains(a.name)) {
            throw Error(ErrorCode::Config, "quantity '" + quantity + "' has no parameter '" + a.name + "'",
                        "axes");
        }
        if (!seen.insert(a.name).second) throw Error(ErrorCode::Config, "axis '" + a.name + "' repeated", "axes");
        if (a.count < 1) throw Error(ErrorCode::Config, "axis count must be >= 1", "axes");
    }
    for (const auto& [name, value] : fixed) {
        if (!it->second.contains(name) || seen.contains(name)) {
            throw Error(ErrorCode::Config, "fixed parameter '" + name + "' is not a free parameter", "fixed");
        }
    }
    if (points() > kMaxPoints && !allow_large) {
        throw Error(ErrorCode::Config,
                    "grid has " + std::to_string(points()) + " points (limit 1000000); set allow_large",
                    "axes");
    }
}

SweepSpec sweep_preset(const std::string& name) {
    using std::numbers::pi;
    SweepSpec s;
    if (name == "fig6") {
        s.quantity = "w_photon_number";
        s.axes = {{"theta", 0.0, pi / 2, 101}, {"psi", 0.0, 4.0 * std::asin(1.0 / std::sqrt(3.0)), 101}};
        s.fixed = {{"phi", 0.0}, {"delta", 0.0}};
    } else if (name == "fig7") {
        s.quantity = "squeezing_r";
        s.axes = {{"theta", 0.0, pi / 4, 101}};
    } else if (name == "fig8") {
        s.quantity = "ghz_photon_number";
        s.axes = {{"theta", 0.0, pi, 181}};
    } else {
        throw Error(ErrorCode::Config, "unknown sweep preset '" + name + "' (fig6, fig7, fig8)", "preset");
    }
    return s;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& path) {
    if (j.is_number()) return Complex(number(j, path), 0.0);
    if (!j.is_array() || j.size() != 2) config_error(path, "expected a complex value [re, im]");
    return Complex(number(j[0], path + "[0]"), number(j[1], path + "[1]"));
}

RunConfig parse_config(const json& doc) {
    expect_object(doc, "", {"schema", "state", "maser", "evolution", "sweep", "output", "oracle"});
    if (!doc.contains("schema")) config_error("schema", "missing schema field");
    const std::string schema = string(doc["schema"], "schema");
    if (schema != kSchema) config_error("schema", "unsupported schema '" + schema + "', expected " + kSchema);

    RunConfig cfg;
    if (doc.contains("state")) cfg.state = parse_state(doc["state"], "state");
    if (doc.contains("maser")) cfg.maser = parse_maser(doc["maser"], "maser");
    if (doc.contains("evolution")) parse_evolution(doc["evolution"], "evolution", cfg);
    if (doc.contains("sweep")) cfg.sweep = parse_sweep(doc["sweep"], "sweep");
    if (doc.contains("oracle")) {
        expect_object(doc["oracle"], "oracle", {"fock_dim", "probe_g_tau"});
        if (doc["oracle"].contains("fock_dim")) cfg.oracle_fock_dim = integer(doc["oracle"]["fock_dim"], "oracle.fock_dim");
        if (doc["oracle"].contains("probe_g_tau")) {
            cfg.oracle_probe_g_tau = number(doc["oracle"]["probe_g_tau"], "oracle.probe_g_tau");
            if (!(cfg.oracle_probe_g_tau > 0.0 && cfg.oracle_probe_g_tau < 0.3)) {
                throw Error(ErrorCode::Config, "oracle.probe_g_tau must lie in (0, 0.3)", "oracle.probe_g_tau");
            }
        }
    }
    if (doc.contains("output")) {
        expect_object(doc["output"], "output", {"dir"});
        if (doc["output"].contains("dir")) cfg.out_dir = string(doc["output"]["dir"], "output.dir");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open config file '" + path + "'", "config");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Config, std::string("malformed JSON: ") + e.what(), "config");
    }
    return parse_config(doc);
}

}  // namespace fuelcell::cli
