// Copyright 2026 The fqsim Authors
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

#include "fqs/experiment.h"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace fqs {

using nlohmann::json;

Hamiltonian HamiltonianSource::load() const {
    if (builtin.empty()) {
        return parse_hamiltonian_file(file);
    }
    if (builtin != "heisenberg1d") {
        throw ArgumentError("unknown builtin Hamiltonian '" + builtin + "'");
    }
    return Hamiltonian::heisenberg_1d(sites, coupling, field, periodic);
}

json HamiltonianSource::to_json() const {
    if (builtin.empty()) {
        return {{"file", file.string()}};
    }
    return {{"builtin", builtin}, {"sites", sites}, {"J", coupling}, {"h", field}, {"periodic", periodic}};
}

HamiltonianSource hamiltonian_source_from_string(const std::string &s) {
    HamiltonianSource src;
    if (s == "heisenberg1d") {
        src.builtin = s;
    } else {
        src.builtin.clear();
        src.file = s;
    }
    return src;
}

namespace {

std::string_view kind_text(TimeKind k) {
    return k == TimeKind::Imaginary ? "imaginary" : "real";
}

std::string_view mode_text(EvalMode m) {
    return m == EvalMode::Exact ? "exact" : "circuit";
}

json param_json(const GateParam &p) {
    return {p.theta, p.axis.x(), p.axis.y(), p.axis.z()};
}

GateParam param_from_json(const json &j) {
    if (!j.is_array() || j.size() != 4) {
        throw ArgumentError("fixed parameters are [theta, nx, ny, nz] arrays");
    }
    return {j[0].get<double>(), Vec3(j[1].get<double>(), j[2].get<double>(), j[3].get<double>())};
}

template <typename T>
void read_if(const json &j, const char *key, T &out) {
    if (auto it = j.find(key); it != j.end()) {
        out = it->get<T>();
    }
}

InitPolicy default_policy(const std::string &preset) {
    if (preset == "fig3-ry") {
        return InitPolicy::RandomAngleAxisYPerturbed;
    }
    if (preset == "fig7-swap") {
        return InitPolicy::RandomAll;
    }
    return InitPolicy::RandomAxisFixedAnglePi;
}

}  // namespace

json ExperimentConfig::to_json() const {
    json j = {
        {"name", name},
        {"hamiltonian", hamiltonian.to_json()},
        {"preset", preset},
        {"layers", layers},
        {"optimizer", optimizer},
        {"kind", kind_text(kind)},
        {"time_step", time_step},
        {"steps", steps},
        {"sweeps_per_term", sweeps_per_term},
        {"mode", mode_text(mode)},
        {"seeds", seeds},
        {"init", policy_name(init.policy)},
        {"sigma", init.sigma},
        {"checkpoint_every", checkpoint_every},
        {"output", output.string()},
        {"oracle_cap", oracle_cap},
        {"threads", threads},
        {"term_index", term_index},
    };
    if (init.policy == InitPolicy::Fixed) {
        json ps = json::array();
        for (const auto &p : init.fixed) {
            ps.push_back(param_json(p));
        }
        j["fixed_params"] = ps;
    }
    return j;
}

ExperimentConfig config_from_json(const json &j, const std::filesystem::path &base_dir) {
    static const std::set<std::string> kKeys = {
        "name", "hamiltonian", "preset", "layers", "optimizer", "kind", "time_step", "steps", "sweeps_per_term",
        "mode", "seeds", "init", "sigma", "fixed_params", "checkpoint_every", "output", "oracle_cap", "threads",
        "term_index"};
    if (!j.is_object()) {
        throw ArgumentError("config must be a JSON object");
    }
    for (const auto &[k, v] : j.items()) {
        if (!kKeys.count(k)) {
            throw ArgumentError("unknown config key '" + k + "'");
        }
    }

    ExperimentConfig c;
    try {
        read_if(j, "name", c.name);
        if (auto it = j.find("hamiltonian"); it != j.end()) {
            const json &h = *it;
            if (h.is_string()) {
                c.hamiltonian = hamiltonian_source_from_string(h.get<std::string>());
            } else if (h.contains("file")) {
                c.hamiltonian.builtin.clear();
                c.hamiltonian.file = h.at("file").get<std::string>();
            } else {
                c.hamiltonian.builtin = h.value("builtin", std::string("heisenberg1d"));
                read_if(h, "sites", c.hamiltonian.sites);
                read_if(h, "J", c.hamiltonian.coupling);
                read_if(h, "h", c.hamiltonian.field);
                read_if(h, "periodic", c.hamiltonian.periodic);
            }
        } else {
            c.hamiltonian.builtin = "heisenberg1d";
        }
        if (c.hamiltonian.builtin.empty() && c.hamiltonian.file.is_relative() && !base_dir.empty()) {
            c.hamiltonian.file = base_dir / c.hamiltonian.file;
        }
        read_if(j, "preset", c.preset);
        read_if(j, "layers", c.layers);
        read_if(j, "optimizer", c.optimizer);
        if (auto it = j.find("kind"); it != j.end()) {
            const auto k = it->get<std::string>();
            if (k != "imaginary" && k != "real") {
                throw ArgumentError("kind must be 'imaginary' or 'real'");
            }
            c.kind = k == "imaginary" ? TimeKind::Imaginary : TimeKind::Real;
        }
        read_if(j, "time_step", c.time_step);
        read_if(j, "steps", c.steps);
        read_if(j, "sweeps_per_term", c.sweeps_per_term);
        if (auto it = j.find("mode"); it != j.end()) {
            const auto m = it->get<std::string>();
            if (m != "exact" && m != "circuit") {
                throw ArgumentError("mode must be 'exact' or 'circuit'");
            }
            c.mode = m == "exact" ? EvalMode::Exact : EvalMode::Circuit;
        }
        read_if(j, "seeds", c.seeds);
        c.init.policy = default_policy(c.preset);
        if (auto it = j.find("init"); it != j.end()) {
            c.init.policy = policy_from_name(it->get<std::string>());
        }
        read_if(j, "sigma", c.init.sigma);
        if (auto it = j.find("fixed_params"); it != j.end()) {
            for (const auto &p : *it) {
                c.init.fixed.push_back(param_from_json(p));
            }
        }
        read_if(j, "checkpoint_every", c.checkpoint_every);
        if (auto it = j.find("output"); it != j.end()) {
            c.output = it->get<std::string>();
        }
        read_if(j, "oracle_cap", c.oracle_cap);
        read_if(j, "threads", c.threads);
        read_if(j, "term_index", c.term_index);
    } catch (const json::exception &e) {
        throw ArgumentError(std::string("config: ") + e.what());
    }

    if (c.seeds.empty()) {
        throw ArgumentError("config: seeds must not be empty");
    }
    if (!(c.time_step > 0)) {
        throw ArgumentError("config: time_step must be positive");
    }
    if (c.sweeps_per_term == 0 || c.checkpoint_every == 0) {
        throw ArgumentError("config: sweeps_per_term and checkpoint_every must be >= 1");
    }
    if (c.init.policy == InitPolicy::Fixed && c.init.fixed.empty()) {
        throw ArgumentError("config: the fixed policy needs fixed_params");
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("cannot open config " + path.string());
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception &e) {
        throw ArgumentError("config " + path.string() + ": " + e.what());
    }
    return config_from_json(j, path.parent_path());
}

std::filesystem::path resolve_output_dir(const ExperimentConfig &config) {
    if (!config.output.empty()) {
        return config.output;
    }
    if (const char *env = std::getenv(kOutputDirEnv); env && *env) {
        return env;
    }
    return ".";
}

const std::vector<std::string> &optimizer_names() {
    static const std::vector<std::string> names = {"fqs-1q3p", "fraxis", "nft", "fqs-2q2p", "fqs-2q1p",
                                                   "rzryrz-nft"};
    return names;
}

void check_compatibility(const std::string &optimizer, const std::string &preset, size_t layers, size_t qubits) {
    const auto &names = optimizer_names();
    if (std::find(names.begin(), names.end(), optimizer) == names.end()) {
        throw ArgumentError("unknown optimizer '" + optimizer + "'");
    }
    std::string label = optimizer;
    if (optimizer == "rzryrz-nft") {
        if (preset != "fig3-rzryrz") {
            throw ArgumentError("optimizer rzryrz-nft requires preset fig3-rzryrz");
        }
        label = "nft";
    }
    const Ansatz a = make_preset(preset, layers, qubits);
    for (size_t d = 0; d < a.slot_count(); ++d) {
        if (optimizer_label(a.slot(d).kind) != label) {
            throw ArgumentError("optimizer " + optimizer + " cannot update " + kind_name(a.slot(d).kind) +
                                " slot " + std::to_string(d) + " of preset " + preset);
        }
    }
}

namespace {

Ansatz prepared(const ExperimentConfig &c, size_t qubits, uint64_t seed) {
    return prepare_ansatz(c.preset, c.layers, qubits, c.init, seed);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig &config, bool write) {
    const Hamiltonian h = config.hamiltonian.load();
    const size_t m = h.qubit_count();
    check_compatibility(config.optimizer, config.preset, config.layers, m);
    const TrotterPlan plan = plan_with_step(h, config.time_step, config.steps, config.kind);

    EvolveOptions opts;
    opts.sweep.sweeps_per_term = config.sweeps_per_term;
    opts.sweep.mode = config.mode;
    opts.checkpoint_every = config.checkpoint_every;
    opts.oracle_cap = config.oracle_cap;

    const size_t n = config.seeds.size();
    ExperimentResult result;
    result.runs.resize(n);
    size_t slot_count = 0;
    {
        Ansatz probe = prepared(config, m, config.seeds[0]);
        if (probe.qubit_count() != m) {
            throw SizeError("preset " + config.preset + " has " + std::to_string(probe.qubit_count()) +
                            " qubits, Hamiltonian has " + std::to_string(m));
        }
        slot_count = probe.slot_count();
    }

    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (size_t i = next++; i < n; i = next++) {
            try {
                Ansatz a = prepared(config, m, config.seeds[i]);
                result.runs[i] = evolve(h, a, plan, opts);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    size_t workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
    std::vector<std::thread> pool;
    for (size_t w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    json meta;
    meta["config"] = config.to_json();
    meta["seeds"] = config.seeds;
    meta["version"] = FQS_VERSION;
    meta["qubits"] = m;
    meta["trotter_terms"] = plan.terms.size();
    meta["parameterized_slots"] = slot_count;
    meta["perturbation_sigma"] = config.init.sigma;
    std::map<std::string, size_t> counts;
    size_t updates = 0, flats = 0, violations = 0;
    double worst = 0;
    std::set<std::string> warnings;
    json digests = json::array();
    for (const auto &r : result.runs) {
        for (const auto &[k, v] : r.stats.measurements_per_update) {
            counts[k] = v;
        }
        updates += r.stats.updates;
        flats += r.stats.flat;
        violations += r.stats.violations;
        worst = std::max(worst, r.stats.worst_violation);
        warnings.insert(r.warnings.begin(), r.warnings.end());
        digests.push_back(r.rows.empty() ? "" : r.rows.back().digest);
    }
    meta["measurement_types_per_update"] = counts;
    meta["updates"] = updates;
    meta["flat_updates"] = flats;
    meta["improvement_violations"] = violations;
    meta["worst_objective_drop"] = worst;
    meta["final_parameter_digests"] = digests;
    meta["warnings"] = warnings;
    try {
        SpectralOracle o(h, config.oracle_cap);
        meta["oracle_ground_energy"] = o.ground_energy();
        meta["oracle_ground_degeneracy"] = o.ground_degeneracy();
    } catch (const ResourceError &) {
    }

    if (write) {
        const auto dir = resolve_output_dir(config);
        std::filesystem::create_directories(dir);
        json files = json::array();
        for (size_t i = 0; i < n; ++i) {
            auto path = dir / (config.name + "_seed" + std::to_string(config.seeds[i]) + ".csv");
            write_trajectory_csv(path, result.runs[i].rows);
            result.csv_files.push_back(path);
            files.push_back(path.filename().string());
        }
        meta["csv_files"] = files;
        std::ofstream(dir / (config.name + "_metadata.json")) << meta.dump(2) << '\n';
    }
    result.metadata = std::move(meta);
    return result;
}

std::string landscape_dump(const ExperimentConfig &config, size_t d, const LandscapeGrid &grid) {
    const Hamiltonian h = config.hamiltonian.load();
    Ansatz a = prepared(config, h.qubit_count(), config.seeds.at(0));
    if (d >= a.slot_count()) {
        throw IndexError("slot " + std::to_string(d) + " out of range for " + std::to_string(a.slot_count()) +
                         " slots");
    }
    if (config.term_index >= h.terms().size()) {
        throw IndexError("term index " + std::to_string(config.term_index) + " out of range");
    }
    SweepConfig sc;
    sc.sweeps_per_term = config.sweeps_per_term;
    const double step = update_step(a, sc, config.time_step);
    const Statevector target = propagated_target(a.state(), h.terms()[config.term_index], step, config.kind);

    const GateParam current = a.param(d);
    const double period = is_paired(a.slot(d).kind) ? kTwoPi : 2 * kTwoPi;
    std::vector<double> thetas;
    if (grid.theta_points == 0) {
        thetas.push_back(current.theta);
    } else {
        for (size_t k = 0; k < grid.theta_points; ++k) {
            thetas.push_back(period * static_cast<double>(k) / static_cast<double>(grid.theta_points));
        }
    }
    std::vector<Vec3> axes = grid.sphere_points ? fibonacci_sphere(grid.sphere_points) : std::vector{current.axis};

    std::ostringstream os;
    os << kLandscapeHeader << '\n';
    if (grid.theta_points == 0 && grid.sphere_points == 0) {
        return os.str();
    }
    for (double t : thetas) {
        for (const Vec3 &n : axes) {
            const double f = slot_objective(a, d, {t, n}, target);
            os << format_double(t) << ',' << format_double(n.x()) << ',' << format_double(n.y()) << ','
               << format_double(n.z()) << ',' << format_double(f) << '\n';
        }
    }
    return os.str();
}

}  // namespace fqs
