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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fqs/experiment.h"

namespace {

int run_evolve(const std::string &config_path, const std::string &output) {
    fqs::ExperimentConfig c = fqs::load_config(config_path);
    if (!output.empty()) {
        c.output = output;
    }
    auto r = fqs::run_experiment(c);
    for (const auto &w : r.metadata["warnings"]) {
        std::cerr << "warning: " << w.get<std::string>() << "\n";
    }
    for (const auto &p : r.csv_files) {
        std::cout << p.string() << "\n";
    }
    if (r.metadata["improvement_violations"].get<size_t>() > 0) {
        std::cerr << "error: " << r.metadata["improvement_violations"] << " updates lowered the objective\n";
        return 2;
    }
    return 0;
}

int run_oracle(const std::string &source, size_t sites, double coupling, double field, bool open, size_t cap) {
    fqs::HamiltonianSource src = fqs::hamiltonian_source_from_string(source);
    src.sites = sites;
    src.coupling = coupling;
    src.field = field;
    src.periodic = !open;
    const fqs::Hamiltonian h = src.load();
    fqs::SpectralOracle o(h, cap);
    nlohmann::json j = {
        {"hamiltonian", src.to_json()},
        {"qubits", h.qubit_count()},
        {"trotter_terms", h.terms().size()},
        {"ground_energy", o.ground_energy()},
        {"ground_degeneracy", o.ground_degeneracy()},
        {"first_excited_energy",
         o.ground_degeneracy() < static_cast<size_t>(o.eigenvalues().size())
             ? nlohmann::json(o.eigenvalues()[static_cast<Eigen::Index>(o.ground_degeneracy())])
             : nlohmann::json(nullptr)},
    };
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_compare(const std::vector<std::string> &paths, const std::string &output) {
    std::vector<std::filesystem::path> ps(paths.begin(), paths.end());
    const std::string report = fqs::compare_report(ps);
    if (output.empty()) {
        std::cout << report;
    } else {
        std::ofstream(output) << report;
    }
    return 0;
}

int run_landscape(const std::string &config_path, size_t slot, const fqs::LandscapeGrid &grid,
                  const std::string &output) {
    const std::string csv = fqs::landscape_dump(fqs::load_config(config_path), slot, grid);
    if (output.empty()) {
        std::cout << csv;
    } else {
        std::ofstream(output) << csv;
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Sequential quaternion-gate time evolution on a statevector simulator"};
    app.set_version_flag("--version", std::string(FQS_VERSION));
    app.require_subcommand(1);

    std::string config_path, output;
    auto *evolve = app.add_subcommand("evolve", "Run an ensemble of seeds and write trajectory CSVs");
    evolve->add_option("--config", config_path, "JSON experiment config")->required()->check(CLI::ExistingFile);
    evolve->add_option("--output", output, "Output directory (overrides config and $FQS_OUTPUT_DIR)");

    std::string source;
    size_t sites = 5, cap = fqs::kDefaultOracleCap;
    double coupling = 1, field = 1;
    bool open = false;
    auto *oracle = app.add_subcommand("oracle", "Exact ground energy of a Hamiltonian");
    oracle->add_option("--hamiltonian", source, "Hamiltonian file or 'heisenberg1d'")->required();
    oracle->add_option("--sites", sites, "Chain length for heisenberg1d");
    oracle->add_option("--coupling", coupling, "Coupling for heisenberg1d");
    oracle->add_option("--field", field, "Z field for heisenberg1d");
    oracle->add_flag("--open", open, "Open boundary for heisenberg1d");
    oracle->add_option("--cap", cap, "Largest qubit count for dense matrices");

    std::vector<std::string> csvs;
    auto *compare = app.add_subcommand("compare", "Quantiles across trajectory CSVs");
    compare->add_option("csv", csvs, "Trajectory CSV files")->required()->check(CLI::ExistingFile);
    compare->add_option("--output", output, "Write the report here instead of stdout");

    size_t slot = 0;
    fqs::LandscapeGrid grid;
    auto *landscape = app.add_subcommand("landscape", "Sample one slot's objective on a grid");
    landscape->add_option("--config", config_path, "JSON experiment config")->required()->check(CLI::ExistingFile);
    landscape->add_option("--slot", slot, "Slot index (0-based)")->required();
    landscape->add_option("--theta-points", grid.theta_points, "Angles over one period");
    landscape->add_option("--sphere-points", grid.sphere_points, "Fibonacci-sphere axes");
    landscape->add_option("--output", output, "Write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*evolve) {
            return run_evolve(config_path, output);
        }
        if (*oracle) {
            return run_oracle(source, sites, coupling, field, open, cap);
        }
        if (*compare) {
            return run_compare(csvs, output);
        }
        return run_landscape(config_path, slot, grid, output);
    } catch (const fqs::ContractViolation &e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
