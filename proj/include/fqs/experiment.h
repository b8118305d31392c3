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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqs/evolution.h"
#include "fqs/io.h"

namespace fqs {

struct HamiltonianSource {
    std::string builtin = "heisenberg1d";  // empty when loading from file
    size_t sites = 5;
    double coupling = 1;
    double field = 1;
    bool periodic = true;
    std::filesystem::path file;

    Hamiltonian load() const;
    nlohmann::json to_json() const;
};

/// Parses "heisenberg1d" or a file path.
HamiltonianSource hamiltonian_source_from_string(const std::string &s);

struct ExperimentConfig {
    std::string name = "run";
    HamiltonianSource hamiltonian;
    std::string preset = "fig3-general";
    size_t layers = 2;
    std::string optimizer = "fqs-1q3p";
    TimeKind kind = TimeKind::Imaginary;
    double time_step = 0.5;
    size_t steps = 10;
    size_t sweeps_per_term = 1;
    EvalMode mode = EvalMode::Exact;
    std::vector<uint64_t> seeds = {0};
    InitSpec init;
    size_t checkpoint_every = 1;
    std::filesystem::path output;
    size_t oracle_cap = kDefaultOracleCap;
    /// 0 = one worker per hardware thread.
    size_t threads = 0;
    /// Landscape only: which Trotter term the objective refers to.
    size_t term_index = 0;

    nlohmann::json to_json() const;
};

/// Relative file paths are resolved against `base_dir`. Unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json &j, const std::filesystem::path &base_dir = {});
ExperimentConfig load_config(const std::filesystem::path &path);

/// Environment variable naming the default output directory.
inline constexpr const char *kOutputDirEnv = "FQS_OUTPUT_DIR";
std::filesystem::path resolve_output_dir(const ExperimentConfig &config);

/// Throws ArgumentError when some slot of the preset is not handled by the optimizer.
void check_compatibility(const std::string &optimizer, const std::string &preset, size_t layers, size_t qubits);
const std::vector<std::string> &optimizer_names();

struct ExperimentResult {
    std::vector<Trajectory> runs;
    std::vector<std::filesystem::path> csv_files;
    nlohmann::json metadata;
};

/// Runs every seed (concurrently) and, when `write` is set, writes one CSV per
/// seed plus <name>_metadata.json into the output directory.
ExperimentResult run_experiment(const ExperimentConfig &config, bool write = true);

struct LandscapeGrid {
    /// Angles over one period of the slot's angle; 0 keeps the current angle.
    size_t theta_points = 0;
    /// Fibonacci-sphere axes; 0 keeps the current axis.
    size_t sphere_points = 0;
};

inline constexpr std::string_view kLandscapeHeader = "theta,nx,ny,nz,objective";

/// Objective of slot d (first seed's initial circuit, term `term_index`, one
/// update's step) on the grid, as CSV.
std::string landscape_dump(const ExperimentConfig &config, size_t d, const LandscapeGrid &grid);

}  // namespace fqs
