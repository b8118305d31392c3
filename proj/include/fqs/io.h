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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fqs/evolution.h"

namespace fqs {

inline constexpr std::string_view kTrajectoryHeader = "step,tau,energy,fidelity_exact,fidelity_ground";

/// Shortest round-trip decimal form, independent of the locale.
std::string format_double(double v);
double parse_double(std::string_view s);

Hamiltonian parse_hamiltonian_file(const std::filesystem::path &path);
void write_hamiltonian_file(const std::filesystem::path &path, const Hamiltonian &h);

/// Fidelity fields are left empty when the oracle was unavailable.
void write_trajectory_csv(std::ostream &os, const std::vector<TrajectoryRow> &rows);
void write_trajectory_csv(const std::filesystem::path &path, const std::vector<TrajectoryRow> &rows);
std::vector<TrajectoryRow> read_trajectory_csv(const std::filesystem::path &path);

/// Linear-interpolation quantile of unsorted values, q in [0, 1].
double quantile(std::vector<double> values, double q);

/// Per-checkpoint min / q25 / median / q75 / max of energy and both
/// fidelities across runs. Runs must share the (step, tau) grid.
std::string compare_report(const std::vector<std::vector<TrajectoryRow>> &runs);
std::string compare_report(const std::vector<std::filesystem::path> &csv_paths);

}  // namespace fqs
