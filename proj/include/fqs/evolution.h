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
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fqs/oracle.h"
#include "fqs/slot_eval.h"

namespace fqs {

struct TrotterPlan {
    std::vector<PauliTerm> terms;
    double step = 0;
    size_t steps = 0;
    TimeKind kind = TimeKind::Imaginary;

    size_t applications() const {
        return terms.size() * steps;
    }
};

/// Step = total_time / steps, one entry per Hamiltonian term in file order.
TrotterPlan trotterize(const Hamiltonian &h, double total_time, size_t steps, TimeKind kind);
/// Plan with an explicit step size; steps may be 0.
TrotterPlan plan_with_step(const Hamiltonian &h, double step, size_t steps, TimeKind kind);

struct SweepConfig {
    size_t sweeps_per_term = 1;
    EvalMode mode = EvalMode::Exact;
    /// Re-evaluate the objective before and after every update.
    bool check_improvement = true;
};

/// Each update sees step / (slot count * sweeps_per_term).
double update_step(const Ansatz &ansatz, const SweepConfig &config, double step);

struct UpdateOutcome {
    GateParam before;
    GateParam after;
    std::optional<double> objective_before;
    std::optional<double> objective_after;
    bool flat = false;
    size_t measurements = 0;
};

struct SweepStats {
    size_t updates = 0;
    size_t flat = 0;
    size_t violations = 0;
    double worst_violation = 0;
    /// Distinct measurement circuits per update, keyed by optimizer label.
    std::map<std::string, size_t> measurements_per_update;
};

/// Optimizer label used for a slot of this kind.
std::string optimizer_label(const GateKind &kind);

/// One closed-form update of slot d against the fractional propagator of
/// `term` with the already-divided step.
UpdateOutcome update_slot(Ansatz &ansatz, size_t d, const PauliTerm &term, double step, TimeKind kind,
                          EvalMode mode, bool check_improvement = true, MeasurementTally *tally = nullptr);

/// config.sweeps_per_term ordered passes over every slot for one Trotter term.
void sweep_term(Ansatz &ansatz, const PauliTerm &term, double step, TimeKind kind, const SweepConfig &config,
                SweepStats &stats);

struct TrajectoryRow {
    size_t step = 0;
    double tau = 0;
    double energy = 0;
    std::optional<double> fidelity_exact;
    std::optional<double> fidelity_ground;
    std::string digest;
};

struct Trajectory {
    std::vector<TrajectoryRow> rows;
    SweepStats stats;
    std::vector<std::string> warnings;
};

struct EvolveOptions {
    SweepConfig sweep;
    /// Record every this many steps; the initial and final steps are always recorded.
    size_t checkpoint_every = 1;
    size_t oracle_cap = kDefaultOracleCap;
};

Trajectory evolve(const Hamiltonian &h, Ansatz &ansatz, const TrotterPlan &plan, const EvolveOptions &options);

/// Hex FNV-1a digest of the parameter bit patterns.
std::string parameter_digest(const Ansatz &ansatz);

enum class InitPolicy { RandomAxisFixedAnglePi, RandomAngleAxisYPerturbed, RandomAll, Fixed };

struct InitSpec {
    InitPolicy policy = InitPolicy::RandomAxisFixedAnglePi;
    double sigma = 0.05;
    std::vector<GateParam> fixed;
};

std::string_view policy_name(InitPolicy p);
InitPolicy policy_from_name(std::string_view name);

/// Normalized 3-d standard Gaussian draw.
Vec3 random_axis(std::mt19937_64 &rng);
void init_parameters(Ansatz &ansatz, const InitSpec &spec, uint64_t seed);

/// Builds a preset and initializes it. fig3-rzryrz and fig7-decomposed are
/// initialized as their parent circuits (fig3-general, fig7-excitation) and
/// converted afterwards, so equal seeds give equal circuits.
Ansatz prepare_ansatz(std::string_view preset, size_t layers, size_t qubits, const InitSpec &spec, uint64_t seed);

}  // namespace fqs
