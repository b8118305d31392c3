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

#include "fqs/evolution.h"

#include <bit>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <sstream>

namespace fqs {

TrotterPlan plan_with_step(const Hamiltonian &h, double step, size_t steps, TimeKind kind) {
    if (!(step > 0) || !std::isfinite(step)) {
        throw ArgumentError("Trotter step must be positive");
    }
    return {h.terms(), step, steps, kind};
}

TrotterPlan trotterize(const Hamiltonian &h, double total_time, size_t steps, TimeKind kind) {
    if (steps == 0) {
        throw ArgumentError("trotterize: steps must be >= 1");
    }
    return plan_with_step(h, total_time / static_cast<double>(steps), steps, kind);
}

double update_step(const Ansatz &ansatz, const SweepConfig &config, double step) {
    if (config.sweeps_per_term == 0) {
        throw ArgumentError("sweeps_per_term must be >= 1");
    }
    if (ansatz.slot_count() == 0) {
        throw ArgumentError("ansatz has no parameterized slots");
    }
    return step / static_cast<double>(ansatz.slot_count() * config.sweeps_per_term);
}

std::string optimizer_label(const GateKind &kind) {
    if (std::holds_alternative<General1Q>(kind)) {
        return "fqs-1q3p";
    }
    if (std::holds_alternative<Fraxis1Q>(kind)) {
        return "fraxis";
    }
    if (std::holds_alternative<FixedAxis1Q>(kind)) {
        return "nft";
    }
    if (const auto *c = std::get_if<TwoQubitComposite>(&kind);
        c && c->family == CompositeFamily::ExcitationConserving) {
        return "fqs-2q2p";
    }
    return "fqs-2q1p";
}

namespace {

std::optional<GateParam> solve_slot(const Ansatz &ansatz, size_t d, const PauliTerm &term, double step,
                                    TimeKind kind, EvalMode mode, MeasurementTally &tally) {
    const GateKind &gk = ansatz.slot(d).kind;
    const GateParam &prev = ansatz.param(d);
    const bool real = kind == TimeKind::Real;
    const double c = term.coefficient;

    if (std::holds_alternative<General1Q>(gk)) {
        const QSet q = eval_qset(ansatz, d, term, mode, real, &tally);
        auto p = solve_1q_3p(assemble_gvector(prev, q, c, step, kind), prev.axis);
        return p ? std::optional(normalize_param(*p)) : std::nullopt;
    }
    if (std::holds_alternative<FixedAxis1Q>(gk)) {
        const AxisQSet q = eval_axis_qset(ansatz, d, term, mode, real, &tally);
        auto [g0, gd] = assemble_axis_g(prev, q, c, step, kind);
        return solve_fixed_axis(g0, gd, prev.axis);
    }
    if (std::holds_alternative<Fraxis1Q>(gk)) {
        Vec3 g;
        if (real) {
            g = assemble_gvector(prev, eval_qset(ansatz, d, term, mode, true, &tally), c, step, kind).g;
        } else {
            g = assemble_fraxis_g(prev, eval_fraxis_matrix(ansatz, d, term, mode, &tally), c, step);
        }
        auto n = solve_1q_2p(g);
        return n ? std::optional(GateParam{kPi, *n}) : std::nullopt;
    }
    if (const auto *comp = std::get_if<TwoQubitComposite>(&gk)) {
        switch (comp->family) {
            case CompositeFamily::ExcitationConserving: {
                const GMatrix gm = eval_gmatrix(ansatz, d, term, step, kind, mode, false, &tally);
                if (gm.s.cwiseAbs().maxCoeff() < kFlatTolerance) {
                    return std::nullopt;
                }
                return GateParam{kPi, solve_2q_2p(gm)};
            }
            case CompositeFamily::Hop:
            case CompositeFamily::Rbs: {
                const Mat3 g =
                    eval_gmatrix_entries(ansatz, d, term, step, kind, mode, {{2, 2}, {2, 0}, {0, 2}, {0, 0}}, &tally);
                auto psi = solve_2q_1p(hvector_from_gmatrix(GMatrix::from_g(g)));
                return psi ? std::optional(GateParam{kPi, axis_from_angles(*psi, 0)}) : std::nullopt;
            }
            case CompositeFamily::Swap:
                break;
        }
    }
    // Swap composites and tied rotations: angle about a fixed axis.
    auto theta = solve_2q_1p(eval_hvector(ansatz, d, term, step, kind, mode, &tally));
    return theta ? std::optional(normalize_param_periodic({*theta, prev.axis})) : std::nullopt;
}

}  // namespace

UpdateOutcome update_slot(Ansatz &ansatz, size_t d, const PauliTerm &term, double step, TimeKind kind,
                          EvalMode mode, bool check_improvement, MeasurementTally *tally) {
    MeasurementTally local;
    MeasurementTally &t = tally ? *tally : local;
    UpdateOutcome out;
    out.before = ansatz.param(d);

    std::optional<Statevector> target;
    if (check_improvement) {
        target = propagated_target(ansatz.state(), term, step, kind);
        out.objective_before = slot_objective(ansatz, d, out.before, *target);
    }
    const size_t seen = t.distinct();
    auto p = solve_slot(ansatz, d, term, step, kind, mode, t);
    out.measurements = t.distinct() - seen;
    if (p) {
        ansatz.set_param(d, *p);
    } else {
        out.flat = true;
    }
    out.after = ansatz.param(d);
    if (check_improvement) {
        out.objective_after = slot_objective(ansatz, d, out.after, *target);
    }
    return out;
}

void sweep_term(Ansatz &ansatz, const PauliTerm &term, double step, TimeKind kind, const SweepConfig &config,
                SweepStats &stats) {
    const double s = update_step(ansatz, config, step);
    for (size_t sweep = 0; sweep < config.sweeps_per_term; ++sweep) {
        for (size_t d = 0; d < ansatz.slot_count(); ++d) {
            MeasurementTally tally;
            UpdateOutcome u = update_slot(ansatz, d, term, s, kind, config.mode, config.check_improvement, &tally);
            ++stats.updates;
            stats.flat += u.flat;
            stats.measurements_per_update[optimizer_label(ansatz.slot(d).kind)] = u.measurements;
            if (u.objective_before && u.objective_after) {
                const double drop = *u.objective_before - *u.objective_after;
                if (drop > 1e-12) {
                    ++stats.violations;
                }
                stats.worst_violation = std::max(stats.worst_violation, drop);
            }
        }
    }
}

std::string parameter_digest(const Ansatz &ansatz) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](double v) {
        const uint64_t bits = std::bit_cast<uint64_t>(v);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (const GateParam &p : ansatz.params()) {
        mix(p.theta);
        mix(p.axis.x());
        mix(p.axis.y());
        mix(p.axis.z());
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

Trajectory evolve(const Hamiltonian &h, Ansatz &ansatz, const TrotterPlan &plan, const EvolveOptions &options) {
    if (h.qubit_count() != ansatz.qubit_count()) {
        throw SizeError("evolve: Hamiltonian acts on " + std::to_string(h.qubit_count()) + " qubits, ansatz has " +
                        std::to_string(ansatz.qubit_count()));
    }
    for (const auto &t : plan.terms) {
        if (t.qubit_count() != ansatz.qubit_count()) {
            throw SizeError("evolve: plan term '" + t.label() + "' has the wrong width");
        }
    }
    if (options.checkpoint_every == 0) {
        throw ArgumentError("checkpoint cadence must be >= 1");
    }

    Trajectory out;
    std::optional<SpectralOracle> oracle;
    try {
        oracle.emplace(h, options.oracle_cap);
    } catch (const ResourceError &e) {
        out.warnings.push_back(std::string("fidelity columns omitted: ") + e.what());
    }
    const Statevector psi0 = ansatz.state();

    auto record = [&](size_t step) {
        TrajectoryRow row;
        row.step = step;
        row.tau = static_cast<double>(step) * plan.step;
        const Statevector s = ansatz.state();
        row.energy = energy(h, s);
        if (oracle) {
            row.fidelity_exact = fidelity(oracle->evolve(psi0, row.tau, plan.kind), s);
            row.fidelity_ground = oracle->ground_fidelity(s);
        }
        row.digest = parameter_digest(ansatz);
        out.rows.push_back(std::move(row));
    };

    record(0);
    for (size_t n = 1; n <= plan.steps; ++n) {
        for (const auto &term : plan.terms) {
            sweep_term(ansatz, term, plan.step, plan.kind, options.sweep, out.stats);
        }
        if (n % options.checkpoint_every == 0 || n == plan.steps) {
            record(n);
        }
    }
    return out;
}

std::string_view policy_name(InitPolicy p) {
    switch (p) {
        case InitPolicy::RandomAxisFixedAnglePi:
            return "random_axis_fixed_angle_pi";
        case InitPolicy::RandomAngleAxisYPerturbed:
            return "random_angle_axis_y_perturbed";
        case InitPolicy::RandomAll:
            return "random_all";
        case InitPolicy::Fixed:
            return "fixed";
    }
    return "?";
}

InitPolicy policy_from_name(std::string_view name) {
    for (auto p : {InitPolicy::RandomAxisFixedAnglePi, InitPolicy::RandomAngleAxisYPerturbed, InitPolicy::RandomAll,
                   InitPolicy::Fixed}) {
        if (policy_name(p) == name) {
            return p;
        }
    }
    throw ArgumentError("unknown initialization policy '" + std::string(name) + "'");
}

Vec3 random_axis(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    for (;;) {
        Vec3 v(normal(rng), normal(rng), normal(rng));
        const double n = v.norm();
        if (n > 1e-12) {
            return v / n;
        }
    }
}

namespace {

[[noreturn]] void incompatible(InitPolicy policy, const GateKind &kind) {
    throw ArgumentError("policy " + std::string(policy_name(policy)) + " cannot initialize " + kind_name(kind) +
                        " slots");
}

bool along_y(const Vec3 &axis) {
    return std::abs(std::abs(axis.y()) - 1) < 1e-12;
}

const Vec3 &nominal_axis(const GateKind &kind) {
    if (const auto *f = std::get_if<FixedAxis1Q>(&kind)) {
        return f->axis;
    }
    return std::get<TiedFixedAxis>(kind).axis;
}

}  // namespace

void init_parameters(Ansatz &ansatz, const InitSpec &spec, uint64_t seed) {
    if (spec.policy == InitPolicy::Fixed) {
        ansatz.set_params(spec.fixed);
        return;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::normal_distribution<double> normal(0.0, 1.0);
    const size_t count = ansatz.slot_count();
    std::vector<GateParam> ps(count);

    switch (spec.policy) {
        case InitPolicy::RandomAxisFixedAnglePi:
            for (size_t d = 0; d < count; ++d) {
                const GateKind &k = ansatz.slot(d).kind;
                const auto *comp = std::get_if<TwoQubitComposite>(&k);
                if (std::holds_alternative<General1Q>(k) || std::holds_alternative<Fraxis1Q>(k) ||
                    (comp && comp->family == CompositeFamily::ExcitationConserving)) {
                    ps[d] = {kPi, random_axis(rng)};
                } else if (comp && comp->family != CompositeFamily::Swap) {
                    ps[d] = {kPi, axis_from_angles(angle(rng), 0)};
                } else {
                    incompatible(spec.policy, k);
                }
            }
            break;
        case InitPolicy::RandomAngleAxisYPerturbed:
            if (!(spec.sigma >= 0)) {
                throw ArgumentError("perturbation sigma must be >= 0");
            }
            // All angles first so circuits of equal length share them.
            for (size_t d = 0; d < count; ++d) {
                const GateKind &k = ansatz.slot(d).kind;
                const bool y_fixed = std::holds_alternative<FixedAxis1Q>(k) && along_y(nominal_axis(k));
                if (!std::holds_alternative<General1Q>(k) && !y_fixed) {
                    incompatible(spec.policy, k);
                }
                ps[d].theta = angle(rng);
            }
            for (size_t d = 0; d < count; ++d) {
                const GateKind &k = ansatz.slot(d).kind;
                if (std::holds_alternative<General1Q>(k)) {
                    Vec3 v(spec.sigma * normal(rng), 1 + spec.sigma * normal(rng), spec.sigma * normal(rng));
                    ps[d].axis = v.normalized();
                } else {
                    ps[d].axis = nominal_axis(k);
                }
            }
            break;
        case InitPolicy::RandomAll:
            for (size_t d = 0; d < count; ++d) {
                const GateKind &k = ansatz.slot(d).kind;
                const auto *comp = std::get_if<TwoQubitComposite>(&k);
                if (std::holds_alternative<General1Q>(k)) {
                    const double theta = angle(rng);
                    ps[d] = {theta, random_axis(rng)};
                } else if (std::holds_alternative<Fraxis1Q>(k)) {
                    ps[d] = {kPi, random_axis(rng)};
                } else if (std::holds_alternative<FixedAxis1Q>(k) || std::holds_alternative<TiedFixedAxis>(k)) {
                    ps[d] = {angle(rng), nominal_axis(k)};
                } else if (comp->family == CompositeFamily::ExcitationConserving) {
                    const double psi = angle(rng);
                    ps[d] = {kPi, axis_from_angles(psi, angle(rng))};
                } else if (comp->family == CompositeFamily::Swap) {
                    ps[d] = {angle(rng), ansatz.param(d).axis};
                } else {
                    ps[d] = {kPi, axis_from_angles(angle(rng), 0)};
                }
            }
            break;
        case InitPolicy::Fixed:
            break;
    }
    ansatz.set_params(ps);
}

Ansatz prepare_ansatz(std::string_view preset, size_t layers, size_t qubits, const InitSpec &spec, uint64_t seed) {
    if (preset == "fig3-rzryrz" && spec.policy != InitPolicy::Fixed) {
        Ansatz base = make_preset("fig3-general", layers, qubits);
        init_parameters(base, spec, seed);
        return expand_zyz(base);
    }
    if (preset == "fig7-decomposed" && spec.policy != InitPolicy::Fixed) {
        Ansatz base = make_preset("fig7-excitation", layers, qubits);
        init_parameters(base, spec, seed);
        return decompose_excitation(base);
    }
    Ansatz a = make_preset(preset, layers, qubits);
    init_parameters(a, spec, seed);
    return a;
}

}  // namespace fqs
