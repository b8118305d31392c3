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

#include "fqs/slot_eval.h"

#include <cmath>

#include "fqs/hadamard_test.h"

namespace fqs {

namespace {

const char kAxisLabel[3] = {'x', 'y', 'z'};

Mat2 pauli(int p) {
    switch (p) {
        case 0:
            return gates::pauli_x();
        case 1:
            return gates::pauli_y();
        default:
            return gates::pauli_z();
    }
}

Vec3 unit(int p) {
    Vec3 v = Vec3::Zero();
    v[p] = 1;
    return v;
}

void note(MeasurementTally *tally, const std::string &key) {
    if (tally) {
        tally->record(key);
    }
}

const Slot &single_slot(const Ansatz &ansatz, size_t d, const char *what) {
    const Slot &s = ansatz.slot(d);
    if (is_paired(s.kind)) {
        throw KindError(std::string(what) + ": slot " + std::to_string(d) + " is " + kind_name(s.kind) +
                        ", expected a single-qubit gate");
    }
    return s;
}

const Slot &paired_slot(const Ansatz &ansatz, size_t d, const char *what) {
    const Slot &s = ansatz.slot(d);
    if (!is_paired(s.kind)) {
        throw KindError(std::string(what) + ": slot " + std::to_string(d) + " is " + kind_name(s.kind) +
                        ", expected a two-qubit or tied gate");
    }
    return s;
}

double bare_expectation(const PauliTerm &unit_term, const Statevector &s) {
    return pauli_matrix_element(unit_term, s, s).real();
}

// phi' = R' V1|0> and, for the exact contractions, Omega = O' phi' = V2^dag O psi.
struct SingleContext {
    const Ansatz &ansatz;
    const Slot &slot;
    PauliTerm unit_term;
    Statevector phi_prime;
    Statevector psi;

    SingleContext(const Ansatz &a, size_t d, const PauliTerm &term, const char *what)
        : ansatz(a), slot(single_slot(a, d, what)), unit_term(term.unit()), phi_prime(a.qubit_count()),
          psi(a.qubit_count()) {
        if (term.qubit_count() != a.qubit_count()) {
            throw SizeError(std::string(what) + ": term and ansatz qubit counts differ");
        }
        a.apply(phi_prime, 0, slot.first_op + 1);
        psi = phi_prime;
        a.apply(psi, slot.first_op + 1, a.ops().size());
    }

    // <O'> on V2 applied to the given post-gate state.
    double propagate_expectation(Statevector s) const {
        ansatz.apply(s, slot.first_op + 1, ansatz.ops().size());
        return bare_expectation(unit_term, s);
    }

    Statevector omega() const {
        Statevector o = psi;
        apply_pauli_unit(unit_term, o);
        apply_segment_adjoint(o, ansatz.segment(slot.first_op + 1, ansatz.ops().size()));
        return o;
    }

    // Circuit: V1, R', insertion, V2, then <O>.
    double circuit_expectation(const Mat2 &insertion) const {
        Statevector s(ansatz.qubit_count());
        ansatz.apply(s, 0, slot.first_op + 1);
        s.apply_single_qubit(slot.rotation_qubit, insertion);
        return propagate_expectation(std::move(s));
    }

    // Re<phi'|O' X phi'> by a Hadamard test on W0 = V1 R', X, W1 = V2.
    double circuit_cross(const Mat2 &x) const {
        const size_t end = ansatz.ops().size();
        auto r = simulate_hadamard_test(ansatz.segment(0, slot.first_op + 1), ansatz.segment(slot.first_op + 1, end),
                                        {}, {slot.rotation_qubit, x}, {slot.rotation_qubit, Mat2::Identity()},
                                        unit_term);
        return r.z_observable;
    }
};

}  // namespace

PropagatorWeights propagator_weights(double coefficient, double step, TimeKind kind) {
    const double x = coefficient * step;
    if (kind == TimeKind::Imaginary) {
        return {std::cosh(x), -std::sinh(x)};
    }
    return {std::cos(x), cdouble(0, std::sin(x))};
}

Statevector propagated_target(const Statevector &reference, const PauliTerm &term, double step, TimeKind kind) {
    const PropagatorWeights w = propagator_weights(term.coefficient, step, kind);
    Statevector o = reference;
    apply_pauli_unit(term.unit(), o);
    Statevector t = reference;
    t.scale(w.a);
    t.add_scaled(std::conj(w.b), o);
    return t;
}

Statevector state_with(const Ansatz &ansatz, size_t d, const GateParam &p) {
    ansatz.slot(d);
    const Mat2 r = rotation_matrix(p);
    Statevector s(ansatz.qubit_count());
    for (const auto &op : ansatz.ops()) {
        if ((op.kind == OpKind::Rot || op.kind == OpKind::RotDagger) && op.slot == d) {
            s.apply_matrix(op.target, op.kind == OpKind::Rot ? r : Mat2(r.adjoint()));
            continue;
        }
        GateOp g = ansatz.bind(op);
        if (g.type == GateOp::Type::Single) {
            s.apply_matrix(g.target, g.matrix);
        } else {
            s.apply_controlled(g.control, g.target, g.matrix);
        }
    }
    return s;
}

double slot_objective(const Ansatz &ansatz, size_t d, const GateParam &p, const Statevector &target) {
    return inner_product(target, state_with(ansatz, d, p)).real();
}

QSet eval_qset(const Ansatz &ansatz, size_t d, const PauliTerm &term, EvalMode mode, bool with_cross,
               MeasurementTally *tally) {
    SingleContext ctx(ansatz, d, term, "eval_qset");
    QSet q;
    note(tally, "q0");
    for (int p = 0; p < 3; ++p) {
        note(tally, std::string("q+") + kAxisLabel[p]);
        note(tally, std::string("q-") + kAxisLabel[p]);
        if (with_cross) {
            note(tally, std::string("re") + kAxisLabel[p]);
        }
    }
    if (mode == EvalMode::Exact) {
        q.q_plus_0 = bare_expectation(ctx.unit_term, ctx.psi);
        const Statevector omega = ctx.omega();
        Vec3 cross = Vec3::Zero();
        for (int p = 0; p < 3; ++p) {
            Statevector sp = ctx.phi_prime;
            sp.apply_matrix(ctx.slot.rotation_qubit, pauli(p));
            const cdouble z = inner_product(omega, sp);
            const double flipped = ctx.propagate_expectation(sp);
            q.q_plus[p] = (q.q_plus_0 + flipped) / 2 + z.imag();
            q.q_minus[p] = (q.q_plus_0 + flipped) / 2 - z.imag();
            cross[p] = z.real();
        }
        if (with_cross) {
            q.re_cross = cross;
        }
        return q;
    }
    q.q_plus_0 = bare_expectation(ctx.unit_term, ctx.psi);
    Vec3 cross = Vec3::Zero();
    for (int p = 0; p < 3; ++p) {
        q.q_plus[p] = ctx.circuit_expectation(rotation_matrix(kPi / 2, unit(p)));
        q.q_minus[p] = ctx.circuit_expectation(rotation_matrix(-kPi / 2, unit(p)));
        if (with_cross) {
            cross[p] = ctx.circuit_cross(pauli(p));
        }
    }
    if (with_cross) {
        q.re_cross = cross;
    }
    return q;
}

AxisQSet eval_axis_qset(const Ansatz &ansatz, size_t d, const PauliTerm &term, EvalMode mode, bool with_cross,
                        MeasurementTally *tally) {
    SingleContext ctx(ansatz, d, term, "eval_axis_qset");
    const Vec3 n = ansatz.param(d).axis;
    AxisQSet q;
    note(tally, "q0");
    note(tally, "q+n");
    note(tally, "q-n");
    if (with_cross) {
        note(tally, "re-n");
    }
    const Mat2 ns = n.x() * gates::pauli_x() + n.y() * gates::pauli_y() + n.z() * gates::pauli_z();
    q.q_plus_0 = bare_expectation(ctx.unit_term, ctx.psi);
    if (mode == EvalMode::Exact) {
        Statevector sp = ctx.phi_prime;
        sp.apply_matrix(ctx.slot.rotation_qubit, ns);
        const cdouble z = inner_product(ctx.omega(), sp);
        const double flipped = ctx.propagate_expectation(sp);
        q.q_plus = (q.q_plus_0 + flipped) / 2 + z.imag();
        q.q_minus = (q.q_plus_0 + flipped) / 2 - z.imag();
        if (with_cross) {
            q.re_cross = z.real();
        }
        return q;
    }
    q.q_plus = ctx.circuit_expectation(rotation_matrix(kPi / 2, n));
    q.q_minus = ctx.circuit_expectation(rotation_matrix(-kPi / 2, n));
    if (with_cross) {
        q.re_cross = ctx.circuit_cross(ns);
    }
    return q;
}

Mat3 eval_fraxis_matrix(const Ansatz &ansatz, size_t d, const PauliTerm &term, EvalMode mode,
                        MeasurementTally *tally) {
    const Slot &slot = single_slot(ansatz, d, "eval_fraxis_matrix");
    if (term.qubit_count() != ansatz.qubit_count()) {
        throw SizeError("eval_fraxis_matrix: term and ansatz qubit counts differ");
    }
    const PauliTerm unit_term = term.unit();
    const size_t end = ansatz.ops().size();
    static const char *kKeys[6] = {"fx:x", "fx:y", "fx:z", "fx:xy", "fx:xz", "fx:yz"};
    for (const char *k : kKeys) {
        note(tally, k);
    }
    Statevector phi1(ansatz.qubit_count());
    ansatz.apply(phi1, 0, slot.first_op);
    Mat3 m = Mat3::Zero();
    if (mode == EvalMode::Exact) {
        std::vector<Statevector> chi;
        for (int p = 0; p < 3; ++p) {
            Statevector s = phi1;
            s.apply_matrix(slot.rotation_qubit, pauli(p));
            ansatz.apply(s, slot.first_op + 1, end);
            chi.push_back(std::move(s));
        }
        for (int p = 0; p < 3; ++p) {
            for (int q = p; q < 3; ++q) {
                m(p, q) = m(q, p) = pauli_matrix_element(unit_term, chi[p], chi[q]).real();
            }
        }
        return m;
    }
    auto measure = [&](const Vec3 &e) {
        Statevector s = phi1;
        s.apply_single_qubit(slot.rotation_qubit, rotation_matrix(kPi, e.normalized()));
        ansatz.apply(s, slot.first_op + 1, end);
        return bare_expectation(unit_term, s);
    };
    for (int p = 0; p < 3; ++p) {
        m(p, p) = measure(unit(p));
    }
    for (int p = 0; p < 3; ++p) {
        for (int q = p + 1; q < 3; ++q) {
            const double e = measure(unit(p) + unit(q));
            m(p, q) = m(q, p) = e - (m(p, p) + m(q, q)) / 2;
        }
    }
    return m;
}

double generator(const QSet &q, const AlphaBeta &ab) {
    return std::cos(ab.alpha / 2) * q.q_plus_0 + std::sin(ab.alpha / 2) * ab.beta.dot(q.q_plus - q.q_minus) / 2;
}

double assemble_g(int mu, const GateParam &prev, const QSet &q, double coefficient, double step, TimeKind kind) {
    const PropagatorWeights w = propagator_weights(coefficient, step, kind);
    const AlphaBeta ab = alpha_beta(mu, prev);
    const double first = first_term(mu, prev);
    if (kind == TimeKind::Imaginary) {
        return w.a * first + w.b.real() * generator(q, ab);
    }
    if (!q.re_cross) {
        throw ArgumentError("assemble_g: the real-time kind needs the cross terms of the Q set");
    }
    return w.a * first + w.b.imag() * std::sin(ab.alpha / 2) * ab.beta.dot(*q.re_cross);
}

GVector assemble_gvector(const GateParam &prev, const QSet &q, double coefficient, double step, TimeKind kind) {
    GVector gv;
    gv.g0 = assemble_g(0, prev, q, coefficient, step, kind);
    for (int p = 0; p < 3; ++p) {
        gv.g[p] = assemble_g(p + 1, prev, q, coefficient, step, kind);
    }
    return gv;
}

std::pair<double, double> assemble_axis_g(const GateParam &prev, const AxisQSet &q, double coefficient,
                                          double step, TimeKind kind) {
    const PropagatorWeights w = propagator_weights(coefficient, step, kind);
    const double half = prev.theta / 2;
    // Rotations R_n'(-theta') and R_n'(pi - theta') about the current axis.
    const double a0 = -prev.theta;
    const double ad = kPi - prev.theta;
    const double first0 = std::cos(half);
    const double firstd = std::sin(half);
    if (kind == TimeKind::Imaginary) {
        auto gen = [&](double a) {
            return std::cos(a / 2) * q.q_plus_0 + std::sin(a / 2) * (q.q_plus - q.q_minus) / 2;
        };
        return {w.a * first0 + w.b.real() * gen(a0), w.a * firstd + w.b.real() * gen(ad)};
    }
    if (!q.re_cross) {
        throw ArgumentError("assemble_axis_g: the real-time kind needs the cross term");
    }
    const double s = w.b.imag();
    return {w.a * first0 + s * std::sin(a0 / 2) * *q.re_cross, w.a * firstd + s * std::sin(ad / 2) * *q.re_cross};
}

Vec3 assemble_fraxis_g(const GateParam &prev, const Mat3 &m, double coefficient, double step) {
    if (std::abs(prev.theta - kPi) > 1e-12) {
        throw ContractViolation("assemble_fraxis_g: fraxis gates need theta = pi");
    }
    const PropagatorWeights w = propagator_weights(coefficient, step, TimeKind::Imaginary);
    return w.a * prev.axis + w.b.real() * (m.transpose() * prev.axis);
}

namespace {

struct PairedContext {
    const Ansatz &ansatz;
    const Slot &slot;
    PauliTerm term;
    double step;
    TimeKind kind;
    Statevector w0;
    Statevector u;

    PairedContext(const Ansatz &a, size_t d, const PauliTerm &t, double step, TimeKind kind, const char *what)
        : ansatz(a), slot(paired_slot(a, d, what)), term(t), step(step), kind(kind), w0(a.qubit_count()),
          u(a.qubit_count()) {
        if (t.qubit_count() != a.qubit_count()) {
            throw SizeError(std::string(what) + ": term and ansatz qubit counts differ");
        }
        a.apply(w0, 0, slot.first_op);
        Statevector psi = w0;
        a.apply(psi, slot.first_op, a.ops().size());
        u = propagated_target(psi, t, step, kind);
        apply_segment_adjoint(u, a.segment(slot.second_op + 1, a.ops().size()));
    }

    double exact(const Mat2 &x1, const Mat2 &x2) const {
        Statevector x = w0;
        x.apply_matrix(slot.rotation_qubit, x1);
        ansatz.apply(x, slot.first_op, slot.second_op + 1);
        x.apply_matrix(slot.rotation_qubit, x2);
        return inner_product(u, x).real();
    }

    double circuit(const Mat2 &x1, const Mat2 &x2) const {
        const size_t end = ansatz.ops().size();
        const Segment s0 = ansatz.segment(0, slot.first_op);
        const Segment s1 = ansatz.segment(slot.first_op, slot.second_op + 1);
        const Segment s2 = ansatz.segment(slot.second_op + 1, end);
        const Insertion i1{slot.rotation_qubit, x1};
        const Insertion i2{slot.rotation_qubit, x2};
        const PropagatorWeights w = propagator_weights(term.coefficient, step, kind);
        auto re = simulate_hadamard_test(s0, s1, s2, i1, i2, term, Quadrature::Real);
        if (kind == TimeKind::Imaginary) {
            return w.a * re.z_identity + w.b.real() * re.z_observable;
        }
        auto im = simulate_hadamard_test(s0, s1, s2, i1, i2, term, Quadrature::Imag);
        return w.a * re.z_identity - w.b.imag() * im.z_observable;
    }

    double eval(EvalMode mode, const Mat2 &x1, const Mat2 &x2) const {
        return mode == EvalMode::Exact ? exact(x1, x2) : circuit(x1, x2);
    }
};

void note_overlap(MeasurementTally *tally, const std::string &key, TimeKind kind) {
    note(tally, key);
    if (kind == TimeKind::Real) {
        note(tally, key + ":im");
    }
}

}  // namespace

double eval_overlap(const Ansatz &ansatz, size_t d, const PauliTerm &term, double step, TimeKind kind,
                    EvalMode mode, const Mat2 &x1, const Mat2 &x2) {
    PairedContext ctx(ansatz, d, term, step, kind, "eval_overlap");
    return ctx.eval(mode, x1, x2);
}

Mat3 eval_gmatrix_entries(const Ansatz &ansatz, size_t d, const PauliTerm &term, double step, TimeKind kind,
                          EvalMode mode, const std::vector<std::pair<int, int>> &entries, MeasurementTally *tally) {
    PairedContext ctx(ansatz, d, term, step, kind, "eval_gmatrix");
    const GateParam &prev = ansatz.param(d);
    Mat3 g = Mat3::Zero();
    for (auto [p, q] : entries) {
        if (p < 0 || p > 2 || q < 0 || q > 2) {
            throw IndexError("G entry index out of range");
        }
        const AlphaBeta ab1 = alpha_beta(p + 1, prev);
        const AlphaBeta ab2 = alpha_beta(q + 1, prev);
        note_overlap(tally, std::string("G:") + kAxisLabel[p] + kAxisLabel[q], kind);
        g(p, q) = ctx.eval(mode, rotation_matrix(-ab1.alpha, ab1.beta), rotation_matrix(ab2.alpha, ab2.beta));
    }
    return g;
}

GMatrix eval_gmatrix(const Ansatz &ansatz, size_t d, const PauliTerm &term, double step, TimeKind kind,
                     EvalMode mode, bool all_nine, MeasurementTally *tally) {
    const Slot &slot = paired_slot(ansatz, d, "eval_gmatrix");
    auto *c = std::get_if<TwoQubitComposite>(&slot.kind);
    if (!c) {
        throw KindError("eval_gmatrix: slot " + std::to_string(d) + " is not a two-qubit composite");
    }
    const bool antisym = !all_nine && c->family == CompositeFamily::ExcitationConserving;
    std::vector<std::pair<int, int>> entries;
    for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
            if (!(antisym && p == 1 && q == 0)) {
                entries.emplace_back(p, q);
            }
        }
    }
    Mat3 g = eval_gmatrix_entries(ansatz, d, term, step, kind, mode, entries, tally);
    if (antisym) {
        g(1, 0) = -g(0, 1);
    }
    return GMatrix::from_g(g);
}

HVector eval_hvector(const Ansatz &ansatz, size_t d, const PauliTerm &term, double step, TimeKind kind,
                     EvalMode mode, MeasurementTally *tally) {
    PairedContext ctx(ansatz, d, term, step, kind, "eval_hvector");
    const GateParam &prev = ansatz.param(d);
    const Vec3 &n = prev.axis;
    const double t = prev.theta;
    auto r = [&](double a) {
        return rotation_matrix(a, n);
    };
    HVector h;
    note_overlap(tally, "h0", kind);
    note_overlap(tally, "h1", kind);
    note_overlap(tally, "h2", kind);
    note_overlap(tally, "h3", kind);
    h.h0 = ctx.eval(mode, r(t), r(-t));
    h.h1 = ctx.eval(mode, r(t), r(kPi - t));
    h.h2 = -ctx.eval(mode, r(t + kPi), r(-t));
    h.h3 = -ctx.eval(mode, r(t + kPi), r(kPi - t));
    return h;
}

}  // namespace fqs
