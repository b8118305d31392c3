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

#include "fqs/ansatz.h"

#include <cmath>
#include <string>

namespace fqs {

namespace {

const Vec3 kAxisY(0, 1, 0);
const Vec3 kAxisZ(0, 0, 1);

GateParam default_param(const GateKind &kind) {
    GateParam p;
    if (auto *f = std::get_if<FixedAxis1Q>(&kind)) {
        p.axis = f->axis;
    } else if (auto *t = std::get_if<TiedFixedAxis>(&kind)) {
        p.axis = t->axis;
    } else if (std::holds_alternative<Fraxis1Q>(kind)) {
        p.theta = kPi;
    } else if (auto *c = std::get_if<TwoQubitComposite>(&kind)) {
        if (c->family != CompositeFamily::Swap) {
            p.theta = kPi;
        }
    }
    return p;
}

}  // namespace

Ansatz::Ansatz(size_t qubit_count) : qubits_(qubit_count) {
    if (qubit_count == 0) {
        throw ArgumentError("ansatz needs at least one qubit");
    }
}

void Ansatz::check_qubit(size_t q) const {
    if (q >= qubits_) {
        throw IndexError("qubit " + std::to_string(q) + " out of range for " + std::to_string(qubits_) + " qubits");
    }
}

void Ansatz::add_x(size_t q) {
    check_qubit(q);
    ops_.push_back({OpKind::X, 0, q, 0});
}

void Ansatz::add_z(size_t q) {
    check_qubit(q);
    ops_.push_back({OpKind::Z, 0, q, 0});
}

void Ansatz::add_cnot(size_t control, size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw ArgumentError("CNOT control and target must differ");
    }
    ops_.push_back({OpKind::CNOT, control, target, 0});
}

void Ansatz::add_cz(size_t a, size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw ArgumentError("CZ qubits must differ");
    }
    ops_.push_back({OpKind::CZ, a, b, 0});
}

size_t Ansatz::new_slot(const GateKind &kind, std::vector<size_t> qubits, size_t rotation_qubit,
                        const GateParam &p) {
    check_param(kind, p);
    Slot s;
    s.kind = kind;
    s.qubits = std::move(qubits);
    s.rotation_qubit = rotation_qubit;
    s.block_begin = ops_.size();
    slots_.push_back(std::move(s));
    params_.push_back(p);
    open_.push_back(false);
    return slots_.size() - 1;
}

size_t Ansatz::add_gate(const GateKind &kind, size_t qubit, const GateParam &p) {
    check_qubit(qubit);
    if (is_paired(kind)) {
        throw KindError("add_gate takes single-qubit kinds, got " + kind_name(kind));
    }
    size_t d = new_slot(kind, {qubit}, qubit, p);
    Slot &s = slots_[d];
    s.first_op = s.second_op = ops_.size();
    ops_.push_back({OpKind::Rot, 0, qubit, d});
    s.block_end = ops_.size();
    return d;
}

size_t Ansatz::add_composite(CompositeFamily family, size_t first, size_t second, const GateParam &p) {
    check_qubit(first);
    check_qubit(second);
    if (first == second) {
        throw ArgumentError("composite gate needs two distinct qubits");
    }
    size_t d = new_slot(TwoQubitComposite{family}, {first, second}, second, p);
    auto rot = [&](OpKind k) {
        size_t pos = ops_.size();
        ops_.push_back({k, 0, second, d});
        return pos;
    };
    // Circuit order C, R^dag, B, R, A.
    switch (family) {
        case CompositeFamily::ExcitationConserving:
            add_cnot(second, first);
            slots_[d].first_op = rot(OpKind::RotDagger);
            add_cz(first, second);
            slots_[d].second_op = rot(OpKind::Rot);
            add_cnot(second, first);
            break;
        case CompositeFamily::Swap:
            add_cnot(second, first);
            slots_[d].first_op = rot(OpKind::RotDagger);
            add_cnot(first, second);
            slots_[d].second_op = rot(OpKind::Rot);
            add_cnot(second, first);
            break;
        case CompositeFamily::Hop:
            add_cnot(second, first);
            slots_[d].first_op = rot(OpKind::RotDagger);
            add_cz(first, second);
            slots_[d].second_op = rot(OpKind::Rot);
            add_cnot(second, first);
            add_z(second);
            break;
        case CompositeFamily::Rbs:
            add_cz(first, second);
            add_z(second);
            add_cnot(second, first);
            slots_[d].first_op = rot(OpKind::RotDagger);
            add_cz(first, second);
            slots_[d].second_op = rot(OpKind::Rot);
            add_cnot(second, first);
            break;
    }
    slots_[d].block_end = ops_.size();
    return d;
}

size_t Ansatz::open_tied(const Vec3 &axis, size_t qubit, const GateParam &p) {
    check_qubit(qubit);
    size_t d = new_slot(TiedFixedAxis{axis}, {qubit}, qubit, p);
    slots_[d].first_op = ops_.size();
    ops_.push_back({OpKind::RotDagger, 0, qubit, d});
    open_[d] = true;
    return d;
}

void Ansatz::close_tied(size_t d) {
    if (d >= slots_.size() || !open_[d]) {
        throw IndexError("close_tied: slot " + std::to_string(d) + " is not open");
    }
    slots_[d].second_op = ops_.size();
    ops_.push_back({OpKind::Rot, 0, slots_[d].rotation_qubit, d});
    slots_[d].block_end = ops_.size();
    open_[d] = false;
}

const Slot &Ansatz::slot(size_t d) const {
    if (d >= slots_.size()) {
        throw IndexError("slot " + std::to_string(d) + " out of range for " + std::to_string(slots_.size()) + " slots");
    }
    return slots_[d];
}

const GateParam &Ansatz::param(size_t d) const {
    slot(d);
    return params_[d];
}

void Ansatz::set_param(size_t d, const GateParam &p) {
    check_param(slot(d).kind, p);
    params_[d] = p;
}

void Ansatz::set_params(const std::vector<GateParam> &ps) {
    if (ps.size() != slots_.size()) {
        throw SizeError(
            "expected " + std::to_string(slots_.size()) + " parameters, got " + std::to_string(ps.size()));
    }
    for (size_t d = 0; d < ps.size(); ++d) {
        check_param(slots_[d].kind, ps[d]);
    }
    params_ = ps;
}

GateOp Ansatz::bind(const CircuitOp &op) const {
    switch (op.kind) {
        case OpKind::X:
            return GateOp::single(op.target, gates::pauli_x());
        case OpKind::Z:
            return GateOp::single(op.target, gates::pauli_z());
        case OpKind::CNOT:
            return GateOp::controlled(op.control, op.target, gates::pauli_x());
        case OpKind::CZ:
            return GateOp::controlled(op.control, op.target, gates::pauli_z());
        case OpKind::Rot:
            return GateOp::single(op.target, rotation_matrix(params_[op.slot]));
        case OpKind::RotDagger:
            return GateOp::single(op.target, rotation_matrix(params_[op.slot]).adjoint());
    }
    throw ArgumentError("unknown op kind");
}

Segment Ansatz::segment(size_t begin, size_t end) const {
    if (begin > end || end > ops_.size()) {
        throw IndexError("segment range out of bounds");
    }
    Segment out;
    out.reserve(end - begin);
    for (size_t i = begin; i < end; ++i) {
        out.push_back(bind(ops_[i]));
    }
    return out;
}

void Ansatz::apply(Statevector &s, size_t begin, size_t end) const {
    if (s.qubit_count() != qubits_) {
        throw SizeError("ansatz and state qubit counts differ");
    }
    if (begin > end || end > ops_.size()) {
        throw IndexError("segment range out of bounds");
    }
    for (size_t i = begin; i < end; ++i) {
        GateOp g = bind(ops_[i]);
        if (g.type == GateOp::Type::Single) {
            s.apply_matrix(g.target, g.matrix);
        } else {
            s.apply_controlled(g.control, g.target, g.matrix);
        }
    }
}

Statevector Ansatz::state() const {
    for (size_t d = 0; d < open_.size(); ++d) {
        if (open_[d]) {
            throw ArgumentError("tied slot " + std::to_string(d) + " was never closed");
        }
    }
    Statevector s(qubits_);
    apply(s, 0, ops_.size());
    return s;
}

SplitView Ansatz::split_at(size_t d) const {
    const Slot &s = slot(d);
    return {segment(0, s.block_begin), segment(s.block_begin, s.block_end), segment(s.block_end, ops_.size()), d};
}

Ansatz hardware_efficient(size_t qubits, size_t layers, const GateKind &kind) {
    if (is_paired(kind)) {
        throw KindError("hardware-efficient layers take single-qubit kinds");
    }
    Ansatz a(qubits);
    const GateParam p = default_param(kind);
    for (size_t layer = 0; layer <= layers; ++layer) {
        for (size_t q = 0; q < qubits; ++q) {
            a.add_gate(kind, q, p);
        }
        if (layer < layers) {
            for (size_t q = 0; q + 1 < qubits; ++q) {
                a.add_cz(q, q + 1);
            }
        }
    }
    return a;
}

namespace {

constexpr std::array<std::pair<size_t, size_t>, 5> kExcitationPairs = {{{0, 1}, {2, 3}, {1, 2}, {0, 1}, {2, 3}}};

void emit_decomposed(Ansatz &a, size_t first, size_t second, double psi, double phi) {
    a.add_cnot(second, first);
    size_t z = a.open_tied(kAxisZ, second, normalize_param_periodic({phi, kAxisZ}));
    size_t y = a.open_tied(kAxisY, second, normalize_param_periodic({psi + 1.5 * kPi, kAxisY}));
    a.add_cnot(first, second);
    a.close_tied(y);
    a.close_tied(z);
    a.add_cnot(second, first);
}

}  // namespace

Ansatz excitation_ansatz(CompositeFamily family) {
    Ansatz a(4);
    a.add_x(0);
    a.add_x(2);
    const GateParam p = default_param(TwoQubitComposite{family});
    for (auto [f, s] : kExcitationPairs) {
        a.add_composite(family, f, s, p);
    }
    return a;
}

Ansatz decomposed_excitation_ansatz() {
    return decompose_excitation(excitation_ansatz(CompositeFamily::ExcitationConserving));
}

std::array<GateParam, 3> zyz_decompose(const GateParam &p) {
    const Mat2 u = rotation_matrix(p);
    const cdouble a = u(0, 0);
    const cdouble c = u(1, 0);
    const double psi = 2 * std::atan2(std::abs(c), std::abs(a));
    const double sum = std::abs(a) > 0 ? -2 * std::arg(a) : 0.0;    // phi + lambda
    const double diff = std::abs(c) > 0 ? 2 * std::arg(c) : 0.0;    // phi - lambda
    const double phi = (sum + diff) / 2;
    const double lambda = (sum - diff) / 2;
    return {normalize_param({lambda, kAxisZ}), normalize_param({psi, kAxisY}), normalize_param({phi, kAxisZ})};
}

Ansatz expand_zyz(const Ansatz &src) {
    Ansatz out(src.qubit_count());
    std::vector<size_t> remap(src.slot_count(), 0);
    for (size_t i = 0; i < src.ops().size(); ++i) {
        const CircuitOp &op = src.ops()[i];
        if (op.kind != OpKind::Rot && op.kind != OpKind::RotDagger) {
            out.ops_.push_back(op);
            continue;
        }
        const Slot &s = src.slots_[op.slot];
        const GateParam &p = src.params_[op.slot];
        if (std::holds_alternative<General1Q>(s.kind)) {
            auto parts = zyz_decompose(p);
            out.add_gate(FixedAxis1Q{kAxisZ}, op.target, parts[0]);
            out.add_gate(FixedAxis1Q{kAxisY}, op.target, parts[1]);
            out.add_gate(FixedAxis1Q{kAxisZ}, op.target, parts[2]);
            continue;
        }
        if (!is_paired(s.kind)) {
            out.add_gate(s.kind, op.target, p);
            continue;
        }
        if (i == s.first_op) {
            remap[op.slot] = out.new_slot(s.kind, s.qubits, s.rotation_qubit, p);
            // Keep the block boundaries of composites, which start with fixed ops.
            out.slots_[remap[op.slot]].block_begin = out.ops_.size() - (s.first_op - s.block_begin);
            out.slots_[remap[op.slot]].first_op = out.ops_.size();
        } else {
            out.slots_[remap[op.slot]].second_op = out.ops_.size();
            out.slots_[remap[op.slot]].block_end = out.ops_.size() + 1 + (s.block_end - s.second_op - 1);
        }
        CircuitOp copy = op;
        copy.slot = remap[op.slot];
        out.ops_.push_back(copy);
    }
    return out;
}

Ansatz decompose_excitation(const Ansatz &src) {
    Ansatz out(src.qubit_count());
    size_t i = 0;
    std::vector<size_t> remap(src.slot_count(), 0);
    while (i < src.ops().size()) {
        const CircuitOp &op = src.ops()[i];
        // Find a slot whose block starts here.
        const Slot *block = nullptr;
        size_t block_slot = 0;
        for (size_t d = 0; d < src.slot_count(); ++d) {
            const Slot &s = src.slots_[d];
            auto *c = std::get_if<TwoQubitComposite>(&s.kind);
            if (c && c->family == CompositeFamily::ExcitationConserving && s.block_begin == i) {
                block = &s;
                block_slot = d;
                break;
            }
        }
        if (block) {
            auto [psi, phi] = angles_from_axis(src.params_[block_slot].axis);
            emit_decomposed(out, block->qubits[0], block->qubits[1], psi, phi);
            i = block->block_end;
            continue;
        }
        if (op.kind == OpKind::Rot || op.kind == OpKind::RotDagger) {
            const Slot &s = src.slots_[op.slot];
            if (is_paired(s.kind)) {
                throw KindError("decompose_excitation: only excitation-conserving composites can be paired");
            }
            out.add_gate(s.kind, op.target, src.params_[op.slot]);
        } else {
            out.ops_.push_back(op);
        }
        ++i;
    }
    return out;
}

const std::vector<std::string_view> &preset_names() {
    static const std::vector<std::string_view> names = {
        "fig3-general", "fig3-ry",  "fig3-fraxis", "fig3-rzryrz", "fig7-excitation",
        "fig7-decomposed", "fig7-swap", "fig7-hop", "fig7-rbs"};
    return names;
}

Ansatz make_preset(std::string_view name, size_t layers, size_t qubits) {
    if (name == "fig3-general") {
        return hardware_efficient(qubits, layers, General1Q{});
    }
    if (name == "fig3-ry") {
        return hardware_efficient(qubits, layers, FixedAxis1Q{kAxisY});
    }
    if (name == "fig3-fraxis") {
        return hardware_efficient(qubits, layers, Fraxis1Q{});
    }
    if (name == "fig3-rzryrz") {
        return expand_zyz(hardware_efficient(qubits, layers, General1Q{}));
    }
    if (name == "fig7-excitation") {
        return excitation_ansatz(CompositeFamily::ExcitationConserving);
    }
    if (name == "fig7-decomposed") {
        return decomposed_excitation_ansatz();
    }
    if (name == "fig7-swap") {
        return excitation_ansatz(CompositeFamily::Swap);
    }
    if (name == "fig7-hop") {
        return excitation_ansatz(CompositeFamily::Hop);
    }
    if (name == "fig7-rbs") {
        return excitation_ansatz(CompositeFamily::Rbs);
    }
    throw ArgumentError("unknown ansatz preset '" + std::string(name) + "'");
}

}  // namespace fqs
