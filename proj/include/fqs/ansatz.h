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

#include <array>
#include <string_view>
#include <vector>

#include "fqs/gates.h"
#include "fqs/statevector.h"

namespace fqs {

enum class OpKind { X, Z, CNOT, CZ, Rot, RotDagger };

struct CircuitOp {
    OpKind kind = OpKind::X;
    size_t control = 0;
    size_t target = 0;
    size_t slot = 0;  // Rot / RotDagger only
};

struct Slot {
    GateKind kind;
    std::vector<size_t> qubits;  // (q) or the ordered pair (first, second)
    size_t rotation_qubit = 0;
    // Position of R, or of R^dag and R for paired kinds.
    size_t first_op = 0;
    size_t second_op = 0;
    // Ops [block_begin, block_end) realize the whole gate.
    size_t block_begin = 0;
    size_t block_end = 0;
};

struct SplitView {
    Segment v1;
    Segment gate;
    Segment v2;
    size_t slot = 0;
};

/// Ordered circuit of fixed gates and parameterized slots. Slots are numbered
/// from 0 in the order they are added.
class Ansatz {
   public:
    explicit Ansatz(size_t qubit_count);

    void add_x(size_t q);
    void add_z(size_t q);
    void add_cnot(size_t control, size_t target);
    void add_cz(size_t a, size_t b);

    /// Single-qubit slot (General1Q, FixedAxis1Q or Fraxis1Q).
    size_t add_gate(const GateKind &kind, size_t qubit, const GateParam &p);
    size_t add_composite(CompositeFamily family, size_t first, size_t second, const GateParam &p);
    /// Emits R^dag for a new tied slot; the matching R comes from close_tied.
    size_t open_tied(const Vec3 &axis, size_t qubit, const GateParam &p);
    void close_tied(size_t slot);

    size_t qubit_count() const {
        return qubits_;
    }
    size_t slot_count() const {
        return slots_.size();
    }
    const std::vector<CircuitOp> &ops() const {
        return ops_;
    }
    const Slot &slot(size_t d) const;
    const GateParam &param(size_t d) const;
    void set_param(size_t d, const GateParam &p);
    const std::vector<GateParam> &params() const {
        return params_;
    }
    void set_params(const std::vector<GateParam> &ps);

    GateOp bind(const CircuitOp &op) const;
    /// Bound ops in [begin, end).
    Segment segment(size_t begin, size_t end) const;
    Statevector state() const;
    void apply(Statevector &s, size_t begin, size_t end) const;

    /// V1 / slot gate / V2 around slot d.
    SplitView split_at(size_t d) const;

   private:
    friend Ansatz expand_zyz(const Ansatz &a);
    friend Ansatz decompose_excitation(const Ansatz &a);

    void check_qubit(size_t q) const;
    size_t new_slot(const GateKind &kind, std::vector<size_t> qubits, size_t rotation_qubit, const GateParam &p);

    size_t qubits_;
    std::vector<CircuitOp> ops_;
    std::vector<Slot> slots_;
    std::vector<GateParam> params_;
    std::vector<bool> open_;
};

/// Layers of one `kind` gate per qubit, each followed by a CZ ladder
/// (0,1), (1,2), ..., then a final gate layer: qubits * (layers + 1) slots.
Ansatz hardware_efficient(size_t qubits, size_t layers, const GateKind &kind);

/// X on qubits 0 and 2, then N(0,1), N(2,3), N(1,2), N(0,1), N(2,3).
Ansatz excitation_ansatz(CompositeFamily family);
/// The same circuit with each N(psi, phi) written as
/// CX(2->1) Rz^dag(phi) Ry^dag(psi + 3pi/2) CX(1->2) Ry(psi + 3pi/2) Rz(phi) CX(2->1).
Ansatz decomposed_excitation_ansatz();

/// Rz(lambda), Ry(psi), Rz(phi) in circuit order with product equal to R_n(theta).
std::array<GateParam, 3> zyz_decompose(const GateParam &p);
/// Replaces every General1Q slot by three fixed-axis slots (z, y, z).
Ansatz expand_zyz(const Ansatz &a);
/// Replaces every excitation-conserving slot by its tied Rz/Ry decomposition.
Ansatz decompose_excitation(const Ansatz &a);

/// fig3-general, fig3-ry, fig3-fraxis, fig3-rzryrz, fig7-excitation,
/// fig7-decomposed, fig7-swap, fig7-hop, fig7-rbs.
Ansatz make_preset(std::string_view name, size_t layers = 2, size_t qubits = 5);
const std::vector<std::string_view> &preset_names();

}  // namespace fqs
