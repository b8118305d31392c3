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

#include <span>
#include <vector>

#include "fqs/types.h"

namespace fqs {

/// Bit mask selecting `qubit` inside a basis-state index. Qubit 0 is the most
/// significant bit.
inline size_t qubit_mask(size_t qubit_count, size_t qubit) {
    return size_t{1} << (qubit_count - 1 - qubit);
}

/// Dense amplitude vector over 2^m computational basis states.
///
/// Gates are applied in place. A default-constructed vector is |0...0>.
class Statevector {
   public:
    explicit Statevector(size_t qubit_count);

    static Statevector basis_state(size_t qubit_count, size_t index);
    /// Length of `amplitudes` must be a power of two (at least 2).
    static Statevector from_amplitudes(std::vector<cdouble> amplitudes);

    size_t qubit_count() const {
        return qubits_;
    }
    size_t dimension() const {
        return amps_.size();
    }
    std::span<const cdouble> amplitudes() const {
        return amps_;
    }
    std::span<cdouble> amplitudes() {
        return amps_;
    }
    const cdouble &operator[](size_t i) const {
        return amps_[i];
    }
    cdouble &operator[](size_t i) {
        return amps_[i];
    }

    double norm() const;
    bool is_normalized(double tolerance = 1e-10) const;
    void normalize();
    /// Throws ContractViolation naming `context` when the norm is off by more than 1e-10.
    void require_normalized(const char *context) const;

    /// Applies a 2x2 unitary to one qubit. Throws ContractViolation if `u`
    /// deviates from unitarity by more than 1e-10.
    void apply_single_qubit(size_t qubit, const Mat2 &u);
    /// Applies `u` to `target` on the subspace where `control` is 1.
    void apply_controlled(size_t control, size_t target, const Mat2 &u);
    /// Same contraction as apply_single_qubit without the unitarity check.
    void apply_matrix(size_t qubit, const Mat2 &m);

    void scale(cdouble factor);
    /// this += factor * other
    void add_scaled(cdouble factor, const Statevector &other);

    bool operator==(const Statevector &) const = default;

   private:
    Statevector(size_t qubit_count, std::vector<cdouble> amplitudes);
    void check_qubit(size_t qubit) const;

    size_t qubits_;
    std::vector<cdouble> amps_;
};

/// <bra|ket>
cdouble inner_product(const Statevector &bra, const Statevector &ket);

bool is_unitary(const Mat2 &u, double tolerance = 1e-10);

/// One bound gate of a circuit segment.
struct GateOp {
    enum class Type { Single, Controlled };
    Type type = Type::Single;
    size_t control = 0;  // meaningful only for Controlled
    size_t target = 0;
    Mat2 matrix = Mat2::Identity();

    static GateOp single(size_t target, const Mat2 &u) {
        return {Type::Single, 0, target, u};
    }
    static GateOp controlled(size_t control, size_t target, const Mat2 &u) {
        return {Type::Controlled, control, target, u};
    }
    GateOp adjoint() const {
        return {type, control, target, matrix.adjoint()};
    }
    size_t max_qubit() const {
        return type == Type::Single ? target : std::max(control, target);
    }
};

/// A fixed-parameter circuit fragment, gates listed in time order.
using Segment = std::vector<GateOp>;

void apply_segment(Statevector &state, const Segment &segment);
/// Applies the inverse of `segment` (reverse order, adjoint gates).
void apply_segment_adjoint(Statevector &state, const Segment &segment);

namespace gates {
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 hadamard();
}  // namespace gates

}  // namespace fqs
