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

#include "fqs/statevector.h"

#include <bit>
#include <cmath>
#include <string>

namespace fqs {

namespace {

constexpr size_t kMaxQubits = 30;

}  // namespace

Statevector::Statevector(size_t qubit_count) : qubits_(qubit_count) {
    if (qubit_count == 0 || qubit_count > kMaxQubits) {
        throw ArgumentError("qubit count must be in [1, 30], got " + std::to_string(qubit_count));
    }
    amps_.assign(size_t{1} << qubit_count, cdouble{0, 0});
    amps_[0] = 1;
}

Statevector::Statevector(size_t qubit_count, std::vector<cdouble> amplitudes)
    : qubits_(qubit_count), amps_(std::move(amplitudes)) {
}

Statevector Statevector::basis_state(size_t qubit_count, size_t index) {
    Statevector s(qubit_count);
    if (index >= s.dimension()) {
        throw IndexError("basis index " + std::to_string(index) + " out of range");
    }
    s.amps_[0] = 0;
    s.amps_[index] = 1;
    return s;
}

Statevector Statevector::from_amplitudes(std::vector<cdouble> amplitudes) {
    size_t n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw SizeError("amplitude count must be a power of two >= 2, got " + std::to_string(n));
    }
    return Statevector(static_cast<size_t>(std::countr_zero(n)), std::move(amplitudes));
}

double Statevector::norm() const {
    double acc = 0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

bool Statevector::is_normalized(double tolerance) const {
    return std::abs(norm() - 1.0) < tolerance;
}

void Statevector::normalize() {
    double n = norm();
    if (n == 0) {
        throw ContractViolation("cannot normalize the zero vector");
    }
    for (auto &a : amps_) {
        a /= n;
    }
}

void Statevector::require_normalized(const char *context) const {
    double n = norm();
    if (std::abs(n - 1.0) >= 1e-10) {
        throw ContractViolation(std::string(context) + ": state is not normalized (norm " + std::to_string(n) + ")");
    }
}

void Statevector::check_qubit(size_t qubit) const {
    if (qubit >= qubits_) {
        throw IndexError("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(qubits_) + " qubits");
    }
}

void Statevector::apply_single_qubit(size_t qubit, const Mat2 &u) {
    if (!is_unitary(u)) {
        throw ContractViolation("apply_single_qubit: matrix is not unitary");
    }
    apply_matrix(qubit, u);
}

void Statevector::apply_matrix(size_t qubit, const Mat2 &m) {
    check_qubit(qubit);
    const size_t mask = qubit_mask(qubits_, qubit);
    const cdouble m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    const size_t n = amps_.size();
    // Walk blocks of 2*mask; inside each block the lower half has the bit clear.
    for (size_t base = 0; base < n; base += 2 * mask) {
        for (size_t i = base; i < base + mask; ++i) {
            cdouble a0 = amps_[i];
            cdouble a1 = amps_[i + mask];
            amps_[i] = m00 * a0 + m01 * a1;
            amps_[i + mask] = m10 * a0 + m11 * a1;
        }
    }
}

void Statevector::apply_controlled(size_t control, size_t target, const Mat2 &u) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw ArgumentError("apply_controlled: control and target must differ");
    }
    const size_t cmask = qubit_mask(qubits_, control);
    const size_t tmask = qubit_mask(qubits_, target);
    const cdouble m00 = u(0, 0), m01 = u(0, 1), m10 = u(1, 0), m11 = u(1, 1);
    for (size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cmask) && !(i & tmask)) {
            cdouble a0 = amps_[i];
            cdouble a1 = amps_[i | tmask];
            amps_[i] = m00 * a0 + m01 * a1;
            amps_[i | tmask] = m10 * a0 + m11 * a1;
        }
    }
}

void Statevector::scale(cdouble factor) {
    for (auto &a : amps_) {
        a *= factor;
    }
}

void Statevector::add_scaled(cdouble factor, const Statevector &other) {
    if (other.amps_.size() != amps_.size()) {
        throw SizeError("add_scaled: dimension mismatch");
    }
    for (size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] += factor * other.amps_[i];
    }
}

cdouble inner_product(const Statevector &bra, const Statevector &ket) {
    if (bra.dimension() != ket.dimension()) {
        throw SizeError(
            "inner_product: " + std::to_string(bra.qubit_count()) + " vs " + std::to_string(ket.qubit_count()) +
            " qubits");
    }
    auto a = bra.amplitudes();
    auto b = ket.amplitudes();
    cdouble acc{0, 0};
    for (size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

bool is_unitary(const Mat2 &u, double tolerance) {
    return (u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff() < tolerance;
}

void apply_segment(Statevector &state, const Segment &segment) {
    for (const auto &op : segment) {
        if (op.type == GateOp::Type::Single) {
            state.apply_matrix(op.target, op.matrix);
        } else {
            state.apply_controlled(op.control, op.target, op.matrix);
        }
    }
}

void apply_segment_adjoint(Statevector &state, const Segment &segment) {
    for (auto it = segment.rbegin(); it != segment.rend(); ++it) {
        Mat2 m = it->matrix.adjoint();
        if (it->type == GateOp::Type::Single) {
            state.apply_matrix(it->target, m);
        } else {
            state.apply_controlled(it->control, it->target, m);
        }
    }
}

namespace gates {

Mat2 pauli_x() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}

Mat2 pauli_y() {
    Mat2 m;
    m << 0, cdouble(0, -1), cdouble(0, 1), 0;
    return m;
}

Mat2 pauli_z() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}

Mat2 hadamard() {
    Mat2 m;
    const double r = 1 / std::sqrt(2.0);
    m << r, r, r, -r;
    return m;
}

}  // namespace gates

}  // namespace fqs
