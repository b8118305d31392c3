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
#include <string>
#include <string_view>
#include <vector>

#include "fqs/statevector.h"
#include "fqs/types.h"

namespace fqs {

inline constexpr size_t kDefaultOracleCap = 12;

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
/// Accepts I, X, Y, Z (upper case only).
Pauli pauli_from_char(char c);

/// Weighted tensor product of Pauli operators, h * O. Label position 0 is qubit 0.
struct PauliTerm {
    double coefficient = 1.0;
    std::vector<Pauli> axes;

    PauliTerm() = default;
    PauliTerm(double coefficient, std::vector<Pauli> axes);
    static PauliTerm from_string(double coefficient, std::string_view labels);

    size_t qubit_count() const {
        return axes.size();
    }
    std::string label() const;
    /// The same string with coefficient 1.
    PauliTerm unit() const {
        return PauliTerm(1.0, axes);
    }

    /// Positions flipped by the operator (X or Y).
    size_t x_mask() const;
    /// Positions picking up a sign from the bit value (Y or Z).
    size_t z_mask() const;
    size_t y_count() const;

    bool operator==(const PauliTerm &) const = default;
};

/// Ordered sum of Pauli terms on a fixed number of qubits. The term order is
/// the Trotter product order.
class Hamiltonian {
   public:
    explicit Hamiltonian(size_t qubit_count);
    explicit Hamiltonian(std::vector<PauliTerm> terms);

    void add_term(PauliTerm term);

    size_t qubit_count() const {
        return qubits_;
    }
    const std::vector<PauliTerm> &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }

    /// J * sum_{(i,j)} (XX + YY + ZZ) + h * sum_i Z_i. Terms are grouped per
    /// edge as XX, YY, ZZ over edges (0,1), (1,2), ..., then (n-1, 0) when
    /// periodic, followed by the Z fields in qubit order.
    static Hamiltonian heisenberg_1d(size_t sites, double coupling = 1, double field = 1, bool periodic = true);

    bool operator==(const Hamiltonian &) const = default;

   private:
    size_t qubits_;
    std::vector<PauliTerm> terms_;
};

/// coefficient * O |state>.
Statevector apply_pauli_string(const PauliTerm &term, const Statevector &state);
/// O |state> in place, ignoring the coefficient.
void apply_pauli_unit(const PauliTerm &term, Statevector &state);

/// coefficient * <state|O|state>. The state must be normalized.
double expectation(const PauliTerm &term, const Statevector &state);
/// <bra| O |ket> without the coefficient and without normalization checks.
cdouble pauli_matrix_element(const PauliTerm &term, const Statevector &bra, const Statevector &ket);

/// H |state>.
Statevector apply_hamiltonian(const Hamiltonian &h, const Statevector &state);
/// <state|H|state> for a normalized state.
double energy(const Hamiltonian &h, const Statevector &state);

/// Dense 2^m x 2^m matrix of the Hamiltonian. Throws ResourceError when m > qubit_cap.
Eigen::MatrixXcd dense_matrix(const Hamiltonian &h, size_t qubit_cap = kDefaultOracleCap);
Eigen::MatrixXcd dense_matrix(const PauliTerm &term, size_t qubit_cap = kDefaultOracleCap);

/// Parses the line-oriented Hamiltonian text format:
///
///     # comment
///     <coefficient> <pauli-string>
///
/// Throws ParseError carrying the offending line number.
Hamiltonian parse_hamiltonian_text(std::string_view text);
/// Inverse of parse_hamiltonian_text; coefficients are written with round-trip precision.
std::string format_hamiltonian_text(const Hamiltonian &h);

}  // namespace fqs
