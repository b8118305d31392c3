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

#include "fqs/pauli.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>

namespace fqs {

char pauli_char(Pauli p) {
    return "IXYZ"[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw ArgumentError(std::string("not a Pauli label: '") + c + "'");
    }
}

PauliTerm::PauliTerm(double coefficient, std::vector<Pauli> axes) : coefficient(coefficient), axes(std::move(axes)) {
    if (!std::isfinite(coefficient)) {
        throw ArgumentError("Pauli term coefficient must be finite");
    }
    if (this->axes.empty()) {
        throw ArgumentError("Pauli term must act on at least one qubit");
    }
}

PauliTerm PauliTerm::from_string(double coefficient, std::string_view labels) {
    std::vector<Pauli> axes;
    axes.reserve(labels.size());
    for (char c : labels) {
        axes.push_back(pauli_from_char(c));
    }
    return PauliTerm(coefficient, std::move(axes));
}

std::string PauliTerm::label() const {
    std::string s;
    for (auto p : axes) {
        s += pauli_char(p);
    }
    return s;
}

size_t PauliTerm::x_mask() const {
    size_t mask = 0;
    for (size_t q = 0; q < axes.size(); ++q) {
        if (axes[q] == Pauli::X || axes[q] == Pauli::Y) {
            mask |= qubit_mask(axes.size(), q);
        }
    }
    return mask;
}

size_t PauliTerm::z_mask() const {
    size_t mask = 0;
    for (size_t q = 0; q < axes.size(); ++q) {
        if (axes[q] == Pauli::Z || axes[q] == Pauli::Y) {
            mask |= qubit_mask(axes.size(), q);
        }
    }
    return mask;
}

size_t PauliTerm::y_count() const {
    size_t n = 0;
    for (auto p : axes) {
        n += p == Pauli::Y;
    }
    return n;
}

Hamiltonian::Hamiltonian(size_t qubit_count) : qubits_(qubit_count) {
    if (qubit_count == 0) {
        throw ArgumentError("Hamiltonian needs at least one qubit");
    }
}

Hamiltonian::Hamiltonian(std::vector<PauliTerm> terms) : qubits_(0) {
    if (terms.empty()) {
        throw ArgumentError("Hamiltonian needs at least one term to infer its qubit count");
    }
    qubits_ = terms.front().qubit_count();
    for (auto &t : terms) {
        add_term(std::move(t));
    }
}

void Hamiltonian::add_term(PauliTerm term) {
    if (term.qubit_count() != qubits_) {
        throw SizeError(
            "term '" + term.label() + "' has " + std::to_string(term.qubit_count()) + " qubits, Hamiltonian has " +
            std::to_string(qubits_));
    }
    terms_.push_back(std::move(term));
}

Hamiltonian Hamiltonian::heisenberg_1d(size_t sites, double coupling, double field, bool periodic) {
    if (sites < 2) {
        throw ArgumentError("Heisenberg chain needs at least 2 sites");
    }
    Hamiltonian h(sites);
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i + 1 < sites; ++i) {
        edges.emplace_back(i, i + 1);
    }
    if (periodic && sites > 2) {
        edges.emplace_back(sites - 1, 0);
    }
    for (auto [i, j] : edges) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            std::vector<Pauli> axes(sites, Pauli::I);
            axes[i] = p;
            axes[j] = p;
            h.add_term(PauliTerm(coupling, std::move(axes)));
        }
    }
    for (size_t i = 0; i < sites; ++i) {
        std::vector<Pauli> axes(sites, Pauli::I);
        axes[i] = Pauli::Z;
        h.add_term(PauliTerm(field, std::move(axes)));
    }
    return h;
}

namespace {

void check_width(const PauliTerm &term, const Statevector &state, const char *context) {
    if (term.qubit_count() != state.qubit_count()) {
        throw SizeError(
            std::string(context) + ": term acts on " + std::to_string(term.qubit_count()) + " qubits, state has " +
            std::to_string(state.qubit_count()));
    }
}

// i^k for k mod 4.
cdouble i_power(size_t k) {
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

// O|i> = i^{#Y} (-1)^{popcount(i & zmask)} |i ^ xmask>, with Y|0> = i|1>, Y|1> = -i|0>.
template <typename F>
void for_each_pauli_entry(const PauliTerm &term, size_t dimension, F &&f) {
    const size_t xm = term.x_mask();
    const size_t zm = term.z_mask();
    const cdouble base = i_power(term.y_count());
    for (size_t col = 0; col < dimension; ++col) {
        cdouble v = (std::popcount(col & zm) & 1) ? -base : base;
        f(col ^ xm, col, v);
    }
}

}  // namespace

void apply_pauli_unit(const PauliTerm &term, Statevector &state) {
    check_width(term, state, "apply_pauli_string");
    std::vector<cdouble> out(state.dimension());
    auto in = state.amplitudes();
    for_each_pauli_entry(term, state.dimension(), [&](size_t row, size_t col, cdouble v) {
        out[row] = v * in[col];
    });
    std::copy(out.begin(), out.end(), state.amplitudes().begin());
}

Statevector apply_pauli_string(const PauliTerm &term, const Statevector &state) {
    Statevector out = state;
    apply_pauli_unit(term, out);
    out.scale(term.coefficient);
    return out;
}

cdouble pauli_matrix_element(const PauliTerm &term, const Statevector &bra, const Statevector &ket) {
    check_width(term, bra, "pauli_matrix_element");
    check_width(term, ket, "pauli_matrix_element");
    auto a = bra.amplitudes();
    auto b = ket.amplitudes();
    cdouble acc{0, 0};
    for_each_pauli_entry(term, ket.dimension(), [&](size_t row, size_t col, cdouble v) {
        acc += std::conj(a[row]) * v * b[col];
    });
    return acc;
}

double expectation(const PauliTerm &term, const Statevector &state) {
    check_width(term, state, "expectation");
    state.require_normalized("expectation");
    cdouble e = pauli_matrix_element(term, state, state);
    if (std::abs(e.imag()) > 1e-10) {
        throw ContractViolation("expectation: imaginary residue " + std::to_string(e.imag()));
    }
    return term.coefficient * e.real();
}

Statevector apply_hamiltonian(const Hamiltonian &h, const Statevector &state) {
    if (h.qubit_count() != state.qubit_count()) {
        throw SizeError("apply_hamiltonian: qubit count mismatch");
    }
    std::vector<cdouble> zeros(state.dimension(), cdouble{0, 0});
    Statevector out = Statevector::from_amplitudes(std::move(zeros));
    for (const auto &t : h.terms()) {
        Statevector tmp = state;
        apply_pauli_unit(t, tmp);
        out.add_scaled(t.coefficient, tmp);
    }
    return out;
}

double energy(const Hamiltonian &h, const Statevector &state) {
    if (h.qubit_count() != state.qubit_count()) {
        throw SizeError("energy: qubit count mismatch");
    }
    state.require_normalized("energy");
    double e = 0;
    for (const auto &t : h.terms()) {
        e += t.coefficient * pauli_matrix_element(t, state, state).real();
    }
    return e;
}

Eigen::MatrixXcd dense_matrix(const PauliTerm &term, size_t qubit_cap) {
    size_t m = term.qubit_count();
    if (m > qubit_cap) {
        throw ResourceError(
            "dense matrix on " + std::to_string(m) + " qubits exceeds the cap of " + std::to_string(qubit_cap));
    }
    size_t dim = size_t{1} << m;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for_each_pauli_entry(term, dim, [&](size_t row, size_t col, cdouble v) {
        out(row, col) = term.coefficient * v;
    });
    return out;
}

Eigen::MatrixXcd dense_matrix(const Hamiltonian &h, size_t qubit_cap) {
    size_t m = h.qubit_count();
    if (m > qubit_cap) {
        throw ResourceError(
            "dense matrix on " + std::to_string(m) + " qubits exceeds the cap of " + std::to_string(qubit_cap));
    }
    size_t dim = size_t{1} << m;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &t : h.terms()) {
        for_each_pauli_entry(t, dim, [&](size_t row, size_t col, cdouble v) {
            out(row, col) += t.coefficient * v;
        });
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r\n";
    size_t b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

Hamiltonian parse_hamiltonian_text(std::string_view text) {
    std::vector<PauliTerm> terms;
    size_t line_no = 0;
    size_t width = 0;
    while (!text.empty()) {
        size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        size_t sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos) {
            throw ParseError("expected '<coefficient> <pauli-string>'", line_no);
        }
        std::string_view coef_text = line.substr(0, sep);
        std::string_view labels = trim(line.substr(sep));
        if (labels.find_first_of(" \t") != std::string_view::npos) {
            throw ParseError("unexpected trailing fields", line_no);
        }

        double coef = 0;
        auto [ptr, ec] = std::from_chars(coef_text.data(), coef_text.data() + coef_text.size(), coef);
        if (ec != std::errc{} || ptr != coef_text.data() + coef_text.size() || !std::isfinite(coef)) {
            throw ParseError("bad coefficient '" + std::string(coef_text) + "'", line_no);
        }
        for (char c : labels) {
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
                throw ParseError("bad Pauli label '" + std::string(1, c) + "'", line_no);
            }
        }
        if (width == 0) {
            width = labels.size();
        } else if (labels.size() != width) {
            throw ParseError(
                "Pauli string has length " + std::to_string(labels.size()) + ", expected " + std::to_string(width),
                line_no);
        }
        terms.push_back(PauliTerm::from_string(coef, labels));
    }
    if (terms.empty()) {
        throw ParseError("Hamiltonian has no terms", 0);
    }
    return Hamiltonian(std::move(terms));
}

std::string format_hamiltonian_text(const Hamiltonian &h) {
    std::string out;
    char buf[64];
    for (const auto &t : h.terms()) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), t.coefficient);
        out.append(buf, ptr);
        out += ' ';
        out += t.label();
        out += '\n';
    }
    return out;
}

}  // namespace fqs
