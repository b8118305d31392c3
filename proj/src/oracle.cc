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

#include "fqs/oracle.h"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace fqs {

namespace {

Eigen::VectorXcd to_eigen(const Statevector &s) {
    auto a = s.amplitudes();
    return Eigen::Map<const Eigen::VectorXcd>(a.data(), static_cast<Eigen::Index>(a.size()));
}

Statevector from_eigen(const Eigen::VectorXcd &v) {
    return Statevector::from_amplitudes(std::vector<cdouble>(v.data(), v.data() + v.size()));
}

}  // namespace

SpectralOracle::SpectralOracle(const Hamiltonian &h, size_t qubit_cap) : qubits_(h.qubit_count()) {
    const Eigen::MatrixXcd m = dense_matrix(h, qubit_cap);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw Error("dense eigendecomposition failed");
    }
    values_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
    degeneracy_ = 1;
    while (degeneracy_ < static_cast<size_t>(values_.size()) && values_[degeneracy_] - values_[0] < 1e-8) {
        ++degeneracy_;
    }
}

Statevector SpectralOracle::ground_state() const {
    return from_eigen(vectors_.col(0));
}

Statevector SpectralOracle::evolve(const Statevector &psi0, double time, TimeKind kind) const {
    if (psi0.qubit_count() != qubits_) {
        throw SizeError("oracle: state and Hamiltonian qubit counts differ");
    }
    psi0.require_normalized("exact_evolve");
    Eigen::VectorXcd c = vectors_.adjoint() * to_eigen(psi0);
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        const double e = values_[k];
        if (kind == TimeKind::Imaginary) {
            // Shift by the ground energy so large times do not underflow.
            c[k] *= std::exp(-(e - values_[0]) * time);
        } else {
            c[k] *= std::polar(1.0, -e * time);
        }
    }
    Eigen::VectorXcd out = vectors_ * c;
    const double n = out.norm();
    if (n == 0) {
        throw ContractViolation("exact_evolve: state has no weight left");
    }
    return from_eigen(out / n);
}

double SpectralOracle::ground_fidelity(const Statevector &psi) const {
    psi.require_normalized("ground_fidelity");
    const Eigen::VectorXcd c = vectors_.leftCols(static_cast<Eigen::Index>(degeneracy_)).adjoint() * to_eigen(psi);
    return c.squaredNorm();
}

Statevector exact_evolve(const Hamiltonian &h, const Statevector &psi0, double time, TimeKind kind,
                         size_t qubit_cap) {
    return SpectralOracle(h, qubit_cap).evolve(psi0, time, kind);
}

OracleResult ground(const Hamiltonian &h, size_t qubit_cap) {
    SpectralOracle o(h, qubit_cap);
    return {o.ground_energy(), o.ground_state(), o.ground_degeneracy()};
}

double fidelity(const Statevector &a, const Statevector &b) {
    a.require_normalized("fidelity");
    b.require_normalized("fidelity");
    return std::norm(inner_product(a, b));
}

AngleArgmax grid_argmax_angle(const std::function<double(double)> &f, size_t points, double period) {
    AngleArgmax best{0, -std::numeric_limits<double>::infinity()};
    for (size_t k = 0; k < points; ++k) {
        const double t = period * static_cast<double>(k) / static_cast<double>(points);
        const double v = f(t);
        if (v > best.value) {
            best = {t, v};
        }
    }
    return best;
}

std::vector<Vec3> fibonacci_sphere(size_t points) {
    std::vector<Vec3> out;
    out.reserve(points);
    const double golden = kPi * (3 - std::sqrt(5.0));
    for (size_t k = 0; k < points; ++k) {
        const double z = 1 - (2 * static_cast<double>(k) + 1) / static_cast<double>(points);
        const double r = std::sqrt(std::max(0.0, 1 - z * z));
        const double phi = golden * static_cast<double>(k);
        out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return out;
}

AxisArgmax grid_argmax_sphere(const std::function<double(const Vec3 &)> &f, size_t points) {
    AxisArgmax best{Vec3(0, 0, 1), -std::numeric_limits<double>::infinity()};
    for (const Vec3 &n : fibonacci_sphere(points)) {
        const double v = f(n);
        if (v > best.value) {
            best = {n, v};
        }
    }
    return best;
}

ParamArgmax grid_argmax_param(const std::function<double(const GateParam &)> &f, size_t theta_points,
                              size_t polar_points, size_t azimuth_points) {
    ParamArgmax best{{}, -std::numeric_limits<double>::infinity()};
    for (size_t i = 0; i < theta_points; ++i) {
        const double theta = kTwoPi * static_cast<double>(i) / static_cast<double>(theta_points);
        for (size_t j = 0; j < polar_points; ++j) {
            const double polar = kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(polar_points);
            for (size_t k = 0; k < azimuth_points; ++k) {
                const double az = kTwoPi * static_cast<double>(k) / static_cast<double>(azimuth_points);
                const GateParam p{theta, Vec3(std::sin(polar) * std::cos(az), std::sin(polar) * std::sin(az),
                                              std::cos(polar))};
                const double v = f(p);
                if (v > best.value) {
                    best = {p, v};
                }
            }
        }
    }
    return best;
}

}  // namespace fqs
