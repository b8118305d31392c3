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

#include <functional>
#include <vector>

#include "fqs/pauli.h"
#include "fqs/slot_eval.h"

namespace fqs {

struct OracleResult {
    double ground_energy = 0;
    Statevector ground_state{1};
    /// Eigenvectors spanning the lowest eigenvalue (within 1e-8).
    size_t ground_degeneracy = 1;
};

/// Dense eigendecomposition of a Hamiltonian (qubit count <= cap).
class SpectralOracle {
   public:
    explicit SpectralOracle(const Hamiltonian &h, size_t qubit_cap = kDefaultOracleCap);

    size_t qubit_count() const {
        return qubits_;
    }
    const Eigen::VectorXd &eigenvalues() const {
        return values_;
    }
    double ground_energy() const {
        return values_[0];
    }
    size_t ground_degeneracy() const {
        return degeneracy_;
    }
    Statevector ground_state() const;

    /// Normalized exp(-H tau)|psi0> (imaginary) or exp(-i H t)|psi0> (real).
    Statevector evolve(const Statevector &psi0, double time, TimeKind kind) const;
    /// Weight of `psi` in the ground eigenspace; |<g|psi>|^2 when non-degenerate.
    double ground_fidelity(const Statevector &psi) const;

   private:
    size_t qubits_;
    Eigen::VectorXd values_;
    Eigen::MatrixXcd vectors_;
    size_t degeneracy_ = 1;
};

Statevector exact_evolve(const Hamiltonian &h, const Statevector &psi0, double time, TimeKind kind,
                         size_t qubit_cap = kDefaultOracleCap);
OracleResult ground(const Hamiltonian &h, size_t qubit_cap = kDefaultOracleCap);
/// |<a|b>|^2 for normalized states.
double fidelity(const Statevector &a, const Statevector &b);

/// Best value of f over theta_k = 2 pi k / points, k = 0..points-1.
struct AngleArgmax {
    double theta = 0;
    double value = 0;
};
AngleArgmax grid_argmax_angle(const std::function<double(double)> &f, size_t points, double period = kTwoPi);

/// Fibonacci lattice of `points` unit vectors.
std::vector<Vec3> fibonacci_sphere(size_t points);
struct AxisArgmax {
    Vec3 axis = Vec3(0, 0, 1);
    double value = 0;
};
AxisArgmax grid_argmax_sphere(const std::function<double(const Vec3 &)> &f, size_t points);
/// theta_points angles in [0, 2pi) times a polar x azimuth grid of axes.
struct ParamArgmax {
    GateParam param;
    double value = 0;
};
ParamArgmax grid_argmax_param(const std::function<double(const GateParam &)> &f, size_t theta_points,
                              size_t polar_points, size_t azimuth_points);

}  // namespace fqs
