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

#include <optional>

#include "fqs/gates.h"

namespace fqs {

/// Flat-objective threshold on the amplitude of a sinusoid or quadratic form.
inline constexpr double kFlatTolerance = 1e-14;

/// Coefficients of F(theta, n) = g0 cos(theta/2) + (n.g) sin(theta/2).
struct GVector {
    double g0 = 0;
    Vec3 g = Vec3::Zero();
};

double objective_1q(const GVector &gv, const GateParam &p);

/// Global maximizer of objective_1q with theta in [0, 2pi]. Returns nullopt
/// when g0 and g both vanish. When only g vanishes the axis is `fallback_axis`.
std::optional<GateParam> solve_1q_3p(const GVector &gv, const Vec3 &fallback_axis = Vec3(0, 0, 1));

/// g / |g|; nullopt when g vanishes.
std::optional<Vec3> solve_1q_2p(const Vec3 &g);

/// Maximizer of g0 cos(theta/2) + gd sin(theta/2), returned in [0, 4pi) (the
/// period of the objective). Use solve_fixed_axis to fold into [0, 2pi].
std::optional<double> solve_1q_1p(double g0, double gd);
/// solve_1q_1p folded into [0, 2pi] by negating the axis when needed.
std::optional<GateParam> solve_fixed_axis(double g0, double gd, const Vec3 &axis);

struct GMatrix {
    Mat3 g = Mat3::Zero();
    Mat3 s = Mat3::Zero();

    static GMatrix from_g(const Mat3 &g) {
        return {g, (g + g.transpose()) / 2};
    }
};

struct SymmetricEigen {
    Vec3 values;   // descending
    Mat3 vectors;  // columns
    int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal norm drops below 1e-12
/// (at most 50 sweeps).
SymmetricEigen jacobi_eigen(const Mat3 &s);

/// Top eigenvector of S. Degenerate top eigenvalues (within 1e-10) resolve to
/// the unit vector of the eigenspace with the largest |n_x|, then |n_y|, then
/// |n_z|; the largest-magnitude component is made positive.
Vec3 solve_2q_2p(const GMatrix &gm);

/// F(theta) = h0 cos^2 + (h1 + h2) cos sin + h3 sin^2 of theta/2.
struct HVector {
    double h0 = 0, h1 = 0, h2 = 0, h3 = 0;
};

double objective_2q_1p(const HVector &hv, double theta);
/// Maximizer in [0, 2pi); nullopt when the objective is constant.
std::optional<double> solve_2q_1p(const HVector &hv);
/// (G33, G31, G13, G11): the angle-only problem for axes (sin(psi/2), 0, cos(psi/2)).
HVector hvector_from_gmatrix(const GMatrix &gm);

}  // namespace fqs
