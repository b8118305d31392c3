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

#include <string>
#include <string_view>
#include <variant>

#include "fqs/types.h"

namespace fqs {

/// Rotation R_n(theta) = exp(-i theta/2 n.sigma).
struct GateParam {
    double theta = 0;
    Vec3 axis = Vec3(0, 0, 1);

    bool operator==(const GateParam &other) const {
        return theta == other.theta && axis == other.axis;
    }
};

Mat2 rotation_matrix(double theta, const Vec3 &axis);
Mat2 rotation_matrix(const GateParam &p);

/// Wraps theta into [0, 2pi] without changing the matrix: theta is taken mod
/// 4pi and values above 2pi are mapped to 4pi - theta with the axis negated.
/// The axis is renormalized.
GateParam normalize_param(GateParam p);
/// theta mod 2pi; for gates that only enter as R ... R^dag.
GateParam normalize_param_periodic(GateParam p);

/// n(psi, phi) = (sin(psi/2) cos(phi), sin(psi/2) sin(phi), cos(psi/2)).
Vec3 axis_from_angles(double psi, double phi = 0);
/// Inverse of axis_from_angles; psi in [0, 2pi], phi in (-pi, pi].
std::pair<double, double> angles_from_axis(const Vec3 &axis);

enum class CompositeFamily { ExcitationConserving, Swap, Hop, Rbs };

std::string_view family_name(CompositeFamily family);

struct General1Q {};
struct FixedAxis1Q {
    Vec3 axis;
};
struct Fraxis1Q {};
/// A R B R^dag C on an ordered qubit pair, R acting on the second qubit.
struct TwoQubitComposite {
    CompositeFamily family;
};
/// A fixed-axis rotation entering as R^dag ... R around an arbitrary block.
struct TiedFixedAxis {
    Vec3 axis;
};

using GateKind = std::variant<General1Q, FixedAxis1Q, Fraxis1Q, TwoQubitComposite, TiedFixedAxis>;

std::string kind_name(const GateKind &kind);
/// Number of free real parameters a slot of this kind carries.
int free_parameters(const GateKind &kind);
/// The parameterized rotation occurs twice (as R^dag, later as R).
bool is_paired(const GateKind &kind);

/// Throws ContractViolation when `p` does not respect the kind's constraints.
void check_param(const GateKind &kind, const GateParam &p);

/// Fixed two-qubit pieces of a composite, as 4x4 matrices on (first, second)
/// with the first qubit as the most significant bit.
struct CompositeParts {
    Mat4 a, b, c;
};
CompositeParts composite_parts(CompositeFamily family);

/// A (I (x) R) B (I (x) R^dag) C.
Mat4 composite_matrix(CompositeFamily family, const GateParam &p);
/// Closed block-diagonal form 1 (+) M (+) +-1.
Mat4 composite_closed_form(CompositeFamily family, const GateParam &p);
/// True when the matrix maps each Hamming-weight subspace into itself.
bool preserves_hamming_weight(const Mat4 &u, double tolerance = 1e-12);
bool preservation_check(CompositeFamily family, const GateParam &p);

namespace gates {
Mat4 cnot_4(bool first_controls);
Mat4 cz_4();
Mat4 on_second(const Mat2 &u);
Mat4 on_first(const Mat2 &u);
}  // namespace gates

}  // namespace fqs
