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

#include "fqs/alpha_beta.h"

#include <cmath>

#include "fqs/statevector.h"

namespace fqs {

namespace {

void check_mu(int mu) {
    if (mu < 0 || mu > 3) {
        throw ArgumentError("mu must be 0 (identity) or 1..3 (x, y, z)");
    }
}

}  // namespace

Mat2 sigma_mu(int mu) {
    check_mu(mu);
    const cdouble mi(0, -1);
    switch (mu) {
        case 0:
            return Mat2::Identity();
        case 1:
            return mi * gates::pauli_x();
        case 2:
            return mi * gates::pauli_y();
        default:
            return mi * gates::pauli_z();
    }
}

AlphaBeta alpha_beta(int mu, const GateParam &prev) {
    check_mu(mu);
    if (mu == 0) {
        return {-prev.theta, prev.axis};
    }
    const int p = mu - 1;
    const double c = std::cos(prev.theta / 2);
    const double s = std::sin(prev.theta / 2);
    const Vec3 &n = prev.axis;
    // sin(alpha/2) beta_q = cos(theta'/2) delta_pq - sin(theta'/2) eps_prq n'_r
    Vec3 unit = Vec3::Zero();
    unit[p] = 1;
    Vec3 v = c * unit - s * unit.cross(n);
    const double cos_half = n[p] * s;
    const double sin_half = v.norm();
    if (sin_half == 0) {
        return {2 * std::atan2(0.0, cos_half), n};
    }
    return {2 * std::atan2(sin_half, cos_half), v / sin_half};
}

double first_term(int mu, const GateParam &prev) {
    check_mu(mu);
    if (mu == 0) {
        return std::cos(prev.theta / 2);
    }
    return prev.axis[mu - 1] * std::sin(prev.theta / 2);
}

}  // namespace fqs
