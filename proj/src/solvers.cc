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

#include "fqs/solvers.h"

#include <algorithm>
#include <array>
#include <cmath>

namespace fqs {

double objective_1q(const GVector &gv, const GateParam &p) {
    return gv.g0 * std::cos(p.theta / 2) + p.axis.dot(gv.g) * std::sin(p.theta / 2);
}

std::optional<GateParam> solve_1q_3p(const GVector &gv, const Vec3 &fallback_axis) {
    const double gn = gv.g.norm();
    if (std::hypot(gv.g0, gn) < kFlatTolerance) {
        return std::nullopt;
    }
    GateParam p;
    p.theta = kPi - 2 * std::atan2(gv.g0, gn);
    p.axis = gn < kFlatTolerance ? fallback_axis.normalized() : Vec3(gv.g / gn);
    return p;
}

std::optional<Vec3> solve_1q_2p(const Vec3 &g) {
    const double gn = g.norm();
    if (gn < kFlatTolerance) {
        return std::nullopt;
    }
    return Vec3(g / gn);
}

std::optional<double> solve_1q_1p(double g0, double gd) {
    if (std::hypot(g0, gd) < kFlatTolerance) {
        return std::nullopt;
    }
    double t = kPi - 2 * std::atan2(g0, gd);
    if (t < 0) {
        t += 2 * kTwoPi;
    }
    return t;
}

std::optional<GateParam> solve_fixed_axis(double g0, double gd, const Vec3 &axis) {
    auto t = solve_1q_1p(g0, gd);
    if (!t) {
        return std::nullopt;
    }
    return normalize_param({*t, axis});
}

SymmetricEigen jacobi_eigen(const Mat3 &s_in) {
    Mat3 a = (s_in + s_in.transpose()) / 2;
    Mat3 v = Mat3::Identity();
    int sweep = 0;
    auto off = [&] {
        return std::sqrt(2 * (a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2)));
    };
    while (off() >= 1e-12 && sweep < 50) {
        ++sweep;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (a(p, q) == 0) {
                    continue;
                }
                const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                Mat3 j = Mat3::Identity();
                j(p, p) = c;
                j(q, q) = c;
                j(p, q) = s;
                j(q, p) = -s;
                a = j.transpose() * a * j;
                a(p, q) = a(q, p) = 0;
                v = v * j;
            }
        }
    }
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return a(i, i) > a(j, j);
    });
    SymmetricEigen out;
    out.sweeps = sweep;
    for (int k = 0; k < 3; ++k) {
        out.values[k] = a(order[k], order[k]);
        out.vectors.col(k) = v.col(order[k]);
    }
    return out;
}

Vec3 solve_2q_2p(const GMatrix &gm) {
    const SymmetricEigen e = jacobi_eigen(gm.s);
    const double top = e.values[0];
    const double tol = 1e-10 * std::max(1.0, std::abs(top));
    int mult = 1;
    while (mult < 3 && top - e.values[mult] <= tol) {
        ++mult;
    }
    Vec3 n = e.vectors.col(0);
    if (mult > 1) {
        const auto basis = e.vectors.leftCols(mult);
        for (int axis = 0; axis < 3; ++axis) {
            Vec3 unit = Vec3::Zero();
            unit[axis] = 1;
            Vec3 proj = basis * (basis.transpose() * unit);
            if (proj.norm() > 1e-8) {
                n = proj.normalized();
                break;
            }
        }
    }
    int big = 0;
    for (int k = 1; k < 3; ++k) {
        if (std::abs(n[k]) > std::abs(n[big]) + 1e-14) {
            big = k;
        }
    }
    if (n[big] < 0) {
        n = -n;
    }
    return n;
}

double objective_2q_1p(const HVector &hv, double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return hv.h0 * c * c + (hv.h1 + hv.h2) * c * s + hv.h3 * s * s;
}

std::optional<double> solve_2q_1p(const HVector &hv) {
    const double a = hv.h0 - hv.h3;
    const double b = hv.h1 + hv.h2;
    if (std::hypot(a, b) < kFlatTolerance) {
        return std::nullopt;
    }
    double t = std::fmod(kPi / 2 - std::atan2(a, b), kTwoPi);
    if (t < 0) {
        t += kTwoPi;
    }
    return t;
}

HVector hvector_from_gmatrix(const GMatrix &gm) {
    return {gm.g(2, 2), gm.g(2, 0), gm.g(0, 2), gm.g(0, 0)};
}

}  // namespace fqs
