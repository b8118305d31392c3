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

#include "fqs/gates.h"

#include <cmath>

#include "fqs/statevector.h"

namespace fqs {

namespace {

constexpr double kAxisTolerance = 1e-10;

void require_unit_axis(const Vec3 &axis) {
    if (!axis.allFinite() || std::abs(axis.norm() - 1.0) > kAxisTolerance) {
        throw ContractViolation("rotation axis is not a unit vector");
    }
}

bool parallel(const Vec3 &a, const Vec3 &b) {
    return (a - b).norm() < kAxisTolerance || (a + b).norm() < kAxisTolerance;
}

Mat4 block_form(cdouble m00, cdouble m01, cdouble m10, cdouble m11, double last) {
    Mat4 u = Mat4::Zero();
    u(0, 0) = 1;
    u(1, 1) = m00;
    u(1, 2) = m01;
    u(2, 1) = m10;
    u(2, 2) = m11;
    u(3, 3) = last;
    return u;
}

}  // namespace

Mat2 rotation_matrix(double theta, const Vec3 &axis) {
    require_unit_axis(axis);
    if (!std::isfinite(theta)) {
        throw ContractViolation("rotation angle is not finite");
    }
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const cdouble i(0, 1);
    Mat2 m;
    m << c - i * s * axis.z(), -i * s * axis.x() - s * axis.y(),  //
        -i * s * axis.x() + s * axis.y(), c + i * s * axis.z();
    return m;
}

Mat2 rotation_matrix(const GateParam &p) {
    return rotation_matrix(p.theta, p.axis);
}

GateParam normalize_param(GateParam p) {
    double t = std::fmod(p.theta, 2 * kTwoPi);
    if (t < 0) {
        t += 2 * kTwoPi;
    }
    p.axis.normalize();
    if (t > kTwoPi) {
        t = 2 * kTwoPi - t;
        p.axis = -p.axis;
    }
    p.theta = t;
    return p;
}

GateParam normalize_param_periodic(GateParam p) {
    double t = std::fmod(p.theta, kTwoPi);
    if (t < 0) {
        t += kTwoPi;
    }
    p.theta = t;
    p.axis.normalize();
    return p;
}

Vec3 axis_from_angles(double psi, double phi) {
    const double s = std::sin(psi / 2);
    return Vec3(s * std::cos(phi), s * std::sin(phi), std::cos(psi / 2));
}

std::pair<double, double> angles_from_axis(const Vec3 &axis) {
    const double r = std::hypot(axis.x(), axis.y());
    const double psi = 2 * std::atan2(r, axis.z());
    const double phi = r > 0 ? std::atan2(axis.y(), axis.x()) : 0.0;
    return {psi, phi};
}

std::string_view family_name(CompositeFamily family) {
    switch (family) {
        case CompositeFamily::ExcitationConserving:
            return "excitation-conserving";
        case CompositeFamily::Swap:
            return "swap";
        case CompositeFamily::Hop:
            return "hop";
        case CompositeFamily::Rbs:
            return "rbs";
    }
    return "?";
}

std::string kind_name(const GateKind &kind) {
    struct {
        std::string operator()(const General1Q &) const {
            return "general";
        }
        std::string operator()(const FixedAxis1Q &) const {
            return "fixed-axis";
        }
        std::string operator()(const Fraxis1Q &) const {
            return "fraxis";
        }
        std::string operator()(const TwoQubitComposite &k) const {
            return std::string(family_name(k.family));
        }
        std::string operator()(const TiedFixedAxis &) const {
            return "tied-fixed-axis";
        }
    } visitor;
    return std::visit(visitor, kind);
}

int free_parameters(const GateKind &kind) {
    if (std::holds_alternative<General1Q>(kind)) {
        return 3;
    }
    if (std::holds_alternative<Fraxis1Q>(kind)) {
        return 2;
    }
    if (auto *c = std::get_if<TwoQubitComposite>(&kind)) {
        return c->family == CompositeFamily::ExcitationConserving ? 2 : 1;
    }
    return 1;
}

bool is_paired(const GateKind &kind) {
    return std::holds_alternative<TwoQubitComposite>(kind) || std::holds_alternative<TiedFixedAxis>(kind);
}

void check_param(const GateKind &kind, const GateParam &p) {
    require_unit_axis(p.axis);
    auto require_pi = [&](const char *what) {
        if (std::abs(p.theta - kPi) > 1e-12) {
            throw ContractViolation(std::string(what) + " requires theta = pi");
        }
    };
    if (auto *f = std::get_if<FixedAxis1Q>(&kind)) {
        if (!parallel(p.axis, f->axis)) {
            throw ContractViolation("fixed-axis gate: axis differs from the frozen axis");
        }
    } else if (auto *t = std::get_if<TiedFixedAxis>(&kind)) {
        if (!parallel(p.axis, t->axis)) {
            throw ContractViolation("tied fixed-axis gate: axis differs from the frozen axis");
        }
    } else if (std::holds_alternative<Fraxis1Q>(kind)) {
        require_pi("fraxis gate");
    } else if (auto *c = std::get_if<TwoQubitComposite>(&kind)) {
        switch (c->family) {
            case CompositeFamily::ExcitationConserving:
                require_pi("excitation-conserving gate");
                break;
            case CompositeFamily::Swap:
                if (!parallel(p.axis, Vec3(0, 0, 1))) {
                    throw ContractViolation("swap gate requires axis (0, 0, 1)");
                }
                break;
            case CompositeFamily::Hop:
            case CompositeFamily::Rbs:
                require_pi("hop/rbs gate");
                if (std::abs(p.axis.y()) > kAxisTolerance) {
                    throw ContractViolation("hop/rbs gate requires an axis in the XZ plane");
                }
                break;
        }
    }
}

namespace gates {

Mat4 on_second(const Mat2 &u) {
    Mat4 m = Mat4::Zero();
    m.block<2, 2>(0, 0) = u;
    m.block<2, 2>(2, 2) = u;
    return m;
}

Mat4 on_first(const Mat2 &u) {
    Mat4 m = Mat4::Zero();
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            m.block<2, 2>(2 * r, 2 * c) = u(r, c) * Eigen::Matrix2cd::Identity();
        }
    }
    return m;
}

Mat4 cnot_4(bool first_controls) {
    Mat4 m = Mat4::Zero();
    if (first_controls) {
        m(0, 0) = m(1, 1) = 1;
        m(2, 3) = m(3, 2) = 1;
    } else {
        m(0, 0) = m(2, 2) = 1;
        m(1, 3) = m(3, 1) = 1;
    }
    return m;
}

Mat4 cz_4() {
    Mat4 m = Mat4::Identity();
    m(3, 3) = -1;
    return m;
}

}  // namespace gates

CompositeParts composite_parts(CompositeFamily family) {
    const Mat4 cx21 = gates::cnot_4(false);
    const Mat4 cx12 = gates::cnot_4(true);
    const Mat4 cz = gates::cz_4();
    const Mat4 z2 = gates::on_second(gates::pauli_z());
    switch (family) {
        case CompositeFamily::ExcitationConserving:
            return {cx21, cz, cx21};
        case CompositeFamily::Swap:
            return {cx21, cx12, cx21};
        case CompositeFamily::Hop:
            return {z2 * cx21, cz, cx21};
        case CompositeFamily::Rbs:
            return {cx21, cz, cx21 * z2 * cz};
    }
    throw ArgumentError("unknown composite family");
}

Mat4 composite_matrix(CompositeFamily family, const GateParam &p) {
    check_param(TwoQubitComposite{family}, p);
    const CompositeParts parts = composite_parts(family);
    const Mat4 r = gates::on_second(rotation_matrix(p));
    return parts.a * r * parts.b * r.adjoint() * parts.c;
}

Mat4 composite_closed_form(CompositeFamily family, const GateParam &p) {
    check_param(TwoQubitComposite{family}, p);
    switch (family) {
        case CompositeFamily::ExcitationConserving: {
            auto [psi, phi] = angles_from_axis(p.axis);
            const cdouble e = std::polar(1.0, phi);
            return block_form(-std::cos(psi), e * std::sin(psi), std::conj(e) * std::sin(psi), std::cos(psi), 1);
        }
        case CompositeFamily::Swap: {
            // The sign of the frozen axis enters like the sign of theta.
            const double theta = p.axis.z() > 0 ? p.theta : -p.theta;
            const cdouble e = std::polar(1.0, theta);
            return block_form(0, e, std::conj(e), 0, 1);
        }
        case CompositeFamily::Hop: {
            const double psi = 2 * std::atan2(p.axis.x(), p.axis.z());
            return block_form(std::cos(psi), -std::sin(psi), std::sin(psi), std::cos(psi), -1);
        }
        case CompositeFamily::Rbs: {
            const double psi = 2 * std::atan2(p.axis.x(), p.axis.z());
            return block_form(std::cos(psi), std::sin(psi), -std::sin(psi), std::cos(psi), 1);
        }
    }
    throw ArgumentError("unknown composite family");
}

bool preserves_hamming_weight(const Mat4 &u, double tolerance) {
    static constexpr int kWeight[4] = {0, 1, 1, 2};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (kWeight[r] != kWeight[c] && std::abs(u(r, c)) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

bool preservation_check(CompositeFamily family, const GateParam &p) {
    return preserves_hamming_weight(composite_matrix(family, p));
}

}  // namespace fqs
