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

#include <gtest/gtest.h>

#include "dense_reference.h"

namespace fqs {
namespace {

using testing::MatX;

// 4x4 pieces on (first, second), first qubit most significant.
MatX cx(size_t control, size_t target) {
    return testing::embed_controlled(testing::pauli2('X'), control, target, 2);
}
MatX cz() {
    return testing::embed_controlled(testing::pauli2('Z'), 0, 1, 2);
}
MatX z2() {
    return testing::embed(testing::pauli2('Z'), 1, 2);
}

MatX from_table(CompositeFamily f, const GateParam &p) {
    MatX a, b, c;
    switch (f) {
        case CompositeFamily::ExcitationConserving:
            a = cx(1, 0), b = cz(), c = cx(1, 0);
            break;
        case CompositeFamily::Swap:
            a = cx(1, 0), b = cx(0, 1), c = cx(1, 0);
            break;
        case CompositeFamily::Hop:
            a = z2() * cx(1, 0), b = cz(), c = cx(1, 0);
            break;
        case CompositeFamily::Rbs:
            a = cx(1, 0), b = cz(), c = cx(1, 0) * z2() * cz();
            break;
    }
    const MatX r = testing::embed(testing::rotation(p.theta, p.axis), 1, 2);
    return a * r * b * r.adjoint() * c;
}

MatX block(cdouble m00, cdouble m01, cdouble m10, cdouble m11, double last) {
    MatX out = MatX::Zero(4, 4);
    out(0, 0) = 1;
    out(1, 1) = m00;
    out(1, 2) = m01;
    out(2, 1) = m10;
    out(2, 2) = m11;
    out(3, 3) = last;
    return out;
}

TEST(Rotation, MatchesEntrywiseFormula) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 100; ++k) {
        const double t = std::uniform_real_distribution<double>(-10, 10)(rng);
        const Vec3 n = testing::random_unit(rng);
        EXPECT_LT((rotation_matrix(t, n) - testing::rotation(t, n)).cwiseAbs().maxCoeff(), 1e-14);
    }
    EXPECT_THROW(rotation_matrix(1.0, Vec3(1, 1, 0)), ContractViolation);
}

TEST(NormalizeParam, SameMatrixInRange) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> t(-30, 30);
    for (int k = 0; k < 500; ++k) {
        const GateParam p{t(rng), testing::random_unit(rng)};
        const GateParam q = normalize_param(p);
        EXPECT_GE(q.theta, 0);
        EXPECT_LE(q.theta, kTwoPi);
        EXPECT_LT((rotation_matrix(p) - rotation_matrix(q)).cwiseAbs().maxCoeff(), 1e-12);

        const GateParam r = normalize_param_periodic(p);
        EXPECT_GE(r.theta, 0);
        EXPECT_LT(r.theta, kTwoPi);
        EXPECT_LT((r.axis - p.axis).norm(), 1e-15);
        const Mat2 diff = rotation_matrix(p) * rotation_matrix(r).adjoint();
        EXPECT_NEAR(std::abs(diff(0, 0)), 1.0, 1e-12);
    }
}

TEST(AxisAngles, RoundTrip) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const Vec3 n = testing::random_unit(rng);
        auto [psi, phi] = angles_from_axis(n);
        EXPECT_GE(psi, 0);
        EXPECT_LE(psi, kTwoPi);
        EXPECT_LT((axis_from_angles(psi, phi) - n).norm(), 1e-12);
    }
}

TEST(Composite, TableClosedForms) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> angle(0, kTwoPi);
    for (int k = 0; k < 100; ++k) {
        const double psi = angle(rng), phi = angle(rng), theta = angle(rng);
        const cdouble e = std::polar(1.0, phi);

        GateParam p{kPi, axis_from_angles(psi, phi)};
        MatX expect = block(-std::cos(psi), e * std::sin(psi), std::conj(e) * std::sin(psi), std::cos(psi), 1);
        EXPECT_LT((from_table(CompositeFamily::ExcitationConserving, p) - expect).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((composite_closed_form(CompositeFamily::ExcitationConserving, p) - expect).cwiseAbs().maxCoeff(),
                  1e-12);

        p = {theta, Vec3(0, 0, 1)};
        const cdouble et = std::polar(1.0, theta);
        expect = block(0, et, std::conj(et), 0, 1);
        EXPECT_LT((from_table(CompositeFamily::Swap, p) - expect).cwiseAbs().maxCoeff(), 1e-12);

        p = {kPi, axis_from_angles(psi, 0)};
        expect = block(std::cos(psi), -std::sin(psi), std::sin(psi), std::cos(psi), -1);
        EXPECT_LT((from_table(CompositeFamily::Hop, p) - expect).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((composite_closed_form(CompositeFamily::Hop, p) - expect).cwiseAbs().maxCoeff(), 1e-12);
        expect = block(std::cos(psi), std::sin(psi), -std::sin(psi), std::cos(psi), 1);
        EXPECT_LT((from_table(CompositeFamily::Rbs, p) - expect).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((composite_closed_form(CompositeFamily::Rbs, p) - expect).cwiseAbs().maxCoeff(), 1e-12);

        for (auto f : {CompositeFamily::ExcitationConserving, CompositeFamily::Swap, CompositeFamily::Hop,
                       CompositeFamily::Rbs}) {
            GateParam q = f == CompositeFamily::Swap ? GateParam{theta, Vec3(0, 0, k % 2 ? 1 : -1)}
                          : f == CompositeFamily::ExcitationConserving ? GateParam{kPi, testing::random_unit(rng)}
                                                                      : GateParam{kPi, axis_from_angles(psi)};
            const Mat4 m = composite_matrix(f, q);
            EXPECT_LT((MatX(m) - from_table(f, q)).cwiseAbs().maxCoeff(), 1e-12) << family_name(f);
            EXPECT_LT((m - composite_closed_form(f, q)).cwiseAbs().maxCoeff(), 1e-12) << family_name(f);
            EXPECT_TRUE(preservation_check(f, q));
        }
    }
}

TEST(Composite, HammingWeightDetector) {
    Mat4 swap_like = Mat4::Identity();
    EXPECT_TRUE(preserves_hamming_weight(swap_like));
    swap_like(0, 3) = 0.5;
    EXPECT_FALSE(preserves_hamming_weight(swap_like));
}

TEST(GateKind, ParameterContracts) {
    EXPECT_NO_THROW(check_param(General1Q{}, {0.3, Vec3(0, 1, 0)}));
    EXPECT_THROW(check_param(Fraxis1Q{}, {1.0, Vec3(0, 1, 0)}), ContractViolation);
    EXPECT_NO_THROW(check_param(FixedAxis1Q{Vec3(0, 1, 0)}, {1.0, Vec3(0, -1, 0)}));
    EXPECT_THROW(check_param(FixedAxis1Q{Vec3(0, 1, 0)}, {1.0, Vec3(1, 0, 0)}), ContractViolation);
    EXPECT_THROW(check_param(TwoQubitComposite{CompositeFamily::Hop}, {kPi, Vec3(0, 1, 0)}), ContractViolation);
    EXPECT_THROW(check_param(TwoQubitComposite{CompositeFamily::Swap}, {1.0, Vec3(1, 0, 0)}), ContractViolation);
    EXPECT_EQ(free_parameters(General1Q{}), 3);
    EXPECT_EQ(free_parameters(Fraxis1Q{}), 2);
    EXPECT_EQ(free_parameters(TwoQubitComposite{CompositeFamily::ExcitationConserving}), 2);
    EXPECT_EQ(free_parameters(TwoQubitComposite{CompositeFamily::Rbs}), 1);
    EXPECT_TRUE(is_paired(TiedFixedAxis{Vec3(0, 0, 1)}));
    EXPECT_FALSE(is_paired(General1Q{}));
}

}  // namespace
}  // namespace fqs
