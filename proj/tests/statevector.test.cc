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

#include "fqs/statevector.h"

#include <gtest/gtest.h>

#include "dense_reference.h"

namespace fqs {
namespace {

TEST(Statevector, Construction) {
    Statevector s(3);
    EXPECT_EQ(s.dimension(), 8u);
    EXPECT_EQ(s[0], cdouble(1, 0));
    EXPECT_THROW(Statevector(0), ArgumentError);
    EXPECT_THROW(Statevector(31), ArgumentError);
    EXPECT_THROW(Statevector::basis_state(2, 4), IndexError);
    EXPECT_THROW(Statevector::from_amplitudes({1, 0, 0}), SizeError);
    EXPECT_EQ(Statevector::from_amplitudes({0, 0, 1, 0}).qubit_count(), 2u);
}

TEST(Statevector, QubitZeroIsMostSignificant) {
    Statevector s(3);
    s.apply_single_qubit(0, gates::pauli_x());
    EXPECT_EQ(s[0b100], cdouble(1, 0));
}

TEST(Statevector, GatesMatchKroneckerProducts) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0, kTwoPi);
    Statevector s(4);
    testing::VecX v = testing::zero_state(4);
    for (int k = 0; k < 40; ++k) {
        const Mat2 u = testing::rotation(angle(rng), testing::random_unit(rng));
        const size_t q = rng() % 4;
        if (k % 3 == 0) {
            const size_t c = (q + 1 + rng() % 3) % 4;
            s.apply_controlled(c, q, u);
            v = testing::embed_controlled(u, c, q, 4) * v;
        } else {
            s.apply_single_qubit(q, u);
            v = testing::embed(u, q, 4) * v;
        }
    }
    EXPECT_LT((testing::to_vec(s) - v).norm(), 1e-12);
    EXPECT_TRUE(s.is_normalized());
}

TEST(Statevector, SegmentAdjointUndoes) {
    Segment seg = {GateOp::single(0, gates::hadamard()), GateOp::controlled(0, 1, gates::pauli_x()),
                   GateOp::single(1, testing::rotation(0.3, Vec3(0, 1, 0)))};
    Statevector s(2);
    apply_segment(s, seg);
    apply_segment_adjoint(s, seg);
    EXPECT_NEAR(std::abs(s[0] - 1.0), 0, 1e-14);
}

TEST(Statevector, Contracts) {
    Statevector s(2);
    Mat2 bad;
    bad << 1, 1, 0, 1;
    EXPECT_THROW(s.apply_single_qubit(0, bad), ContractViolation);
    EXPECT_THROW(s.apply_single_qubit(2, gates::pauli_x()), IndexError);
    EXPECT_THROW(s.apply_controlled(1, 1, gates::pauli_x()), ArgumentError);
    EXPECT_THROW(inner_product(Statevector(1), Statevector(2)), SizeError);
    Statevector z = Statevector::from_amplitudes({0, 0});
    EXPECT_THROW(z.normalize(), ContractViolation);
}

}  // namespace
}  // namespace fqs
