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

#include "fqs/hadamard_test.h"

#include <gtest/gtest.h>

#include "dense_reference.h"

namespace fqs {
namespace {

Segment random_segment(std::mt19937_64 &rng, size_t m, int gates) {
    std::uniform_real_distribution<double> angle(0, kTwoPi);
    Segment s;
    for (int k = 0; k < gates; ++k) {
        const size_t q = rng() % m;
        if (k % 2) {
            s.push_back(GateOp::controlled((q + 1) % m, q, gates::pauli_x()));
        } else {
            s.push_back(GateOp::single(q, testing::rotation(angle(rng), testing::random_unit(rng))));
        }
    }
    return s;
}

testing::MatX segment_matrix(const Segment &seg, size_t m) {
    testing::MatX u = testing::MatX::Identity(Eigen::Index{1} << m, Eigen::Index{1} << m);
    for (const auto &g : seg) {
        u = (g.type == GateOp::Type::Single ? testing::embed(g.matrix, g.target, m)
                                             : testing::embed_controlled(g.matrix, g.control, g.target, m)) *
            u;
    }
    return u;
}

TEST(HadamardTest, ReadsOverlapQuadratures) {
    std::mt19937_64 rng(5);
    const size_t m = 3;
    for (int trial = 0; trial < 30; ++trial) {
        const Segment w0 = random_segment(rng, m, 4), w1 = random_segment(rng, m, 4), w2 = random_segment(rng, m, 4);
        const Insertion i1{rng() % m, testing::rotation(1.1, testing::random_unit(rng))};
        const Insertion i2{rng() % m, testing::pauli2('Y')};
        const std::string labels = testing::random_pauli_labels(rng, m);
        const auto term = PauliTerm::from_string(1.0, labels);

        const auto z = testing::zero_state(m);
        const testing::VecX a = segment_matrix(w2, m) * segment_matrix(w1, m) * segment_matrix(w0, m) * z;
        const testing::VecX b = segment_matrix(w2, m) * testing::embed(i2.matrix, i2.qubit, m) *
                                segment_matrix(w1, m) * testing::embed(i1.matrix, i1.qubit, m) *
                                segment_matrix(w0, m) * z;
        const cdouble ob = (a.adjoint() * testing::pauli_string(labels) * b)(0, 0);
        const cdouble ab = (a.adjoint() * b)(0, 0);

        auto re = simulate_hadamard_test(w0, w1, w2, i1, i2, term, Quadrature::Real);
        auto im = simulate_hadamard_test(w0, w1, w2, i1, i2, term, Quadrature::Imag);
        EXPECT_NEAR(re.z_observable, ob.real(), 1e-12);
        EXPECT_NEAR(re.z_identity, ab.real(), 1e-12);
        EXPECT_NEAR(im.z_observable, ob.imag(), 1e-12);
        EXPECT_NEAR(im.z_identity, ab.imag(), 1e-12);
    }
}

TEST(HadamardTest, Contracts) {
    Mat2 bad = Mat2::Identity() * 2.0;
    const auto term = PauliTerm::from_string(1.0, "ZZ");
    EXPECT_THROW(simulate_hadamard_test({}, {}, {}, {0, bad}, {1, Mat2::Identity()}, term), ContractViolation);
    EXPECT_THROW(simulate_hadamard_test({}, {}, {}, {2, Mat2::Identity()}, {1, Mat2::Identity()}, term), Error);
}

}  // namespace
}  // namespace fqs
