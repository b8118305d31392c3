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

#include <gtest/gtest.h>

#include "dense_reference.h"

namespace fqs {
namespace {

TEST(AlphaBeta, ReproducesSigmaTimesInverse) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> angle(-kTwoPi, 2 * kTwoPi);
    for (int k = 0; k < 500; ++k) {
        const int mu = static_cast<int>(rng() % 4);
        const GateParam prev{angle(rng), testing::random_unit(rng)};
        const AlphaBeta ab = alpha_beta(mu, prev);
        EXPECT_NEAR(ab.beta.norm(), 1.0, 1e-12);
        const Mat2 expect = sigma_mu(mu) * testing::rotation(prev.theta, prev.axis).adjoint();
        EXPECT_LT((testing::rotation(ab.alpha, ab.beta) - expect).cwiseAbs().maxCoeff(), 1e-12) << mu;
    }
}

TEST(AlphaBeta, DegenerateBranch) {
    // n'_mu sin(theta'/2) = +-1 makes Sigma_mu R^dag = +-I.
    for (int mu = 1; mu <= 3; ++mu) {
        for (double sign : {1.0, -1.0}) {
            const GateParam prev{kPi, sign * Vec3::Unit(mu - 1)};
            const AlphaBeta ab = alpha_beta(mu, prev);
            const Mat2 expect = sigma_mu(mu) * testing::rotation(prev.theta, prev.axis).adjoint();
            EXPECT_LT((testing::rotation(ab.alpha, ab.beta) - expect).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
    const AlphaBeta ab = alpha_beta(0, {1.3, Vec3(0, 0, 1)});
    EXPECT_DOUBLE_EQ(ab.alpha, -1.3);
}

TEST(AlphaBeta, FirstTerm) {
    const GateParam prev{1.0, Vec3(0.6, 0, 0.8)};
    EXPECT_DOUBLE_EQ(first_term(0, prev), std::cos(0.5));
    EXPECT_DOUBLE_EQ(first_term(1, prev), 0.6 * std::sin(0.5));
    EXPECT_DOUBLE_EQ(first_term(3, prev), 0.8 * std::sin(0.5));
    EXPECT_THROW(alpha_beta(4, prev), ArgumentError);
    EXPECT_THROW(sigma_mu(-1), ArgumentError);
}

}  // namespace
}  // namespace fqs
