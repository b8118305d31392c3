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

#include <gtest/gtest.h>

#include <random>

#include "fqs/oracle.h"

namespace fqs {
namespace {

std::mt19937_64 rng(99);

double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec3 random_vec() {
    return Vec3(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
}

TEST(Solve1q3p, BeatsParameterGrid) {
    for (int k = 0; k < 50; ++k) {
        const GVector gv{uniform(-1, 1), random_vec()};
        const auto p = solve_1q_3p(gv);
        ASSERT_TRUE(p);
        EXPECT_GE(p->theta, 0);
        EXPECT_LE(p->theta, kTwoPi);
        EXPECT_NEAR(p->axis.norm(), 1, 1e-12);
        const auto grid = grid_argmax_param([&](const GateParam &q) { return objective_1q(gv, q); }, 64, 20, 40);
        EXPECT_GE(objective_1q(gv, *p), grid.value - 1e-9);
        EXPECT_NEAR(objective_1q(gv, *p), std::hypot(gv.g0, gv.g.norm()), 1e-12);
    }
}

TEST(Solve1q3p, FlatAndAxisFallback) {
    EXPECT_FALSE(solve_1q_3p({0, Vec3::Zero()}));
    auto p = solve_1q_3p({-2.0, Vec3::Zero()}, Vec3(0, 1, 0));
    ASSERT_TRUE(p);
    EXPECT_NEAR(objective_1q({-2.0, Vec3::Zero()}, *p), 2.0, 1e-12);
    EXPECT_LT((p->axis - Vec3(0, 1, 0)).norm(), 1e-12);
    p = solve_1q_3p({3.0, Vec3::Zero()});
    ASSERT_TRUE(p);
    EXPECT_NEAR(p->theta, 0, 1e-12);
}

TEST(Solve1q1p, SinusoidArgmax) {
    auto t = solve_1q_1p(0, 1);
    ASSERT_TRUE(t);
    EXPECT_NEAR(*t, kPi, 1e-12);
    const auto grid = grid_argmax_angle([](double x) { return std::sin(x / 2); }, 4096, 2 * kTwoPi);
    EXPECT_NEAR(grid.theta, kPi, kPi / 2048);
    for (int k = 0; k < 200; ++k) {
        const double g0 = uniform(-1, 1), gd = uniform(-1, 1);
        const auto th = solve_1q_1p(g0, gd);
        ASSERT_TRUE(th);
        EXPECT_GE(*th, 0);
        EXPECT_LT(*th, 2 * kTwoPi);
        const auto f = [&](double x) { return g0 * std::cos(x / 2) + gd * std::sin(x / 2); };
        EXPECT_GE(f(*th), grid_argmax_angle(f, 4096, 2 * kTwoPi).value - 1e-9);

        const Vec3 axis = Vec3(0, 1, 0);
        const auto p = solve_fixed_axis(g0, gd, axis);
        ASSERT_TRUE(p);
        EXPECT_LE(p->theta, kTwoPi);
        const double signed_theta = p->axis.dot(axis) > 0 ? p->theta : -p->theta;
        EXPECT_NEAR(f(signed_theta), f(*th), 1e-12);
    }
    EXPECT_FALSE(solve_1q_1p(0, 0));
}

TEST(Solve1q2p, NormalizedG) {
    auto n = solve_1q_2p(Vec3(0, 3, 4));
    ASSERT_TRUE(n);
    EXPECT_LT((*n - Vec3(0, 0.6, 0.8)).norm(), 1e-15);
    EXPECT_FALSE(solve_1q_2p(Vec3::Zero()));
}

TEST(Jacobi, DiagonalizesRandomSymmetric) {
    for (int k = 0; k < 200; ++k) {
        Mat3 a;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                a(i, j) = uniform(-1, 1);
            }
        }
        const Mat3 s = (a + a.transpose()) / 2;
        const SymmetricEigen e = jacobi_eigen(s);
        EXPECT_GE(e.values[0], e.values[1]);
        EXPECT_GE(e.values[1], e.values[2]);
        EXPECT_LE(e.sweeps, 50);
        EXPECT_LT((s * e.vectors - e.vectors * e.values.asDiagonal()).cwiseAbs().maxCoeff(), 1e-11);
        EXPECT_LT((e.vectors.transpose() * e.vectors - Mat3::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Solve2q2p, QuadraticFormMaximum) {
    for (int k = 0; k < 30; ++k) {
        Mat3 g;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                g(i, j) = uniform(-1, 1);
            }
        }
        const GMatrix gm = GMatrix::from_g(g);
        const Vec3 n = solve_2q_2p(gm);
        EXPECT_NEAR(n.norm(), 1, 1e-12);
        const double value = n.dot(gm.s * n);
        const auto grid = grid_argmax_sphere([&](const Vec3 &m) { return m.dot(gm.s * m); }, 10000);
        EXPECT_GE(value, grid.value - 1e-12);
        EXPECT_LT(value - grid.value, 1e-3);
    }
}

TEST(Solve2q2p, DegenerateTieBreak) {
    GMatrix gm = GMatrix::from_g(Mat3::Identity());
    EXPECT_LT((solve_2q_2p(gm) - Vec3(1, 0, 0)).norm(), 1e-12);
    Mat3 s = Mat3::Zero();
    s(1, 1) = s(2, 2) = 2;
    EXPECT_LT((solve_2q_2p(GMatrix::from_g(s)) - Vec3(0, 1, 0)).norm(), 1e-12);
    s = -Mat3::Identity();
    s(2, 2) = 1;
    EXPECT_LT((solve_2q_2p(GMatrix::from_g(s)) - Vec3(0, 0, 1)).norm(), 1e-12);
}

TEST(Solve2q1p, BeatsAngleGrid) {
    for (int k = 0; k < 200; ++k) {
        const HVector h{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
        const auto t = solve_2q_1p(h);
        ASSERT_TRUE(t);
        EXPECT_GE(*t, 0);
        EXPECT_LT(*t, kTwoPi);
        const auto grid = grid_argmax_angle([&](double x) { return objective_2q_1p(h, x); }, 4096);
        EXPECT_GE(objective_2q_1p(h, *t), grid.value - 1e-9);
    }
    EXPECT_FALSE(solve_2q_1p({0.5, 0.2, -0.2, 0.5}));
}

}  // namespace
}  // namespace fqs
