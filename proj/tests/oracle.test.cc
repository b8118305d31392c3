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

#include "fqs/oracle.h"

#include <gtest/gtest.h>

#include "dense_reference.h"

namespace fqs {
namespace {

Statevector random_state(size_t m, std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0, 1);
    std::vector<cdouble> a(size_t{1} << m);
    for (auto &x : a) {
        x = {n(rng), n(rng)};
    }
    Statevector s = Statevector::from_amplitudes(a);
    s.normalize();
    return s;
}

// exp(A) by scaling and squaring of a 30-term Taylor series.
testing::MatX series_expm(const testing::MatX &a) {
    int squarings = 0;
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.5) {
        norm /= 2;
        ++squarings;
    }
    const testing::MatX b = a / std::pow(2.0, squarings);
    testing::MatX term = testing::MatX::Identity(a.rows(), a.cols()), sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * b / static_cast<double>(k);
        sum += term;
    }
    for (int k = 0; k < squarings; ++k) {
        sum = sum * sum;
    }
    return sum;
}

Hamiltonian random_hamiltonian(size_t m, std::mt19937_64 &rng) {
    std::vector<PauliTerm> terms;
    std::uniform_real_distribution<double> c(-1, 1);
    for (int k = 0; k < 8; ++k) {
        terms.push_back(PauliTerm::from_string(c(rng), testing::random_pauli_labels(rng, m)));
    }
    return Hamiltonian(terms);
}

TEST(Ground, SmallCases) {
    OracleResult z = ground(parse_hamiltonian_text("1 Z\n"));
    EXPECT_NEAR(z.ground_energy, -1, 1e-12);
    EXPECT_NEAR(std::norm(z.ground_state[1]), 1, 1e-12);

    OracleResult singlet = ground(Hamiltonian::heisenberg_1d(2, 1, 0, false));
    EXPECT_NEAR(singlet.ground_energy, -3, 1e-10);
    EXPECT_EQ(singlet.ground_degeneracy, 1u);
}

TEST(Ground, ResidualAndHeisenbergFive) {
    const auto h = Hamiltonian::heisenberg_1d(5);
    OracleResult r = ground(h);
    const Statevector hv = apply_hamiltonian(h, r.ground_state);
    testing::VecX res = testing::to_vec(hv) - r.ground_energy * testing::to_vec(r.ground_state);
    EXPECT_LT(res.norm(), 1e-9);
    EXPECT_NEAR(r.ground_energy, -8.47213595499958, 1e-9);
    EXPECT_EQ(r.ground_degeneracy, 2u);
    EXPECT_THROW(ground(h, 4), ResourceError);
}

TEST(ExactEvolve, ZeroTimeAndDiagonalLimit) {
    std::mt19937_64 rng(1);
    const auto h = random_hamiltonian(3, rng);
    const Statevector psi = random_state(3, rng);
    for (TimeKind k : {TimeKind::Imaginary, TimeKind::Real}) {
        EXPECT_NEAR(fidelity(exact_evolve(h, psi, 0, k), psi), 1, 1e-12);
    }
    const Statevector plus = Statevector::from_amplitudes({M_SQRT1_2, M_SQRT1_2});
    const Statevector late = exact_evolve(parse_hamiltonian_text("1 Z\n"), plus, 20, TimeKind::Imaginary);
    EXPECT_NEAR(std::norm(late[1]), 1, 1e-12);
}

TEST(ExactEvolve, MatchesSeriesExponential) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 5; ++trial) {
        const auto h = random_hamiltonian(3, rng);
        const Statevector psi = random_state(3, rng);
        const testing::MatX hm = testing::hamiltonian_matrix(h);
        for (double t : {0.05, 0.3, 1.7}) {
            testing::VecX im = series_expm(-t * hm) * testing::to_vec(psi);
            im /= im.norm();
            const testing::VecX re = series_expm(cdouble(0, -t) * hm) * testing::to_vec(psi);
            const Statevector a = exact_evolve(h, psi, t, TimeKind::Imaginary);
            const Statevector b = exact_evolve(h, psi, t, TimeKind::Real);
            EXPECT_LT((testing::to_vec(a) - im).norm(), 1e-10);
            EXPECT_LT((testing::to_vec(b) - re).norm(), 1e-10);
            EXPECT_NEAR(a.norm(), 1, 1e-12);
            EXPECT_NEAR(b.norm(), 1, 1e-12);
        }
    }
}

TEST(ExactEvolve, ImaginaryTimeLowersEnergyAndReachesGround) {
    std::mt19937_64 rng(3);
    const auto h = Hamiltonian::heisenberg_1d(4, 1, 0.3, true);
    SpectralOracle o(h);
    const Statevector psi = random_state(4, rng);
    double last = energy(h, psi);
    for (double tau = 0.1; tau < 5; tau += 0.1) {
        const double e = energy(h, o.evolve(psi, tau, TimeKind::Imaginary));
        EXPECT_LE(e, last + 1e-12);
        last = e;
    }
    EXPECT_NEAR(o.ground_fidelity(o.evolve(psi, 50, TimeKind::Imaginary)), 1, 1e-6);
}

TEST(Fidelity, Properties) {
    std::mt19937_64 rng(4);
    const Statevector a = random_state(3, rng), b = random_state(3, rng);
    EXPECT_NEAR(fidelity(a, a), 1, 1e-12);
    EXPECT_NEAR(fidelity(Statevector::basis_state(2, 0), Statevector::basis_state(2, 3)), 0, 1e-15);
    EXPECT_DOUBLE_EQ(fidelity(a, b), fidelity(b, a));
    EXPECT_NEAR(fidelity(a, b), std::norm((testing::to_vec(a).adjoint() * testing::to_vec(b))(0, 0)), 1e-14);
    Statevector c = a;
    c.scale(1.5);
    EXPECT_THROW(fidelity(a, c), ContractViolation);
}

TEST(GridOracles, Shapes) {
    const auto pts = fibonacci_sphere(1000);
    ASSERT_EQ(pts.size(), 1000u);
    Vec3 mean = Vec3::Zero();
    for (const auto &p : pts) {
        EXPECT_NEAR(p.norm(), 1, 1e-12);
        mean += p;
    }
    EXPECT_LT(mean.norm() / 1000, 1e-3);
    const auto a = grid_argmax_angle([](double t) { return -std::cos(t); }, 360);
    EXPECT_NEAR(a.theta, kPi, 1e-12);
}

}  // namespace
}  // namespace fqs
