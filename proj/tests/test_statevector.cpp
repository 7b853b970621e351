// Copyright 2026 The falqon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "falqon/statevector.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "falqon/error.hpp"
#include "falqon/hamiltonian.hpp"
#include "test_util.hpp"

namespace falqon {
namespace {

DiagonalHamiltonian k2_diag() { return {2, {0.0, -1.0, -1.0, 0.0}}; }

StateVector random_state(std::size_t n, std::mt19937_64 &gen) {
    std::normal_distribution<double> normal;
    std::vector<Complex> amps(dimension_of(n));
    double s = 0.0;
    for (auto &a : amps) {
        a = {normal(gen), normal(gen)};
        s += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(s);
    }
    return {n, std::move(amps)};
}

void expect_state_near(const StateVector &s, const oracle::Vec &v, double tol) {
    ASSERT_EQ(static_cast<Eigen::Index>(s.dimension()), v.size());
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        EXPECT_NEAR(std::abs(s[i] - v(static_cast<Eigen::Index>(i))), 0.0, tol) << "index " << i;
    }
}

TEST(UniformState, Amplitudes) {
    const auto one = uniform_state(1);
    EXPECT_DOUBLE_EQ(one[0].real(), 0.7071067811865476);
    EXPECT_DOUBLE_EQ(one[1].real(), 0.7071067811865476);

    const auto two = uniform_state(2);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(two[i], Complex(0.5, 0.0));
    }

    const auto eight = uniform_state(8);
    ASSERT_EQ(eight.dimension(), 256U);
    for (std::size_t i = 0; i < 256; ++i) {
        EXPECT_EQ(eight[i], Complex(0.0625, 0.0));
    }
    EXPECT_NEAR(uniform_state(12).norm(), 1.0, 1e-12);
}

TEST(UniformState, RejectsOutOfRange) {
    EXPECT_THROW((void)uniform_state(0), InvalidArgument);
    EXPECT_THROW((void)uniform_state(kMaxQubits + 1), InvalidArgument);
}

TEST(DiagonalPhase, IdentityCases) {
    std::mt19937_64 gen(3);
    const auto psi = random_state(2, gen);
    auto a = psi;
    apply_diagonal_phase(a, k2_diag(), 0.0);
    EXPECT_EQ(a, psi);

    auto b = psi;
    apply_diagonal_phase(b, DiagonalHamiltonian(2, {0, 0, 0, 0}), 0.05);
    EXPECT_EQ(b, psi);
}

TEST(DiagonalPhase, MatchesDenseExponential) {
    auto psi = uniform_state(2);
    apply_diagonal_phase(psi, k2_diag(), 0.05);
    const auto hp = oracle::maxcut(testing::k2());
    const oracle::Vec expected = oracle::evolve(hp, 0.05) * oracle::uniform(2);
    expect_state_near(psi, expected, 1e-12);
}

TEST(DiagonalPhase, DimensionMismatch) {
    auto psi = uniform_state(3);
    EXPECT_THROW(apply_diagonal_phase(psi, k2_diag(), 0.1), InvalidArgument);
}

TEST(XRotations, IdentityAndPiOverTwo) {
    std::mt19937_64 gen(5);
    const auto psi = random_state(3, gen);
    auto same = psi;
    apply_x_rotations(same, driver_x(3), 0.0);
    EXPECT_EQ(same, psi);

    auto zero = basis_state(1, 0);
    apply_x_rotations(zero, driver_x(1), std::numbers::pi / 2);
    EXPECT_NEAR(std::abs(zero[0]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(zero[1] - Complex(0.0, -1.0)), 0.0, 1e-12);
}

TEST(XRotations, MatchesDenseExponential) {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::mt19937_64 gen(11 + n);
        auto psi = n == 2 ? uniform_state(2) : random_state(n, gen);
        const oracle::Vec before = oracle::to_vec(psi);
        apply_x_rotations(psi, driver_x(n), 0.03);
        expect_state_near(psi, oracle::evolve(oracle::driver(n), 0.03) * before, 1e-12);
    }
}

TEST(XRotations, WeightedTerms) {
    const DriverHamiltonian h(2, {{1, 0.5}});
    auto psi = basis_state(2, 0);
    apply_x_rotations(psi, h, 0.4);
    const oracle::Mat dense = 0.5 * oracle::on_qubits(2, {{1, oracle::pauli_x()}});
    expect_state_near(psi, oracle::evolve(dense, 0.4) * oracle::to_vec(basis_state(2, 0)), 1e-12);
}

TEST(XRotations, DimensionMismatch) {
    auto psi = uniform_state(2);
    EXPECT_THROW(apply_x_rotations(psi, driver_x(3), 0.1), InvalidArgument);
}

TEST(Gates, NormPreservationProperty) {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    std::uniform_int_distribution<int> qubits(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(qubits(gen));
        auto psi = random_state(n, gen);
        std::vector<double> d(dimension_of(n));
        for (auto &x : d) {
            x = angle(gen) * 4.0;
        }
        const double before = psi.norm();
        apply_diagonal_phase(psi, DiagonalHamiltonian(n, d), angle(gen));
        EXPECT_NEAR(psi.norm(), before, 1e-12);
        apply_x_rotations(psi, driver_x(n), angle(gen));
        EXPECT_NEAR(psi.norm(), before, 1e-12);
    }
}

TEST(ExpectationDiagonal, Examples) {
    const auto diag = k2_diag();
    for (std::size_t x = 0; x < 4; ++x) {
        EXPECT_EQ(expectation_diagonal(basis_state(2, x), diag), diag[x]);
    }
    EXPECT_DOUBLE_EQ(expectation_diagonal(uniform_state(2), diag), -0.5);

    std::mt19937_64 gen(9);
    const auto psi = random_state(3, gen);
    EXPECT_NEAR(expectation_diagonal(psi, DiagonalHamiltonian(3, std::vector<double>(8, 2.5))), 2.5,
                1e-12);
    EXPECT_THROW((void)expectation_diagonal(uniform_state(3), diag), InvalidArgument);
}

TEST(ExpectationDiagonal, WithinSpectrumProperty) {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> entry(-5.0, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> d(16);
        for (auto &x : d) {
            x = entry(gen);
        }
        const auto v = expectation_diagonal(random_state(4, gen), DiagonalHamiltonian(4, d));
        EXPECT_GE(v, *std::min_element(d.begin(), d.end()) - 1e-12);
        EXPECT_LE(v, *std::max_element(d.begin(), d.end()) + 1e-12);
    }
}

TEST(AValue, VanishesOnEigenstates) {
    const auto diag = k2_diag();
    EXPECT_NEAR(a_value(uniform_state(2), diag, driver_x(2)), 0.0, 1e-15);
    for (std::size_t x = 0; x < 4; ++x) {
        EXPECT_EQ(a_value(basis_state(2, x), diag, driver_x(2)), 0.0);
    }
}

TEST(AValue, MatchesDenseCommutatorAfterOneLayer) {
    auto psi = uniform_state(2);
    apply_diagonal_phase(psi, k2_diag(), 0.05);
    const auto hp = oracle::maxcut(testing::k2());
    const auto expected = oracle::commutator_expectation(oracle::to_vec(psi), oracle::driver(2), hp);
    EXPECT_NEAR(expected.imag(), 0.0, 1e-10);
    EXPECT_NEAR(a_value(psi, k2_diag(), driver_x(2)), expected.real(), 1e-10);
}

TEST(AValue, MatchesDenseCommutatorProperty) {
    std::mt19937_64 gen(77);
    const Graph graphs[] = {testing::k2(), testing::triangle(),
                            Graph(3, {{0, 1, 2.5}, {1, 2, 0.5}})};
    for (const auto &g : graphs) {
        const auto diag = maxcut_hamiltonian(g);
        const auto hp = oracle::maxcut(g);
        const auto hd = oracle::driver(g.n_nodes());
        for (int trial = 0; trial < 20; ++trial) {
            const auto psi = random_state(g.n_nodes(), gen);
            const auto expected = oracle::commutator_expectation(oracle::to_vec(psi), hd, hp);
            EXPECT_NEAR(expected.imag(), 0.0, 1e-10);
            const double a = a_value(psi, diag, driver_x(g.n_nodes()));
            EXPECT_NEAR(a, expected.real(), 1e-10);
            // |A| <= 2 ||H_d|| ||H_p||
            EXPECT_LE(std::abs(a), 2.0 * static_cast<double>(g.n_nodes()) *
                                       oracle::spectral_norm(hp) + 1e-12);
        }
    }
}

TEST(InnerProduct, Examples) {
    std::mt19937_64 gen(1);
    const auto psi = random_state(3, gen);
    EXPECT_NEAR(std::abs(inner_product(psi, psi) - 1.0), 0.0, 1e-12);
    EXPECT_EQ(inner_product(basis_state(2, 1), basis_state(2, 2)), Complex(0.0, 0.0));
    EXPECT_DOUBLE_EQ(inner_product(uniform_state(2), basis_state(2, 3)).real(), 0.5);
    EXPECT_THROW((void)inner_product(uniform_state(2), uniform_state(3)), InvalidArgument);
}

TEST(StateVector, RejectsWrongLength) {
    EXPECT_THROW(StateVector(2, std::vector<Complex>(3)), InvalidArgument);
    EXPECT_THROW((void)basis_state(2, 4), InvalidArgument);
}

} // namespace
} // namespace falqon
