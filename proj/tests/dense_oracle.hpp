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
#pragma once

// Dense-matrix reference implementations for small registers. These build
// every operator from Kronecker products of 2x2 Pauli matrices and use
// Eigen's matrix exponential, so they share no code path with the library.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "falqon/graph.hpp"
#include "falqon/statevector.hpp"

namespace falqon::oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Mat pauli_x() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline Mat pauli_z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

/// Operator acting as `ops[q]` on qubit q (identity elsewhere). Qubit 0 is
/// the least significant bit, i.e. the rightmost Kronecker factor.
inline Mat on_qubits(std::size_t n, const std::vector<std::pair<std::size_t, Mat>> &ops) {
    Mat out = Mat::Identity(1, 1);
    for (std::size_t k = n; k-- > 0;) {
        Mat factor = Mat::Identity(2, 2);
        for (const auto &[q, m] : ops) {
            if (q == k) {
                factor = m;
            }
        }
        out = kron(out, factor);
    }
    return out;
}

inline Mat driver(std::size_t n) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Mat h = Mat::Zero(dim, dim);
    for (std::size_t q = 0; q < n; ++q) {
        h += on_qubits(n, {{q, pauli_x()}});
    }
    return h;
}

/// sum over edges of w (Z_u Z_v - I) / 2.
inline Mat maxcut(const Graph &g) {
    const std::size_t n = g.n_nodes();
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Mat h = Mat::Zero(dim, dim);
    for (const auto &e : g.edges()) {
        h += e.weight * 0.5 * (on_qubits(n, {{e.u, pauli_z()}, {e.v, pauli_z()}}) - Mat::Identity(dim, dim));
    }
    return h;
}

inline Mat diagonal(std::span<const double> d) {
    Mat h = Mat::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) {
        h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
    }
    return h;
}

/// exp(-i t H).
inline Mat evolve(const Mat &h, double t) {
    const Mat generator = std::complex<double>(0.0, -t) * h;
    return generator.exp();
}

inline Vec to_vec(const StateVector &s) {
    Vec v(static_cast<Eigen::Index>(s.dimension()));
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s[i];
    }
    return v;
}

inline Vec uniform(std::size_t n) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    return Vec::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
}

/// <psi| i[H_d, H_p] |psi>, keeping the imaginary part for inspection.
inline std::complex<double> commutator_expectation(const Vec &psi, const Mat &hd, const Mat &hp) {
    const Mat c = std::complex<double>(0.0, 1.0) * (hd * hp - hp * hd);
    return psi.dot(c * psi);
}

/// Largest |eigenvalue| of a Hermitian matrix.
inline double spectral_norm(const Mat &h) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(h);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

/// Reference feedback loop on dense matrices: beta_1 = 0,
/// beta_{t+1} = -w A_t / (2 lambda). Returns per-layer costs.
struct DenseRun {
    std::vector<double> costs;
    std::vector<double> betas;
    std::vector<double> a;
    Vec state;
};

inline DenseRun feedback_loop(const Mat &hp, const Mat &hd, std::size_t n, double dt,
                              std::size_t depth, double lambda, double w = 1.0) {
    DenseRun out;
    Vec psi = uniform(n);
    const Mat up = evolve(hp, dt);
    double beta = 0.0;
    for (std::size_t t = 0; t < depth; ++t) {
        psi = evolve(hd, beta * dt) * (up * psi);
        const double a = commutator_expectation(psi, hd, hp).real();
        out.betas.push_back(beta);
        out.a.push_back(a);
        out.costs.push_back(psi.dot(hp * psi).real());
        beta = -w * a / (2.0 * lambda);
    }
    out.state = psi;
    return out;
}

} // namespace falqon::oracle
