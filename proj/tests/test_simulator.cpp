// Copyright 2026 The Symmetra Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "symmetra/simulator.hpp"

using namespace symmetra;

namespace {

CMatrix hadamard() {
    CMatrix h(2, 2);
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}

CMatrix pauli_x() {
    CMatrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
}

CMatrix pauli_z() {
    CMatrix z(2, 2);
    z << 1, 0, 0, -1;
    return z;
}

CMatrix random_matrix(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0, 1);
    CMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = cplx(n(rng), n(rng));
    return m;
}

}  // namespace

TEST(StateVector, Construction) {
    EXPECT_THROW(StateVector(CVector::Ones(3)), DimensionError);
    EXPECT_THROW(StateVector(CVector::Ones(4)), std::invalid_argument);
    EXPECT_NO_THROW(StateVector(CVector::Ones(4), true));
    EXPECT_EQ(StateVector::basis(3, 5)[5], cplx(1.0));
}

TEST(ApplyOperator, Basics) {
    std::mt19937_64 rng(1);
    const auto psi = StateVector::random(3, rng);
    const Register all{"q", 0, 3};
    auto same = apply_operator(DenseOperator::identity(8), psi, all);
    EXPECT_LE((same.amplitudes() - psi.amplitudes()).norm(), 1e-14);

    const auto plus = apply_operator(DenseOperator(hadamard(), true, true), StateVector(1), Register{"q", 0, 1});
    EXPECT_NEAR(plus[0].real(), 1 / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(plus[1].real(), 1 / std::sqrt(2.0), 1e-14);

    CMatrix swap = CMatrix::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1;
    const auto out = apply_operator(DenseOperator(swap, true, true), StateVector::basis(2, 1), Register{"q", 0, 2});
    EXPECT_EQ(out[2], cplx(1.0));
    EXPECT_THROW(apply_operator(DenseOperator(swap), StateVector(3), Register{"q", 0, 1}), DimensionError);
}

TEST(ControlledApply, Cases) {
    const Register c{"c", 0, 1}, t{"t", 1, 1};
    const DenseOperator x(pauli_x(), true, true);
    auto out = controlled_apply(c, 1, x, StateVector(2), t);
    EXPECT_EQ(out[0], cplx(1.0));
    out = controlled_apply(c, 1, x, StateVector::basis(2, 2), t);
    EXPECT_EQ(out[3], cplx(1.0));
    const auto plus0 = apply_operator(DenseOperator(hadamard(), true, true), StateVector(2), c);
    out = controlled_apply(c, 1, x, plus0, t);
    EXPECT_NEAR(out[0].real(), 1 / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(out[3].real(), 1 / std::sqrt(2.0), 1e-14);
    EXPECT_THROW(controlled_apply(c, 2, x, plus0, t), DimensionError);
}

TEST(Measure, PostSelection) {
    const Register q0{"q0", 0, 1};
    EXPECT_NEAR(measure_register(StateVector(2), q0, 0).probability, 1.0, 1e-14);
    CVector bell = CVector::Zero(4);
    bell[0] = bell[3] = 1 / std::sqrt(2.0);
    const auto r = measure_register(StateVector(bell), q0, 1);
    EXPECT_NEAR(r.probability, 0.5, 1e-14);
    EXPECT_NEAR(std::abs(r.state[3]), 1.0, 1e-14);
    EXPECT_THROW(measure_register(StateVector(2), q0, 1), ZeroProbabilityError);
    const auto again = measure_register(r, Register{"q1", 1, 1}, 1);
    EXPECT_NEAR(again.probability, 0.5, 1e-14);

    std::mt19937_64 rng(5);
    const auto psi = StateVector::random(6, rng);
    const Register mid{"m", 2, 3};
    double total = 0;
    for (std::uint64_t o = 0; o < 8; ++o) total += project_register(psi, mid, o).amplitudes().squaredNorm();
    EXPECT_NEAR(total, 1.0, 1e-10);
    const auto dist = register_distribution(psi, mid);
    for (std::uint64_t o = 0; o < 8; ++o) {
        EXPECT_NEAR(dist[o], extract_branch(psi, mid, o).amplitudes().squaredNorm(), 1e-12);
    }
}

TEST(Kernels, LocalMatchesKroneckerExpansion) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const auto psi = StateVector::random(8, rng);
        const int offset = trial % 6, width = 1 + trial % 3;
        if (offset + width > 8) continue;
        const Register reg{"r", offset, width};
        CMatrix u = Eigen::HouseholderQR<CMatrix>(random_matrix(1 << width, rng)).householderQ();
        const DenseOperator op(u, false, true);
        const auto local = apply_operator(op, psi, reg);
        const CVector dense = embed_operator(u, 8, reg) * psi.amplitudes();
        EXPECT_LE((local.amplitudes() - dense).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_NEAR(local.norm(), 1.0, 1e-10);
    }
}

TEST(BasisMap, ComposeAndInverse) {
    BasisMap a{{1, 2, 0, 3}, {cplx(0, 1), 1.0, -1.0, 1.0}};
    BasisMap b{{3, 0, 1, 2}, {}};
    const auto ab = a.compose(b);
    EXPECT_LE((ab.dense() - a.dense() * b.dense()).norm(), 1e-14);
    EXPECT_LE((a.inverse().dense() - a.dense().adjoint()).norm(), 1e-14);
    EXPECT_THROW((BasisMap{{0, 0}, {}}).validate(), std::invalid_argument);
}

TEST(Eigensystem, Oracle) {
    const auto z = exact_eigensystem(DenseOperator(pauli_z(), true));
    EXPECT_NEAR(z.values[0], -1, 1e-14);
    EXPECT_NEAR(z.values[1], 1, 1e-14);
    const CMatrix zz = -kron(pauli_z(), pauli_z());
    const auto e = exact_eigensystem(DenseOperator(zz, true));
    EXPECT_NEAR(e.values[0], -1, 1e-14);
    EXPECT_NEAR(e.values[3], 1, 1e-14);
    EXPECT_THROW(exact_eigensystem(DenseOperator(pauli_z())), std::invalid_argument);
    std::mt19937_64 rng(3);
    const CMatrix r = random_matrix(16, rng);
    const CMatrix h = r + r.adjoint();
    const auto es = exact_eigensystem(DenseOperator(h, true));
    for (std::size_t i = 0; i < es.values.size(); ++i) {
        const auto v = es.vectors.col(static_cast<Eigen::Index>(i));
        EXPECT_LE((h * v - es.values[i] * v).norm(), 1e-9);
        if (i) EXPECT_LE(es.values[i - 1], es.values[i]);
    }
}

TEST(Expectation, Values) {
    EXPECT_NEAR(expectation(StateVector(1), DenseOperator(pauli_z(), true)).real(), 1.0, 1e-14);
    const auto plus = apply_operator(DenseOperator(hadamard(), true, true), StateVector(1), Register{"q", 0, 1});
    EXPECT_NEAR(expectation(plus, DenseOperator(pauli_x(), true)).real(), 1.0, 1e-14);
    std::mt19937_64 rng(8);
    const CMatrix r = random_matrix(8, rng);
    const auto psi = StateVector::random(3, rng);
    const auto v = expectation(psi, DenseOperator(CMatrix(r + r.adjoint()), true));
    EXPECT_NEAR(v.imag(), 0.0, 1e-10);
}

TEST(Sampling, DeterministicAndRemainderBucket) {
    const std::vector<double> p{0.25, 0.5};
    const auto a = sample_counts(p, 10000, 7);
    const auto b = sample_counts(p, 10000, 7);
    EXPECT_EQ(a, b);
    ASSERT_EQ(a.size(), 3u);
    EXPECT_EQ(a[0] + a[1] + a[2], 10000u);
    EXPECT_NEAR(a[2] / 10000.0, 0.25, 0.03);
}
