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
#include <random>

#include "symmetra/tgsa.hpp"

using namespace symmetra;

namespace {

std::vector<UnitaryRep> reps_under_test() {
    return {cyclic_shift_rep(3),
            parity_flip_rep(5),
            permutation_rep(2, 2),
            permutation_rep(3, 1),
            permutation_rep(3, 2),
            product_rep(product_group(cyclic_group(4), cyclic_group(2)), site_translation_rep(4), parity_flip_rep(4))};
}

double max_abs(const CMatrix &m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST(PrepareUniform, FirstColumnAndUnitarity) {
    for (std::uint64_t dim = 1; dim <= 16; ++dim) {
        const auto p = prepare_uniform(dim);
        EXPECT_LE(unitarity_defect(p.matrix()), 1e-12);
        for (Eigen::Index i = 0; i < p.matrix().rows(); ++i) {
            const double expected = i < static_cast<Eigen::Index>(dim) ? 1 / std::sqrt(double(dim)) : 0.0;
            EXPECT_NEAR(std::abs(p.matrix()(i, 0) - expected), 0.0, 1e-12);
        }
    }
    EXPECT_EQ(prepare_uniform(3).matrix().rows(), 4);
}

TEST(ClassMixer, CircuitMatchesOracle) {
    const auto rep = permutation_rep(3, 1);
    const auto psi = StateVector::basis(3, 0b001);
    const auto circ = class_mixer_apply(rep, 1, psi);
    const auto dense = class_mixer_apply_via_oracle(rep, 1, psi);
    EXPECT_NEAR(circ.probability, dense.probability, 1e-12);
    EXPECT_LE((circ.state.amplitudes() - dense.state.amplitudes()).norm(), 1e-12);
    // (1/3)(SWAP12 + SWAP13 + SWAP23)|001> = (1/3)(|001> + |100> + |010>).
    EXPECT_NEAR(circ.probability, 3.0 / 9.0, 1e-12);

    const auto id = class_mixer_apply(rep, 0, psi);
    EXPECT_NEAR(id.probability, 1.0, 1e-12);
    CVector sym = CVector::Zero(8);
    sym[0b011] = sym[0b101] = sym[0b110] = 1 / std::sqrt(3.0);
    EXPECT_NEAR(class_mixer_apply(rep, 1, StateVector(sym)).probability, 1.0, 1e-12);
}

TEST(ClassMixer, Central) {
    for (const auto &rep : reps_under_test()) {
        const auto &g = rep.group();
        for (std::size_t c = 0; c < g.num_classes(); ++c) {
            const auto mix = class_mixer_matrix(rep, c);
            for (std::size_t h = 0; h < g.order(); h += std::max<std::size_t>(1, g.order() / 7)) {
                EXPECT_LE(max_abs(mix * rep.matrix(h) - rep.matrix(h) * mix), 1e-10);
            }
        }
    }
}

TEST(Select, CircuitMatchesOracle) {
    std::mt19937_64 rng(17);
    for (const auto &rep : reps_under_test()) {
        const int anc = ceil_log2(rep.group().num_classes());
        const auto psi = StateVector::random(anc + rep.n_qubits(), rng);
        const auto a = select_over_classes(rep, psi);
        const auto b = select_over_classes_via_oracle(rep, psi);
        EXPECT_NEAR(a.probability, b.probability, 1e-10) << rep.name();
        EXPECT_LE((a.state.amplitudes() - b.state.amplitudes()).norm(), 1e-10) << rep.name();
    }
}

TEST(Select, CyclicShiftByAncilla) {
    const auto rep = cyclic_shift_rep(3);
    for (std::uint64_t v = 0; v < 8; ++v) {
        const auto out = select_over_classes(rep, StateVector::basis(6, (v << 3) | 2));
        EXPECT_NEAR(std::abs(out.state[(v << 3) | ((2 + v) % 8)]), 1.0, 1e-12);
    }
}

TEST(Tgsa, CircuitMatchesOracleOnRandomStates) {
    std::mt19937_64 rng(99);
    for (const auto &rep : reps_under_test()) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto psi = StateVector::random(rep.n_qubits(), rng);
            const auto circ = tgsa_apply(rep, psi);
            const auto dense = tgsa_apply_via_oracle(rep, psi);
            EXPECT_LE((circ.joint.amplitudes() - dense.joint.amplitudes()).norm(), 1e-10) << rep.name();
            for (std::size_t k = 0; k < circ.branches.size(); ++k) {
                const auto p = projector_matrix(rep, k).matrix();
                const double a = (p * psi.amplitudes()).norm() / circ.branches[k].dim;
                EXPECT_NEAR(circ.branches[k].probability, a * a, 1e-10);
            }
        }
    }
}

TEST(Tgsa, S2IsSwapTest) {
    std::mt19937_64 rng(4);
    const auto rep = permutation_rep(2, 2);
    const auto psi = StateVector::random(4, rng);
    const auto out = tgsa_apply(rep, psi);
    const CVector swapped = rep.matrix(1) * psi.amplitudes();
    CVector expected(32);
    expected.head(16) = (psi.amplitudes() + swapped) / 2.0;
    expected.tail(16) = (psi.amplitudes() - swapped) / 2.0;
    EXPECT_LE((out.joint.amplitudes() - expected).norm(), 1e-12);
    EXPECT_NEAR(out.prep_probability, 1.0, 1e-12);
}

TEST(Projector, Algebra) {
    for (const auto &rep : reps_under_test()) {
        const auto &g = rep.group();
        const auto d = static_cast<Eigen::Index>(rep.dim());
        CMatrix sum = CMatrix::Zero(d, d);
        std::vector<CMatrix> ps;
        for (std::size_t k = 0; k < g.num_classes(); ++k) ps.push_back(projector_matrix(rep, k).matrix());
        for (std::size_t k = 0; k < ps.size(); ++k) {
            EXPECT_LE(max_abs(ps[k] * ps[k] - ps[k]), 1e-10);
            EXPECT_LE(hermiticity_defect(ps[k]), 1e-10);
            for (std::size_t l = 0; l < ps.size(); ++l) {
                if (l != k) EXPECT_LE(max_abs(ps[k] * ps[l]), 1e-10);
            }
            const double mult = ps[k].trace().real() / g.irreps()[k].dim;
            EXPECT_NEAR(mult, std::round(mult), 1e-8);
            EXPECT_GE(std::round(mult), 0.0);
            sum += ps[k];
        }
        EXPECT_LE(max_abs(sum - CMatrix::Identity(d, d)), 1e-10) << rep.name();
    }
    const auto s2 = permutation_rep(2, 2);
    const CMatrix sym = (CMatrix::Identity(16, 16) + s2.matrix(1)) / 2.0;
    EXPECT_LE(max_abs(projector_matrix(s2, 0).matrix() - sym), 1e-12);
}

TEST(ProjectAndPostselect, Probabilities) {
    const auto rep = permutation_rep(3, 1);
    const auto sym = project_and_postselect(rep, 0, StateVector(3));
    EXPECT_NEAR(sym.probability, 1.0, 1e-12);
    std::mt19937_64 rng(23);
    const auto psi = StateVector::random(6, rng);
    const auto rep2 = permutation_rep(3, 2);
    for (std::size_t k = 0; k < 3; ++k) {
        const auto r = project_and_postselect(rep2, k, psi);
        const double a = (projector_matrix(rep2, k).matrix() * psi.amplitudes()).norm();
        const int d = rep2.group().irreps()[k].dim;
        EXPECT_NEAR(r.probability, a * a / (d * d), 1e-10);
    }
    EXPECT_THROW(project_and_postselect(rep, 1, StateVector(3)), ZeroProbabilityError);
}

TEST(PrepareProjection, Abelian) {
    const auto rep = cyclic_shift_rep(3);
    CVector flat = CVector::Constant(8, 1 / std::sqrt(8.0));
    const auto inv = prepare_projection_abelian(rep, StateVector(flat));
    EXPECT_NEAR(inv.branches[0].probability, 1.0, 1e-12);

    const auto par = prepare_projection_abelian(parity_flip_rep(3), StateVector(3));
    EXPECT_NEAR(par.branches[0].probability, 0.5, 1e-12);
    EXPECT_NEAR(par.branches[1].probability, 0.5, 1e-12);

    std::mt19937_64 rng(5);
    const auto psi = StateVector::random(3, rng);
    const auto out = prepare_projection_abelian(rep, psi);
    for (std::size_t k = 0; k < 8; ++k) {
        const CVector expected = projector_matrix(rep, k).matrix() * psi.amplitudes();
        const CVector got = out.joint.amplitudes().segment(static_cast<Eigen::Index>(k) * 8, 8);
        EXPECT_LE((got - expected).norm(), 1e-10);
    }
    EXPECT_THROW(prepare_projection_abelian(permutation_rep(3, 1), StateVector(3)), std::invalid_argument);
}

TEST(Sampling, BranchCountsWithinStandardErrors) {
    std::mt19937_64 rng(77);
    const auto rep = permutation_rep(3, 1);
    const auto out = tgsa_apply(rep, StateVector::random(3, rng));
    const std::uint64_t shots = 100000;
    const auto counts = sample_branches(out, shots, 1234);
    ASSERT_EQ(counts.size(), out.branches.size() + 1);
    for (std::size_t k = 0; k < out.branches.size(); ++k) {
        const double p = out.branches[k].probability;
        const double se = std::sqrt(p * (1 - p) / shots);
        EXPECT_LE(std::abs(counts[k] / double(shots) - p), 4 * se + 1e-12);
    }
}
