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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "symmetra/models.hpp"

using namespace symmetra;

namespace {

constexpr double kPi = std::numbers::pi;

CMatrix pauli(char c) {
    CMatrix m(2, 2);
    switch (c) {
        case 'X': m << 0, 1, 1, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: m = CMatrix::Identity(2, 2);
    }
    return m;
}

// Kronecker string with `c` on the listed sites, identity elsewhere.
CMatrix pauli_string(int n, const std::vector<std::pair<int, char>> &ops) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        char c = 'I';
        for (const auto &[site, p] : ops) {
            if (site == q) c = p;
        }
        out = kron(out, pauli(c));
    }
    return out;
}

std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}

double max_diff(const std::vector<double> &a, const std::vector<double> &b) {
    EXPECT_EQ(a.size(), b.size());
    double w = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) w = std::max(w, std::abs(a[i] - b[i]));
    return w;
}

double commutator(const CMatrix &a, const CMatrix &b) { return (a * b - b * a).cwiseAbs().maxCoeff(); }

std::uint64_t h2_index(int o1, int s1, int o2, int s2) { return static_cast<std::uint64_t>(o1 * 8 + s1 * 4 + o2 * 2 + s2); }

H2Integrals sample_integrals() { return H2Integrals::from_json_file(std::string(SYMMETRA_SOURCE_DIR) + "/configs/h2_sto3g.json"); }

}  // namespace

// ---- Ising ------------------------------------------------------------------

TEST(Ising, TwoSiteMatchesHandKronecker) {
    const auto m = ising_hamiltonian(2, {0, 0}, {0, 0}, 1.0);
    // Periodic N = 2 has two bonds, both Z0 Z1.
    const CMatrix hand = -2.0 * kron(pauli('Z'), pauli('Z'));
    EXPECT_LE((m.h.matrix() - hand).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE(max_diff(exact_eigensystem(m.h).values, {-2, -2, 2, 2}), 1e-12);
}

TEST(Ising, MatchesPauliStringConstruction) {
    const int n = 4;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> a(n), w(n);
    for (auto &x : a) x = u(rng);
    for (auto &x : w) x = u(rng);
    const double j = 0.7;
    CMatrix hand = CMatrix::Zero(16, 16);
    for (int q = 0; q < n; ++q) {
        hand -= a[q] * pauli_string(n, {{q, 'X'}});
        hand -= j * pauli_string(n, {{q, 'Z'}, {(q + 1) % n, 'Z'}});
        hand -= w[q] * pauli_string(n, {{q, 'Z'}});
    }
    const auto m = ising_hamiltonian(n, a, w, j);
    EXPECT_LE((m.h.matrix() - hand).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE(hermiticity_defect(m.h.matrix()), 1e-14);
}

TEST(Ising, SymmetryAndNegativeControl) {
    const int n = 6;
    const std::vector<double> a(n, 0.8), zero(n, 0.0);
    const auto sym = ising_hamiltonian(n, a, zero, 1.0);
    EXPECT_NO_THROW(check_symmetry(*sym.symmetry, sym.h));
    std::vector<double> w(n, 0.0);
    w[2] = 0.3;
    const auto broken = ising_hamiltonian(n, a, w, 1.0);
    EXPECT_THROW(check_symmetry(*broken.symmetry, broken.h), SymmetryError);
    const CMatrix parity = parity_flip_rep(n).matrix(1);
    EXPECT_GT(commutator(broken.h.matrix(), parity), 1e-3);
    EXPECT_THROW(ising_hamiltonian(13, std::vector<double>(13), std::vector<double>(13), 1.0), std::length_error);
}

TEST(Ising, ProjectorsFactorAndComplete) {
    const int n = 4;
    const auto ps = ising_symmetry_projectors(n);
    ASSERT_EQ(ps.size(), 8u);
    const auto t = site_translation_rep(n);
    const auto flip = parity_flip_rep(n);
    CMatrix sum = CMatrix::Zero(16, 16);
    for (int k = 0; k < n; ++k) {
        CMatrix r = CMatrix::Zero(16, 16);
        for (int v = 0; v < n; ++v) r += std::polar(1.0, 2 * kPi * k * v / n) * t.matrix(static_cast<std::size_t>(v));
        r /= n;
        for (int s = 0; s < 2; ++s) {
            const CMatrix q = (CMatrix::Identity(16, 16) + (s ? -1.0 : 1.0) * flip.matrix(1)) / 2.0;
            const auto &p = ps[ising_irrep(k, s)].matrix();
            EXPECT_LE((p - r * q).cwiseAbs().maxCoeff(), 1e-12) << k << s;
            sum += p;
        }
    }
    EXPECT_LE((sum - CMatrix::Identity(16, 16)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Ising, AllUpGivesGhz) {
    const int n = 5;
    const auto ps = ising_symmetry_projectors(n);
    const CVector zero = StateVector(n).amplitudes();
    const auto top = static_cast<Eigen::Index>((1u << n) - 1);
    for (int s = 0; s < 2; ++s) {
        const CVector out = ps[ising_irrep(0, s)].matrix() * zero;
        EXPECT_NEAR(std::abs(out[0] - 0.5), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(out[top] - (s ? -0.5 : 0.5)), 0.0, 1e-12);
        EXPECT_NEAR(out.norm(), std::sqrt(0.5), 1e-12);
    }
    for (int k = 1; k < n; ++k) EXPECT_LE((ps[ising_irrep(k, 0)].matrix() * zero).norm(), 1e-12);
}

TEST(Ising, DomainWallHasDefiniteMomentumAndParity) {
    const int n = 4;
    const auto ps = ising_symmetry_projectors(n);
    const auto t = site_translation_rep(n);
    const auto wall = StateVector::basis(n, 0b1100);
    const auto flipped = StateVector::basis(n, 0b0011);
    for (int k = 0; k < n; ++k) {
        for (int s = 0; s < 2; ++s) {
            // (1/2N) sum_v e^{2 pi i k v / N} T^v (|1100> + (-1)^s |0011>).
            CVector expected = CVector::Zero(16);
            for (int v = 0; v < n; ++v) {
                const cplx ph = std::polar(1.0, 2 * kPi * k * v / n);
                expected += ph * t.apply(static_cast<std::size_t>(v), wall).amplitudes();
                expected += (s ? -1.0 : 1.0) * ph * t.apply(static_cast<std::size_t>(v), flipped).amplitudes();
            }
            expected /= 2.0 * n;
            const CVector got = ps[ising_irrep(k, s)].matrix() * wall.amplitudes();
            EXPECT_LE((got - expected).norm(), 1e-12);
            // Translation acts on the projected state as the phase e^{-2 pi i k / N}.
            if (got.norm() > 1e-9) {
                const CVector shifted = t.apply(1, StateVector(got, true)).amplitudes();
                EXPECT_LE((shifted - std::polar(1.0, -2 * kPi * k / n) * got).norm(), 1e-12);
            }
        }
    }
}

TEST(Ising, LongitudinalFieldIsEliminated) {
    const int n = 8;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> a(n), w(n);
    for (auto &x : a) x = u(rng);
    for (auto &x : w) x = u(rng);
    const auto longitudinal = ising_hamiltonian(n, std::vector<double>(n, 0.0), w, 0.0);
    const auto full = ising_hamiltonian(n, a, w, 0.9);
    const auto a_only = ising_hamiltonian(n, a, std::vector<double>(n, 0.0), 0.9);
    const auto ps = ising_symmetry_projectors(n);
    for (const auto &p : ps) {
        EXPECT_LE(op_norm(p.matrix() * longitudinal.h.matrix() * p.matrix()), 1e-10);
    }
    // The block of the full H equals the block without the longitudinal term.
    for (int k : {0, 3}) {
        const auto b1 = ising_projected_block(full.h, n, k, 1).matrix();
        const auto b2 = ising_projected_block(a_only.h, n, k, 1).matrix();
        EXPECT_LE((b1 - b2).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Ising, BlockSpectraPartitionFullSpectrum) {
    const int n = 6;
    const auto m = ising_hamiltonian(n, std::vector<double>(n, 0.6), std::vector<double>(n, 0.0), 1.0);
    std::vector<double> all;
    for (int k = 0; k < n; ++k) {
        for (int s = 0; s < 2; ++s) {
            const auto v = ising_block_spectrum(m.h, n, k, s);
            all.insert(all.end(), v.begin(), v.end());
        }
    }
    EXPECT_LE(max_diff(sorted(all), exact_eigensystem(m.h).values), 1e-9);
}

TEST(Ising, GhzIsEigenstateWithoutTransverseField) {
    const int n = 5;
    const auto m = ising_hamiltonian(n, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 1.3);
    for (double sign : {1.0, -1.0}) {
        CVector ghz = CVector::Zero(32);
        ghz[0] = 1 / std::sqrt(2.0);
        ghz[31] = sign / std::sqrt(2.0);
        EXPECT_LE((m.h.matrix() * ghz + 1.3 * n * ghz).norm(), 1e-12);
    }
}

// ---- Harper -------------------------------------------------------------------

TEST(Harper, ZeroFluxIsTwoRings) {
    for (int m : {1, 2, 3}) {
        const double jx = 0.9, jy = 0.4;
        const int side = 1 << m;
        std::vector<double> expected;
        for (int p = 0; p < side; ++p)
            for (int q = 0; q < side; ++q)
                expected.push_back(2 * jx * std::cos(2 * kPi * p / side) + 2 * jy * std::cos(2 * kPi * q / side));
        const auto h = harper_hamiltonian(m, 0.0, jx, jy);
        EXPECT_LE(max_diff(exact_eigensystem(h.h).values, sorted(expected)), 1e-10) << m;
    }
}

TEST(Harper, HalfFluxAnticommutes) {
    const auto mt = magnetic_translation_reps(2, Rational{1, 2});
    const CMatrix u = mt.u.dense(), v = mt.v.dense();
    EXPECT_LE((u * v + v * u).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Harper, HermitianAndTranslationInvariant) {
    for (double b : {0.0, 0.5, 1.0 / 3.0, 0.123}) {
        const auto h = harper_hamiltonian(3, b, 1.0, 0.7);
        EXPECT_LE(hermiticity_defect(h.h.matrix()), 1e-12);
        EXPECT_NO_THROW(check_symmetry(*h.symmetry, h.h));
    }
}

TEST(Harper, QftOnYBlockDiagonalizes) {
    for (double b : {0.0, 0.5, 1.0 / 3.0, 0.123}) {
        EXPECT_LE(harper_block_residual(3, b, 1.0, 0.7), 1e-10) << b;
        std::vector<double> all;
        for (const auto &blk : harper_momentum_blocks(3, b, 1.0, 0.7)) {
            const auto v = exact_eigensystem(blk).values;
            all.insert(all.end(), v.begin(), v.end());
        }
        EXPECT_LE(max_diff(sorted(all), exact_eigensystem(harper_hamiltonian(3, b, 1.0, 0.7).h).values), 1e-9);
    }
}

TEST(Harper, ZeroFluxZeroMomentumBlock) {
    const double jx = 0.9, jy = 0.4;
    const auto blk = harper_momentum_blocks(2, 0.0, jx, jy)[0].matrix();
    CMatrix ring = CMatrix::Zero(4, 4);
    for (int x = 0; x < 4; ++x) ring(x, (x + 1) % 4) = ring((x + 1) % 4, x) = jx;
    EXPECT_LE((blk - ring - 2 * jy * CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Harper, PseudoSpinMatchesBlocks) {
    const int m = 3;
    const double jx = 0.8, jy = 0.55;
    const auto blocks = harper_momentum_blocks(m, 0.5, jx, jy);
    for (int k = 0; k < 8; ++k) {
        const auto ps = harper_pseudospin_half(m, k, jx, jy);
        EXPECT_LE(max_diff(exact_eigensystem(ps).values, exact_eigensystem(blocks[static_cast<std::size_t>(k)]).values),
                  1e-10)
            << k;
        // Even and odd sublattice potentials are opposite.
        const auto &mat = ps.matrix();
        for (Eigen::Index c = 0; c < 4; ++c) EXPECT_NEAR(mat(2 * c, 2 * c).real(), -mat(2 * c + 1, 2 * c + 1).real(), 1e-14);
    }
}

TEST(Harper, PseudoSpinWithoutHoppingIsFlatPair) {
    const int m = 2;
    const double jy = 0.6;
    for (int k = 0; k < 4; ++k) {
        const auto v = exact_eigensystem(harper_pseudospin_half(m, k, 0.0, jy)).values;
        const double e = std::abs(2 * jy * std::cos(2 * kPi * k / 4));
        EXPECT_LE(max_diff(v, {-e, -e, e, e}), 1e-12);
    }
}

TEST(Harper, ButterflySweep) {
    const auto pts = harper_butterfly(3, 16, 1.0, 1.0);
    // Farey sequence F_16 has 1 + sum_{q<=16} phi(q) = 81 terms.
    EXPECT_EQ(pts.size(), 81u);
    for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LT(pts[i - 1].b, pts[i].b);
    for (const auto &p : pts) {
        EXPECT_EQ(p.energies.size(), 64u);
        EXPECT_LE(p.union_residual, 1e-9) << p.p << "/" << p.q;
    }
}

// ---- H2 -----------------------------------------------------------------------

TEST(H2, NonInteractingSpectrum) {
    const auto ints = H2Integrals::from_coulomb_exchange(-1.0, -0.3, 0, 0, 0, 0);
    const auto v = exact_eigensystem(h2_hamiltonian(ints).h).values;
    std::vector<double> expected;
    for (double a : {-1.0, -0.3})
        for (double b : {-1.0, -0.3})
            for (int s = 0; s < 4; ++s) expected.push_back(a + b);
    EXPECT_LE(max_diff(v, sorted(expected)), 1e-12);
}

TEST(H2, SymmetriesCommute) {
    const auto m = h2_hamiltonian(sample_integrals());
    EXPECT_LE(hermiticity_defect(m.h.matrix()), 1e-14);
    EXPECT_NO_THROW(check_symmetry(*m.symmetry, m.h));
    EXPECT_LE(commutator(m.h.matrix(), h2_exchange_rep().matrix(1)), 1e-12);
    const CMatrix spin_flip = pauli_string(4, {{1, 'X'}, {3, 'X'}});
    EXPECT_LE(commutator(m.h.matrix(), spin_flip), 1e-12);
}

TEST(H2, SectorSpectraFromCoulombExchange) {
    const double hg = -1.2528, hu = -0.4756, jgg = 0.6746, juu = 0.6975, jgu = 0.6636, kgu = 0.1813;
    const auto m = h2_hamiltonian(H2Integrals::from_coulomb_exchange(hg, hu, jgg, juu, jgu, kgu));
    const auto rep = h2_sector_rep();
    std::vector<std::vector<double>> spec(4);
    for (std::size_t g = 0; g < 4; ++g) spec[g] = restricted_spectrum(m.h, projector_matrix(rep, g));
    EXPECT_EQ(spec[0].size(), 9u);
    EXPECT_EQ(spec[1].size(), 1u);
    EXPECT_EQ(spec[2].size(), 3u);
    EXPECT_EQ(spec[3].size(), 3u);
    // Fermion triplet: three-fold degenerate open shell at h_g + h_u + J - K.
    const double t = hg + hu + jgu - kgu;
    EXPECT_LE(max_diff(spec[2], {t, t, t}), 1e-12);
    // Fermion singlet: open shell at h_g + h_u + J + K and the gg/uu 2x2 block.
    const double a = 2 * hg + jgg, d = 2 * hu + juu;
    const double mid = (a + d) / 2, rad = std::sqrt((a - d) * (a - d) / 4 + kgu * kgu);
    EXPECT_LE(max_diff(spec[3], sorted({mid - rad, mid + rad, hg + hu + jgu + kgu})), 1e-12);
    // Open-shell singlet/triplet gap.
    EXPECT_NEAR((hg + hu + jgu + kgu) - t, 2 * kgu, 1e-15);
    // Triplet eigenvalues come in degenerate triples.
    for (std::size_t i = 0; i + 2 < spec[0].size(); i += 3) EXPECT_NEAR(spec[0][i], spec[0][i + 2], 1e-9);
}

TEST(H2, IntegralsValidation) {
    auto ints = sample_integrals();
    EXPECT_LE(ints.symmetry_defect(), 0.0);
    EXPECT_NEAR(ints.h[0], -1.2528, 1e-15);
    EXPECT_NEAR(ints.g[0][0][1][1], 0.1813, 1e-15);
    ints.g[0][1][1][0] += 0.01;
    EXPECT_THROW(h2_hamiltonian(ints), std::invalid_argument);

    std::string full = R"({"h": [-1.0, -0.5], "g": [)";
    const auto ref = H2Integrals::from_coulomb_exchange(-1.0, -0.5, 0.6, 0.7, 0.65, 0.18);
    for (int i = 0; i < 16; ++i) {
        full += std::to_string(ref.g[(i >> 3) & 1][(i >> 2) & 1][(i >> 1) & 1][i & 1]) + (i < 15 ? "," : "]}");
    }
    const auto parsed = H2Integrals::from_json_text(full);
    EXPECT_LE((h2_hamiltonian(parsed).h.matrix() - h2_hamiltonian(ref).h.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(H2, ChainedLabelMatchesProductGroup) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const auto psi = StateVector::random(4, rng);
        const auto chained = h2_sector_label(psi);
        const auto direct = tgsa_apply(h2_sector_rep(), psi);
        ASSERT_EQ(direct.n_anc, 2);
        EXPECT_LE((chained.joint.amplitudes() - direct.joint.amplitudes()).norm(), 1e-12);
        for (std::size_t g = 0; g < 4; ++g) {
            EXPECT_NEAR(chained.branches[g].probability, direct.branches[g].probability, 1e-12);
            EXPECT_EQ(chained.branches[g].label, h2_sector_name(g));
        }
    }
}

TEST(H2, ProductStateFermionicBranch) {
    // (I (x) ZH (x) X (x) H)|0000>.
    CMatrix had(2, 2);
    had << 1, 1, 1, -1;
    had /= std::sqrt(2.0);
    const CMatrix prep = kron(kron(kron(pauli('I'), pauli('Z') * had), pauli('X')), had);
    const StateVector psi(CVector(prep * StateVector(4).amplitudes()));

    // 1/4 [(|12> - |21>)(|uu> - |dd>) + (|12> + |21>)(|ud> - |du>)].
    CVector expected = CVector::Zero(16);
    auto add = [&](int o1, int o2, int s1, int s2, double c) { expected[static_cast<Eigen::Index>(h2_index(o1, s1, o2, s2))] += c; };
    for (auto [o1, o2, so] : {std::tuple{0, 1, 1.0}, std::tuple{1, 0, -1.0}}) {
        add(o1, o2, 0, 0, 0.25 * so);
        add(o1, o2, 1, 1, -0.25 * so);
    }
    for (auto [o1, o2] : {std::pair{0, 1}, std::pair{1, 0}}) {
        add(o1, o2, 0, 1, 0.25);
        add(o1, o2, 1, 0, -0.25);
    }
    const auto out = tgsa_apply(h2_exchange_rep(), psi);
    const CVector fermion = extract_branch(out.joint, Register{"anc", 0, 1}, 1).amplitudes();
    EXPECT_LE((fermion - expected).cwiseAbs().maxCoeff(), 1e-12);

    // Spin labeling splits it into the two lines: triplet then singlet.
    const auto labeled = h2_sector_label(psi);
    const CVector triplet = extract_branch(labeled.joint, Register{"anc", 0, 2}, 2).amplitudes();
    const CVector singlet = extract_branch(labeled.joint, Register{"anc", 0, 2}, 3).amplitudes();
    EXPECT_LE((triplet + singlet - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(std::abs(triplet[static_cast<Eigen::Index>(h2_index(0, 0, 1, 0))]), 0.25, 1e-12);
    EXPECT_NEAR(std::abs(singlet[static_cast<Eigen::Index>(h2_index(0, 0, 1, 1))]), 0.25, 1e-12);
    EXPECT_LE(std::abs(triplet[static_cast<Eigen::Index>(h2_index(0, 0, 1, 1))]), 1e-12);
}

TEST(H2, SameOrbitalPairs) {
    // |g up> (x) |g down> -> fermionic part is the closed-shell singlet.
    const auto out = tgsa_apply(h2_exchange_rep(), StateVector::basis(4, h2_index(0, 0, 0, 1)));
    const CVector fermion = extract_branch(out.joint, Register{"anc", 0, 1}, 1).amplitudes();
    CVector expected = CVector::Zero(16);
    expected[static_cast<Eigen::Index>(h2_index(0, 0, 0, 1))] = 0.5;
    expected[static_cast<Eigen::Index>(h2_index(0, 1, 0, 0))] = -0.5;
    EXPECT_LE((fermion - expected).cwiseAbs().maxCoeff(), 1e-12);
    const auto labeled = h2_sector_label(StateVector::basis(4, h2_index(0, 0, 0, 1)));
    EXPECT_NEAR(labeled.branches[3].probability, 0.5, 1e-12);
    EXPECT_LE(labeled.branches[2].probability, 1e-12);

    // |g up> (x) |g up> has no fermionic component.
    const auto pauli_blocked = tgsa_apply(h2_exchange_rep(), StateVector::basis(4, h2_index(0, 0, 0, 0)));
    EXPECT_LE(pauli_blocked.branches[1].probability, 1e-12);
    EXPECT_FALSE(pauli_blocked.branches[1].state.has_value());
}

// ---- Three particles ------------------------------------------------------------

TEST(ThreeParticles, Ranks) {
    const std::array<std::array<int, 3>, 4> expected = {{{1, 0, 0}, {4, 0, 4}, {10, 1, 16}, {20, 4, 40}}};
    for (int d = 1; d <= 4; ++d) {
        const auto tp = three_particle_projectors(d);
        CMatrix sum = CMatrix::Zero(tp.p[0].rows(), tp.p[0].cols());
        for (int g = 0; g < 3; ++g) {
            EXPECT_EQ(numerical_rank(tp.p[static_cast<std::size_t>(g)]), expected[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(g)]) << d;
            sum += tp.p[static_cast<std::size_t>(g)];
        }
        EXPECT_LE((sum - CMatrix::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff(), 1e-12);
    }
    EXPECT_EQ(three_particle_projectors(4).block_width, 2);
    EXPECT_EQ(three_particle_projectors(3).physical_index.size(), 27u);
}

TEST(ThreeParticles, SymmetrizedProductState) {
    const auto tp = three_particle_projectors(2);
    const auto rep = permutation_rep(3, 1);
    const auto x = StateVector::basis(3, 0b011);
    CVector sym = CVector::Zero(8), anti = CVector::Zero(8);
    for (std::size_t e = 0; e < rep.group().order(); ++e) {
        const auto moved = rep.apply(e, x).amplitudes();
        sym += moved / 6.0;
        anti += std::get<Permutation>(rep.group().element(e).value).sign() * moved / 6.0;
    }
    EXPECT_LE((tp.p[0] * x.amplitudes() - sym).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((tp.p[1] * x.amplitudes() - anti).cwiseAbs().maxCoeff(), 1e-12);
    // (1/3)(2 - C3 - C3^2) on the mixed irrep.
    CVector mixed = 2.0 * x.amplitudes();
    for (std::size_t e = 0; e < rep.group().order(); ++e) {
        if (std::get<Permutation>(rep.group().element(e).value).cycle_type() == Partition({3})) mixed -= rep.apply(e, x).amplitudes();
    }
    EXPECT_LE((tp.p[2] * x.amplitudes() - mixed / 3.0).cwiseAbs().maxCoeff(), 1e-12);
}
