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

#include "symmetra/models.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/SVD>
#include <nlohmann/json.hpp>

namespace symmetra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string num(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

int bit(std::uint64_t i, int q, int n) { return static_cast<int>((i >> (n - 1 - q)) & 1U); }

double max_sorted_diff(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

int numerical_rank(const CMatrix &m, double tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto &s = svd.singularValues();
    return static_cast<int>((s.array() > tol).count());
}

// ---- Ising ------------------------------------------------------------------

UnitaryRep ising_symmetry_rep(int n) {
    return product_rep(product_group(cyclic_group(n), cyclic_group(2)), site_translation_rep(n), parity_flip_rep(n));
}

ModelHamiltonian ising_hamiltonian(int n, const std::vector<double> &a, const std::vector<double> &w, double j) {
    if (n < 2 || n > kIsingMaxSites) {
        throw std::length_error("ising_hamiltonian: N must be in [2, " + std::to_string(kIsingMaxSites) + "]");
    }
    if (a.size() != static_cast<std::size_t>(n) || w.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("ising_hamiltonian: field vectors must have N entries");
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    CMatrix h = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t i = 0; i < dim; ++i) {
        double diag = 0.0;
        for (int q = 0; q < n; ++q) {
            const double zq = bit(i, q, n) ? -1.0 : 1.0;
            const double zn = bit(i, (q + 1) % n, n) ? -1.0 : 1.0;
            diag -= j * zq * zn + w[static_cast<std::size_t>(q)] * zq;
            const std::uint64_t flipped = i ^ (std::uint64_t{1} << (n - 1 - q));
            h(static_cast<Eigen::Index>(flipped), static_cast<Eigen::Index>(i)) -= a[static_cast<std::size_t>(q)];
        }
        h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) += diag;
    }
    ModelHamiltonian m{DenseOperator(std::move(h), true), {}, ising_symmetry_rep(n), {}};
    m.layout.add("spins", n);
    m.metadata["model"] = "ising";
    m.metadata["N"] = std::to_string(n);
    m.metadata["J"] = num(j);
    return m;
}

std::vector<DenseOperator> ising_symmetry_projectors(int n) {
    const auto rep = ising_symmetry_rep(n);
    std::vector<DenseOperator> out;
    out.reserve(rep.group().irreps().size());
    for (std::size_t g = 0; g < rep.group().irreps().size(); ++g) out.push_back(projector_matrix(rep, g));
    return out;
}

DenseOperator ising_projected_block(const DenseOperator &h, int n, int k, int sigma) {
    if (k < 0 || k >= n || sigma < 0 || sigma > 1) throw std::invalid_argument("ising_projected_block: bad (k, sigma)");
    const auto p = projector_matrix(ising_symmetry_rep(n), ising_irrep(k, sigma)).matrix();
    const CMatrix block = p.adjoint() * h.matrix() * p;
    return DenseOperator((block + block.adjoint()) / 2.0, true);
}

std::vector<double> ising_block_spectrum(const DenseOperator &h, int n, int k, int sigma) {
    return restricted_spectrum(h, projector_matrix(ising_symmetry_rep(n), ising_irrep(k, sigma)));
}

// ---- Harper -----------------------------------------------------------------

namespace {

void check_harper_width(int m) {
    if (m < 1 || m > kHarperMaxSideQubits) {
        throw std::length_error("harper: side register width must be in [1, " + std::to_string(kHarperMaxSideQubits) +
                                "]");
    }
}

UnitaryRep y_translation_rep(int m) {
    const std::uint64_t side = std::uint64_t{1} << m;
    std::vector<BasisMap> actions;
    for (std::uint64_t u = 0; u < side; ++u) {
        BasisMap b;
        b.image.resize(side * side);
        for (std::uint64_t x = 0; x < side; ++x) {
            for (std::uint64_t y = 0; y < side; ++y) b.image[x * side + y] = x * side + (y + u) % side;
        }
        actions.push_back(std::move(b));
    }
    return UnitaryRep(cyclic_group(static_cast<int>(side)), 2 * m, std::move(actions), "y-translation");
}

ModelHamiltonian harper_from(const MagneticTranslations &mt, double jx, double jy, const std::string &b_text) {
    const CMatrix u = mt.u.dense();
    const CMatrix v = mt.v.dense();
    CMatrix h = jx * (u + u.adjoint()) + jy * (v + v.adjoint());
    ModelHamiltonian model{DenseOperator((h + h.adjoint()) / 2.0, true), {}, y_translation_rep(mt.m), {}};
    model.layout.add("x", mt.m).add("y", mt.m);
    model.metadata["model"] = "harper";
    model.metadata["m"] = std::to_string(mt.m);
    model.metadata["b"] = b_text;
    model.metadata["Jx"] = num(jx);
    model.metadata["Jy"] = num(jy);
    return model;
}

}  // namespace

ModelHamiltonian harper_hamiltonian(int m, double b, double jx, double jy) {
    check_harper_width(m);
    return harper_from(magnetic_translation_reps(m, b), jx, jy, num(b));
}

ModelHamiltonian harper_hamiltonian(int m, Rational b, double jx, double jy) {
    check_harper_width(m);
    return harper_from(magnetic_translation_reps(m, b), jx, jy, b.str());
}

std::vector<DenseOperator> harper_momentum_blocks(int m, double b, double jx, double jy) {
    check_harper_width(m);
    const auto side = Eigen::Index{1} << m;
    const double md = static_cast<double>(side);
    CMatrix hop = CMatrix::Zero(side, side);
    for (Eigen::Index x = 0; x < side; ++x) {
        hop((x + side - 1) % side, x) += jx;
        hop(x, (x + side - 1) % side) += jx;
    }
    std::vector<DenseOperator> blocks;
    for (Eigen::Index k = 0; k < side; ++k) {
        CMatrix hk = hop;
        for (Eigen::Index x = 0; x < side; ++x) {
            hk(x, x) += 2.0 * jy * std::cos(kTwoPi * (static_cast<double>(x) * b - static_cast<double>(k) / md));
        }
        blocks.emplace_back(std::move(hk), true);
    }
    return blocks;
}

double harper_block_residual(int m, double b, double jx, double jy) {
    const auto h = harper_hamiltonian(m, b, jx, jy).h.matrix();
    const auto side = Eigen::Index{1} << m;
    const CMatrix f = kron(CMatrix::Identity(side, side), qft_matrix(m).matrix());
    const CMatrix rotated = f * h * f.adjoint();
    const auto blocks = harper_momentum_blocks(m, b, jx, jy);
    CMatrix expected = CMatrix::Zero(side * side, side * side);
    for (Eigen::Index k = 0; k < side; ++k) {
        CMatrix proj = CMatrix::Zero(side, side);
        proj(k, k) = 1.0;
        expected += kron(blocks[static_cast<std::size_t>(k)].matrix(), proj);
    }
    return (rotated - expected).norm();
}

DenseOperator harper_pseudospin_half(int m, int k_y, double jx, double jy) {
    check_harper_width(m);
    const auto side = Eigen::Index{1} << m;
    const Eigen::Index cells = side / 2;
    const double onsite = 2.0 * jy * std::cos(kTwoPi * static_cast<double>(k_y) / static_cast<double>(side));
    CMatrix sz(2, 2), sx(2, 2), lower(2, 2);
    sz << 1, 0, 0, -1;
    sx << 0, 1, 1, 0;
    lower << 0, 0, 1, 0;  // |down><up|
    CMatrix next = CMatrix::Zero(cells, cells);  // |n><n+1|
    for (Eigen::Index c = 0; c < cells; ++c) next(c, (c + 1) % cells) += 1.0;
    const CMatrix id = CMatrix::Identity(cells, cells);
    CMatrix h = onsite * kron(id, sz) + jx * kron(id, sx);
    const CMatrix inter = jx * kron(next, lower);
    h += inter + inter.adjoint();
    return DenseOperator(std::move(h), true);
}

std::vector<ButterflyPoint> harper_butterfly(int m, int max_q, double jx, double jy) {
    if (max_q < 1) throw std::invalid_argument("harper_butterfly: max_q must be >= 1");
    std::vector<ButterflyPoint> points;
    for (long long q = 1; q <= max_q; ++q) {
        for (long long p = 0; p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            ButterflyPoint pt;
            pt.p = p;
            pt.q = q;
            pt.b = static_cast<double>(p) / static_cast<double>(q);
            points.push_back(pt);
        }
    }
    std::sort(points.begin(), points.end(), [](const auto &a, const auto &b) { return a.p * b.q < b.p * a.q; });
    for (auto &pt : points) {
        const auto full = exact_eigensystem(harper_hamiltonian(m, Rational{pt.p, pt.q}, jx, jy).h).values;
        for (const auto &blk : harper_momentum_blocks(m, pt.b, jx, jy)) {
            const auto v = exact_eigensystem(blk).values;
            pt.energies.insert(pt.energies.end(), v.begin(), v.end());
        }
        std::sort(pt.energies.begin(), pt.energies.end());
        pt.union_residual = max_sorted_diff(pt.energies, full);
    }
    return points;
}

// ---- H2 ---------------------------------------------------------------------

H2Integrals H2Integrals::from_coulomb_exchange(double h_g, double h_u, double j_gg, double j_uu, double j_gu,
                                               double k_gu, double nuclear_repulsion) {
    H2Integrals ints;
    ints.h = {h_g, h_u};
    ints.nuclear_repulsion = nuclear_repulsion;
    auto &g = ints.g;
    g[0][0][0][0] = j_gg;
    g[1][1][1][1] = j_uu;
    g[0][1][0][1] = g[1][0][1][0] = j_gu;
    g[0][1][1][0] = g[1][0][0][1] = k_gu;
    g[0][0][1][1] = g[1][1][0][0] = k_gu;
    return ints;
}

H2Integrals H2Integrals::from_json_text(const std::string &text) {
    const auto j = nlohmann::json::parse(text);
    const double nuc = j.value("nuclear_repulsion", 0.0);
    if (j.contains("g")) {
        H2Integrals ints;
        const auto h = j.at("h").get<std::vector<double>>();
        const auto g = j.at("g").get<std::vector<double>>();
        if (h.size() != 2 || g.size() != 16) throw std::invalid_argument("H2Integrals: expected h[2] and g[16]");
        ints.h = {h[0], h[1]};
        for (int i = 0; i < 16; ++i) ints.g[(i >> 3) & 1][(i >> 2) & 1][(i >> 1) & 1][i & 1] = g[static_cast<std::size_t>(i)];
        ints.nuclear_repulsion = nuc;
        return ints;
    }
    return from_coulomb_exchange(j.at("h_gg").get<double>(), j.at("h_uu").get<double>(), j.at("J_gg").get<double>(),
                                 j.at("J_uu").get<double>(), j.at("J_gu").get<double>(), j.at("K_gu").get<double>(), nuc);
}

H2Integrals H2Integrals::from_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open integrals file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

double H2Integrals::symmetry_defect() const {
    double worst = 0.0;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            for (int r = 0; r < 2; ++r)
                for (int s = 0; s < 2; ++s) {
                    worst = std::max(worst, std::abs(g[p][q][r][s] - g[q][p][s][r]));
                    worst = std::max(worst, std::abs(g[p][q][r][s] - g[r][s][p][q]));
                }
    return worst;
}

ModelHamiltonian h2_hamiltonian(const H2Integrals &ints) {
    if (ints.symmetry_defect() > 1e-12) {
        throw std::invalid_argument("h2_hamiltonian: two-electron integrals violate g_pqrs = g_qpsr = g_rspq (defect " +
                                    num(ints.symmetry_defect()) + ")");
    }
    // Index o1 s1 o2 s2, most significant first.
    auto idx = [](int o1, int s1, int o2, int s2) { return static_cast<Eigen::Index>(o1 * 8 + s1 * 4 + o2 * 2 + s2); };
    CMatrix h = CMatrix::Zero(16, 16);
    for (int p = 0; p < 2; ++p)
        for (int s1 = 0; s1 < 2; ++s1)
            for (int q = 0; q < 2; ++q)
                for (int s2 = 0; s2 < 2; ++s2) {
                    const auto row = idx(p, s1, q, s2);
                    h(row, row) += ints.h[static_cast<std::size_t>(p)] + ints.h[static_cast<std::size_t>(q)] +
                                   ints.nuclear_repulsion;
                    for (int r = 0; r < 2; ++r)
                        for (int s = 0; s < 2; ++s) h(row, idx(r, s1, s, s2)) += ints.g[p][q][r][s];
                }
    ModelHamiltonian m{DenseOperator(std::move(h), true), {}, h2_sector_rep(), {}};
    m.layout.add("orbital1", 1).add("spin1", 1).add("orbital2", 1).add("spin2", 1);
    m.metadata["model"] = "h2";
    return m;
}

UnitaryRep h2_exchange_rep() { return permutation_rep(2, 2); }
UnitaryRep h2_spin_exchange_rep() { return spin_only_permutation_rep(2, {1}); }

UnitaryRep h2_sector_rep() {
    auto s2 = symmetric_group(2);
    return product_rep(product_group(s2, s2), h2_exchange_rep(), h2_spin_exchange_rep());
}

std::string h2_sector_name(std::size_t irrep) {
    static const char *stats[] = {"boson", "fermion"};
    static const char *spin[] = {"triplet", "singlet"};
    if (irrep > 3) throw std::out_of_range("h2_sector_name: irrep must be < 4");
    return std::string(stats[irrep / 2]) + "/" + spin[irrep % 2];
}

TgsaOutcome h2_sector_label(const StateVector &state) {
    if (state.n_qubits() != 4) throw DimensionError("h2_sector_label: expected a 4-qubit state");
    const auto exchange = h2_exchange_rep();
    const auto spin = h2_spin_exchange_rep();
    const auto first = tgsa_apply(exchange, state);

    TgsaOutcome out;
    out.n_anc = 2;
    out.n_sys = 4;
    out.prep_probability = first.prep_probability;
    CVector joint = CVector::Zero(64);
    for (const auto &a : first.branches) {
        std::optional<TgsaOutcome> second;
        if (a.state) second = tgsa_apply(spin, *a.state);
        for (std::size_t b = 0; b < 2; ++b) {
            TgsaBranch br;
            br.irrep = a.irrep * 2 + b;
            br.label = h2_sector_name(br.irrep);
            br.dim = 1;
            if (second) {
                const auto &sb = second->branches[b];
                const double scale = a.amplitude;
                br.amplitude = scale * sb.amplitude;
                br.probability = br.amplitude * br.amplitude;
                br.state = sb.state;
                const auto piece = extract_branch(second->joint, Register{"anc", 0, second->n_anc}, b);
                joint.segment(static_cast<Eigen::Index>(br.irrep * 16), 16) = scale * piece.amplitudes();
            }
            out.branches.push_back(std::move(br));
        }
    }
    out.joint = StateVector(std::move(joint), true);
    return out;
}

// ---- Three particles ----------------------------------------------------------

ThreeParticleProjectors three_particle_projectors(int d) {
    if (d < 1) throw std::invalid_argument("three_particle_projectors: d must be >= 1");
    ThreeParticleProjectors out;
    out.d = d;
    out.block_width = std::max(1, ceil_log2(static_cast<std::uint64_t>(d)));
    const auto rep = permutation_rep(3, out.block_width);
    const std::uint64_t bd = std::uint64_t{1} << out.block_width;
    const auto ud = static_cast<std::uint64_t>(d);
    for (std::uint64_t a = 0; a < ud; ++a)
        for (std::uint64_t b = 0; b < ud; ++b)
            for (std::uint64_t c = 0; c < ud; ++c) out.physical_index.push_back((a * bd + b) * bd + c);
    const auto n = static_cast<Eigen::Index>(out.physical_index.size());
    for (std::size_t g = 0; g < 3; ++g) {
        const auto full = projector_matrix(rep, g).matrix();
        CMatrix p(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                p(i, j) = full(static_cast<Eigen::Index>(out.physical_index[static_cast<std::size_t>(i)]),
                               static_cast<Eigen::Index>(out.physical_index[static_cast<std::size_t>(j)]));
        out.p[g] = std::move(p);
        out.labels[g] = rep.group().irreps()[g].label;
    }
    return out;
}

}  // namespace symmetra
