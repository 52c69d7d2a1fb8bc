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

#pragma once

// Worked physical systems: transverse/longitudinal-field Ising ring,
// Harper-Hofstadter torus, minimal-basis H2 in first quantization and
// three-particle exchange symmetry.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symmetra/qpe.hpp"

namespace symmetra {

struct ModelHamiltonian {
    DenseOperator h;
    RegisterLayout layout;
    /// Declared symmetry of the model (may be broken by the parameters).
    std::optional<UnitaryRep> symmetry;
    std::map<std::string, std::string> metadata;
};

/// Numerical rank: singular values above tol.
int numerical_rank(const CMatrix &m, double tol = 1e-8);

// ---- Ising ring -------------------------------------------------------------

inline constexpr int kIsingMaxSites = 12;

/// H = -sum a_j X_j - J sum Z_j Z_{j+1} - sum w_j Z_j, periodic. Declared
/// symmetry: translation x global spin flip (Z_N x Z_2).
ModelHamiltonian ising_hamiltonian(int n, const std::vector<double> &a, const std::vector<double> &w, double j);

/// Translation x spin-flip representation of Z_N x Z_2 on N qubits.
UnitaryRep ising_symmetry_rep(int n);

/// Projector P^{k,sigma} = R_k Q_sigma, indexed [k * 2 + sigma].
std::vector<DenseOperator> ising_symmetry_projectors(int n);
/// Irrep index of (k, sigma) in ising_symmetry_rep.
inline std::size_t ising_irrep(int k, int sigma) { return static_cast<std::size_t>(k) * 2 + static_cast<std::size_t>(sigma); }

/// P^dag H P for the (k, sigma) sector, still on the full space.
DenseOperator ising_projected_block(const DenseOperator &h, int n, int k, int sigma);
/// The block restricted to an orthonormal basis of range(P^{k,sigma}).
std::vector<double> ising_block_spectrum(const DenseOperator &h, int n, int k, int sigma);

// ---- Harper-Hofstadter ------------------------------------------------------

inline constexpr int kHarperMaxSideQubits = 7;

/// H = Jx (U_b + U_b^dag) + Jy (V_b + V_b^dag) on 2m qubits, x register first.
ModelHamiltonian harper_hamiltonian(int m, double b, double jx, double jy);
ModelHamiltonian harper_hamiltonian(int m, Rational b, double jx, double jy);

/// Blocks H_{k_y} on the x register after a QFT on y: ring hopping Jx plus the
/// diagonal 2 Jy cos(2 pi (x b - k_y / M)).
std::vector<DenseOperator> harper_momentum_blocks(int m, double b, double jx, double jy);

/// || (I (x) F) H (I (x) F)^dag - sum_k H_k (x) |k><k| ||_max.
double harper_block_residual(int m, double b, double jx, double jy);

/// b = 1/2 block written as a pseudo-spin on M/2 dimer cells: onsite
/// +-2 Jy cos(2 pi k_y / M), intra-cell and inter-cell hopping Jx.
DenseOperator harper_pseudospin_half(int m, int k_y, double jx, double jy);

struct ButterflyPoint {
    long long p = 0;
    long long q = 1;
    double b = 0.0;
    std::vector<double> energies;  // ascending, union over k_y
    /// Max |sorted block union - sorted full spectrum|.
    double union_residual = 0.0;
};

/// All reduced b = p/q in [0, 1] with q <= max_q.
std::vector<ButterflyPoint> harper_butterfly(int m, int max_q, double jx, double jy);

// ---- H2 ---------------------------------------------------------------------

/// Spin-free integrals over {gerade, ungerade} (index 0, 1). Two-electron
/// integrals in physicist order g[p][q][r][s] = <pq|rs>.
struct H2Integrals {
    std::array<double, 2> h{};  // core one-electron energies
    std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2> g{};
    double nuclear_repulsion = 0.0;

    /// Builds g from the symmetry-distinct Coulomb/exchange integrals.
    static H2Integrals from_coulomb_exchange(double h_g, double h_u, double j_gg, double j_uu, double j_gu,
                                             double k_gu, double nuclear_repulsion = 0.0);
    /// Accepts {"h_gg","h_uu","J_gg","J_uu","J_gu","K_gu"[,"nuclear_repulsion"]}
    /// or {"h": [..2], "g": [..16] (index 8p+4q+2r+s)[, "nuclear_repulsion"]}.
    static H2Integrals from_json_text(const std::string &text);
    static H2Integrals from_json_file(const std::string &path);

    /// Max violation of g_pqrs = g_qpsr = g_rspq.
    double symmetry_defect() const;
};

/// Qubit order (orbital 1, spin 1, orbital 2, spin 2); orbital 0 = gerade,
/// spin 0 = up. Throws std::invalid_argument for integrals violating the
/// permutational symmetry by more than 1e-12.
ModelHamiltonian h2_hamiltonian(const H2Integrals &ints);

/// Particle exchange (SWAP13 SWAP24) and spin-only exchange (SWAP24).
UnitaryRep h2_exchange_rep();
UnitaryRep h2_spin_exchange_rep();
/// S_2 x S_2 acting by both; irrep a * 2 + b with a = statistics (0 boson,
/// 1 fermion) and b = spin (0 triplet, 1 singlet).
UnitaryRep h2_sector_rep();
std::string h2_sector_name(std::size_t irrep);

/// Two chained S_2 symmetry-adapted transforms: full exchange on ancilla 0,
/// then spin exchange on ancilla 1. Branch order and labels as h2_sector_rep.
TgsaOutcome h2_sector_label(const StateVector &state);

// ---- Three identical particles ---------------------------------------------

struct ThreeParticleProjectors {
    int d = 0;
    int block_width = 0;
    /// Projectors in S_3 irrep order: symmetric (3), antisymmetric (1,1,1),
    /// mixed (2,1); restricted to the d^3-dimensional physical subspace.
    std::array<CMatrix, 3> p;
    std::array<std::string, 3> labels;
    /// Full-register basis index of each physical basis state.
    std::vector<std::uint64_t> physical_index;
};

ThreeParticleProjectors three_particle_projectors(int d);

}  // namespace symmetra
