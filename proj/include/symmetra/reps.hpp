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

// Unitary representations stored as basis permutations with phases.
//
// Block-permutation convention: rho(g)|x_1 ... x_N> = |x_{g^-1(1)} ... x_{g^-1(N)}>,
// i.e. the content of block i moves to block g(i). With (g*h)(i) = g(h(i)) this
// makes rho a homomorphism.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symmetra/groups.hpp"
#include "symmetra/simulator.hpp"

namespace symmetra {

class UnitaryRep {
   public:
    UnitaryRep() = default;
    /// One BasisMap per group element (element-index order). Validates that
    /// each map is a bijection of the right size with unit-modulus phases.
    UnitaryRep(GroupPtr group, int n_qubits, std::vector<BasisMap> actions, std::string name);

    const FiniteGroup &group() const { return *group_; }
    const GroupPtr &group_ptr() const { return group_; }
    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
    const std::string &name() const { return name_; }

    const BasisMap &action(std::size_t element) const { return actions_.at(element); }
    CMatrix matrix(std::size_t element) const { return action(element).dense(); }
    DenseOperator op(std::size_t element) const;

    /// rho(g) on the whole state (width must equal n_qubits).
    StateVector apply(std::size_t element, const StateVector &state) const;
    /// rho(g) on a register of a larger state.
    StateVector apply(std::size_t element, const StateVector &state, const Register &target) const;

   private:
    GroupPtr group_;
    int n_qubits_ = 0;
    std::vector<BasisMap> actions_;
    std::string name_;
};

/// Z_{2^m} acting by |j> -> |j + v mod 2^m>.
UnitaryRep cyclic_shift_rep(int m);
/// Z_2 acting by X^{(x)N}.
UnitaryRep parity_flip_rep(int n);
/// Z_N acting on N qubits by cyclic site translation: the content of site j
/// moves to site j+v (mod N).
UnitaryRep site_translation_rep(int n);
/// S_N permuting N blocks of m qubits each.
UnitaryRep permutation_rep(int n, int block_width);
/// S_2 on two particles of `block_width` qubits, swapping only the qubits at
/// the given offsets inside each block (e.g. the spin qubit).
UnitaryRep spin_only_permutation_rep(int block_width, const std::vector<int> &swapped_offsets);
/// Representation of a product group G x H from commuting reps of the factors
/// on the same register: rho((a, b)) = rho_G(a) rho_H(b).
UnitaryRep product_rep(GroupPtr product, const UnitaryRep &first, const UnitaryRep &second);

/// Exact rational flux b = p/q.
struct Rational {
    long long p = 0;
    long long q = 1;
    double value() const { return static_cast<double>(p) / static_cast<double>(q); }
    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};
/// Parses "p/q" or a decimal; decimals return nullopt for the rational part.
std::pair<double, std::optional<Rational>> parse_flux(const std::string &text);

/// Magnetic translations on 2m qubits, x register first:
/// U_b = sum |x,y><x+1,y|, V_b = sum e^{2 pi i x b} |x,y><x,y+1|.
struct MagneticTranslations {
    BasisMap u;
    BasisMap v;
    int m = 0;
};
MagneticTranslations magnetic_translation_reps(int m, double b);
MagneticTranslations magnetic_translation_reps(int m, Rational b);

/// Residuals of U V U^dag V^dag against e^{2 pi i b} I: over the full space,
/// and over basis columns with x != M-1, the only ones whose path through the
/// commutator crosses the periodic x seam.
struct CommutationResidual {
    double full = 0.0;
    double away_from_seam = 0.0;
};
CommutationResidual torus_commutation_residual(const MagneticTranslations &mt, double b);

/// Max entrywise ||rho(g)rho(h) - rho(gh)|| over sampled pairs, plus the
/// inverse law rho(g^-1) = rho(g)^dag. Exhaustive for |G| <= 64, otherwise
/// `samples` seeded pairs.
double verify_homomorphism(const UnitaryRep &rep, std::size_t samples, std::uint64_t seed);

}  // namespace symmetra
