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

#include "symmetra/reps.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace symmetra {

namespace {

constexpr int kMaxRepQubits = 24;

cplx unit_phase(double turns) { return std::polar(1.0, 2.0 * std::numbers::pi * turns); }

double map_distance(const BasisMap &a, const BasisMap &b) {
    double worst = 0.0;
    for (std::uint64_t j = 0; j < a.dim(); ++j) {
        if (a.image[j] != b.image[j]) return 2.0;
        worst = std::max(worst, std::abs(a.phase_at(j) - b.phase_at(j)));
    }
    return worst;
}

void check_width(int n_qubits, const char *who) {
    if (n_qubits < 1 || n_qubits > kMaxRepQubits) {
        throw DimensionError(std::string(who) + ": qubit count out of range");
    }
}

}  // namespace

UnitaryRep::UnitaryRep(GroupPtr group, int n_qubits, std::vector<BasisMap> actions, std::string name)
    : group_(std::move(group)), n_qubits_(n_qubits), actions_(std::move(actions)), name_(std::move(name)) {
    if (!group_) throw std::invalid_argument("UnitaryRep: null group");
    if (actions_.size() != group_->order()) throw std::invalid_argument("UnitaryRep: one action per element required");
    for (const auto &a : actions_) {
        if (a.dim() != dim()) throw DimensionError("UnitaryRep: action dimension mismatch");
        a.validate();
        for (const auto &ph : a.phase) {
            if (std::abs(std::abs(ph) - 1.0) > kFlagTolerance) throw std::invalid_argument("UnitaryRep: non-unit phase");
        }
    }
}

DenseOperator UnitaryRep::op(std::size_t element) const { return DenseOperator(matrix(element), false, true); }

StateVector UnitaryRep::apply(std::size_t element, const StateVector &state) const {
    if (state.n_qubits() != n_qubits_) throw DimensionError("UnitaryRep::apply: width mismatch");
    return apply(element, state, Register{"sys", 0, n_qubits_});
}

StateVector UnitaryRep::apply(std::size_t element, const StateVector &state, const Register &target) const {
    if (target.width != n_qubits_) throw DimensionError("UnitaryRep::apply: register width mismatch");
    const auto q = target.qubits();
    auto out = apply_basis_map(state, action(element), q);
    return StateVector(out.amplitudes(), state.subnormalized());
}

UnitaryRep cyclic_shift_rep(int m) {
    check_width(m, "cyclic_shift_rep");
    const std::uint64_t dim = std::uint64_t{1} << m;
    auto group = cyclic_group(static_cast<int>(dim));
    std::vector<BasisMap> actions;
    for (std::uint64_t v = 0; v < dim; ++v) {
        BasisMap b;
        b.image.resize(dim);
        for (std::uint64_t j = 0; j < dim; ++j) b.image[j] = (j + v) % dim;
        actions.push_back(std::move(b));
    }
    return UnitaryRep(group, m, std::move(actions), "shift(m=" + std::to_string(m) + ")");
}

UnitaryRep parity_flip_rep(int n) {
    check_width(n, "parity_flip_rep");
    const std::uint64_t dim = std::uint64_t{1} << n;
    BasisMap flip;
    flip.image.resize(dim);
    for (std::uint64_t j = 0; j < dim; ++j) flip.image[j] = (dim - 1) ^ j;
    return UnitaryRep(cyclic_group(2), n, {BasisMap::identity(dim), std::move(flip)},
                      "parity(N=" + std::to_string(n) + ")");
}

namespace {

// Image of a basis index under a block permutation: block j's content moves to
// block perm[j]. Blocks are numbered from the most significant end.
std::uint64_t permute_blocks(std::uint64_t index, const std::vector<int> &perm, int block_width) {
    const int n = static_cast<int>(perm.size());
    const std::uint64_t mask = (std::uint64_t{1} << block_width) - 1;
    std::uint64_t out = 0;
    for (int j = 0; j < n; ++j) {
        const std::uint64_t content = (index >> ((n - 1 - j) * block_width)) & mask;
        out |= content << ((n - 1 - perm[static_cast<std::size_t>(j)]) * block_width);
    }
    return out;
}

}  // namespace

UnitaryRep site_translation_rep(int n) {
    check_width(n, "site_translation_rep");
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<BasisMap> actions;
    for (int v = 0; v < n; ++v) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) perm[static_cast<std::size_t>(j)] = (j + v) % n;
        BasisMap b;
        b.image.resize(dim);
        for (std::uint64_t i = 0; i < dim; ++i) b.image[i] = permute_blocks(i, perm, 1);
        actions.push_back(std::move(b));
    }
    return UnitaryRep(cyclic_group(n), n, std::move(actions), "translation(N=" + std::to_string(n) + ")");
}

UnitaryRep permutation_rep(int n, int block_width) {
    if (block_width < 1) throw std::invalid_argument("permutation_rep: block width must be >= 1");
    check_width(n * block_width, "permutation_rep");
    auto group = symmetric_group(n);
    const std::uint64_t dim = std::uint64_t{1} << (n * block_width);
    std::vector<BasisMap> actions;
    for (std::size_t e = 0; e < group->order(); ++e) {
        const auto &perm = std::get<Permutation>(group->element(e).value).images();
        BasisMap b;
        b.image.resize(dim);
        for (std::uint64_t i = 0; i < dim; ++i) b.image[i] = permute_blocks(i, perm, block_width);
        actions.push_back(std::move(b));
    }
    return UnitaryRep(group, n * block_width, std::move(actions),
                      "blocks(N=" + std::to_string(n) + ",m=" + std::to_string(block_width) + ")");
}

UnitaryRep spin_only_permutation_rep(int block_width, const std::vector<int> &swapped_offsets) {
    check_width(2 * block_width, "spin_only_permutation_rep");
    const int n = 2 * block_width;
    const std::uint64_t dim = std::uint64_t{1} << n;
    BasisMap swap;
    swap.image.resize(dim);
    for (std::uint64_t i = 0; i < dim; ++i) {
        std::uint64_t out = i;
        for (int off : swapped_offsets) {
            if (off < 0 || off >= block_width) throw std::invalid_argument("spin_only_permutation_rep: bad offset");
            const int pa = n - 1 - off;
            const int pb = n - 1 - (block_width + off);
            const std::uint64_t ba = (i >> pa) & 1U;
            const std::uint64_t bb = (i >> pb) & 1U;
            out &= ~((std::uint64_t{1} << pa) | (std::uint64_t{1} << pb));
            out |= (bb << pa) | (ba << pb);
        }
        swap.image[i] = out;
    }
    return UnitaryRep(symmetric_group(2), n, {BasisMap::identity(dim), std::move(swap)},
                      "partial-swap(m=" + std::to_string(block_width) + ")");
}

UnitaryRep product_rep(GroupPtr product, const UnitaryRep &first, const UnitaryRep &second) {
    if (!product || product->kind() != GroupKind::product) throw std::invalid_argument("product_rep: not a product");
    if (product->factors()[0]->order() != first.group().order() ||
        product->factors()[1]->order() != second.group().order()) {
        throw std::invalid_argument("product_rep: factor order mismatch");
    }
    if (first.n_qubits() != second.n_qubits()) throw DimensionError("product_rep: reps act on different widths");
    const std::size_t nb = second.group().order();
    std::vector<BasisMap> actions;
    for (std::size_t e = 0; e < product->order(); ++e) {
        actions.push_back(first.action(e / nb).compose(second.action(e % nb)));
    }
    return UnitaryRep(product, first.n_qubits(), std::move(actions), first.name() + "x" + second.name());
}

std::pair<double, std::optional<Rational>> parse_flux(const std::string &text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument("trailing");
            return {v, std::nullopt};
        }
        std::size_t u1 = 0;
        std::size_t u2 = 0;
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        Rational r{std::stoll(num, &u1), std::stoll(den, &u2)};
        if (u1 != num.size() || u2 != den.size() || r.q <= 0) throw std::invalid_argument("bad rational");
        return {r.value(), r};
    } catch (const std::exception &) {
        throw std::invalid_argument("cannot parse flux '" + text + "' (expected p/q or a decimal)");
    }
}

namespace {

template <typename PhaseTurns>
MagneticTranslations build_translations(int m, PhaseTurns turns) {
    check_width(2 * m, "magnetic_translation_reps");
    const std::uint64_t side = std::uint64_t{1} << m;
    const std::uint64_t dim = side * side;
    MagneticTranslations mt;
    mt.m = m;
    mt.u.image.resize(dim);
    mt.v.image.resize(dim);
    mt.v.phase.resize(dim);
    for (std::uint64_t x = 0; x < side; ++x) {
        for (std::uint64_t y = 0; y < side; ++y) {
            const std::uint64_t j = x * side + y;
            // U|x+1,y> = |x,y>  =>  U|x,y> = |x-1,y>.
            mt.u.image[j] = ((x + side - 1) % side) * side + y;
            // V|x,y+1> = e^{2 pi i x b}|x,y>  =>  V|x,y> = e^{2 pi i x b}|x,y-1>.
            mt.v.image[j] = x * side + (y + side - 1) % side;
            mt.v.phase[j] = unit_phase(turns(x));
        }
    }
    return mt;
}

}  // namespace

MagneticTranslations magnetic_translation_reps(int m, double b) {
    return build_translations(m, [b](std::uint64_t x) { return static_cast<double>(x) * b; });
}

MagneticTranslations magnetic_translation_reps(int m, Rational b) {
    if (b.q <= 0) throw std::invalid_argument("magnetic_translation_reps: denominator must be positive");
    return build_translations(m, [b](std::uint64_t x) {
        const long long r = ((static_cast<long long>(x) * b.p) % b.q + b.q) % b.q;
        return static_cast<double>(r) / static_cast<double>(b.q);
    });
}

CommutationResidual torus_commutation_residual(const MagneticTranslations &mt, double b) {
    const auto comm = mt.u.compose(mt.v).compose(mt.u.inverse()).compose(mt.v.inverse());
    const cplx expected = unit_phase(b);
    const std::uint64_t side = std::uint64_t{1} << mt.m;
    CommutationResidual r;
    for (std::uint64_t j = 0; j < comm.dim(); ++j) {
        const double dev = comm.image[j] != j ? 2.0 : std::abs(comm.phase_at(j) - expected);
        r.full = std::max(r.full, dev);
        if (j / side != side - 1) r.away_from_seam = std::max(r.away_from_seam, dev);
    }
    return r;
}

double verify_homomorphism(const UnitaryRep &rep, std::size_t samples, std::uint64_t seed) {
    const auto &g = rep.group();
    const std::size_t order = g.order();
    double worst = 0.0;
    auto check_pair = [&](std::size_t a, std::size_t b) {
        worst = std::max(worst, map_distance(rep.action(a).compose(rep.action(b)), rep.action(g.multiply(a, b))));
    };
    auto check_inverse = [&](std::size_t a) {
        worst = std::max(worst, map_distance(rep.action(g.inverse(a)), rep.action(a).inverse()));
    };
    if (order <= 64) {
        for (std::size_t a = 0; a < order; ++a) {
            check_inverse(a);
            for (std::size_t b = 0; b < order; ++b) check_pair(a, b);
        }
        return worst;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto a = pick(rng);
        check_pair(a, pick(rng));
        check_inverse(a);
    }
    return worst;
}

}  // namespace symmetra
