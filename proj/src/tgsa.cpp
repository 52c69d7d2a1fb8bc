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

#include "symmetra/tgsa.hpp"

#include <cmath>

namespace symmetra {

DenseOperator prepare_uniform(std::uint64_t dim) {
    if (dim < 1) throw std::invalid_argument("prepare_uniform: dim must be >= 1");
    const auto size = Eigen::Index{1} << ceil_log2(dim);
    CMatrix h = CMatrix::Identity(size, size);
    if (dim == 1) return DenseOperator(std::move(h), true, true);
    CVector w = CVector::Zero(size);
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(dim); ++i) w[i] = -amp;
    w[0] += 1.0;
    h -= 2.0 * (w * w.adjoint()) / w.squaredNorm();
    return DenseOperator(std::move(h), true, true);
}

CMatrix class_mixer_matrix(const UnitaryRep &rep, std::size_t cls) {
    const auto &c = rep.group().classes().at(cls);
    const auto d = static_cast<Eigen::Index>(rep.dim());
    CMatrix m = CMatrix::Zero(d, d);
    for (auto e : c.members) {
        const auto &a = rep.action(e);
        for (std::uint64_t j = 0; j < a.dim(); ++j) {
            m(static_cast<Eigen::Index>(a.image[j]), static_cast<Eigen::Index>(j)) += a.phase_at(j);
        }
    }
    return m / static_cast<double>(c.size());
}

namespace {

int prep_width(const FiniteGroup &g) { return ceil_log2(g.max_class_size()); }

std::vector<int> range(int begin, int count) {
    std::vector<int> q(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) q[static_cast<std::size_t>(i)] = begin + i;
    return q;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// One class mixer as an LCU on [controls..., sys, prep], active only when the
// control qubits hold `control_value`. PREP for a class smaller than the prep
// register is padded with identity.
StateVector lcu_class_mixer(const UnitaryRep &rep, std::size_t cls, StateVector state, const std::vector<int> &controls,
                            std::uint64_t control_value, const std::vector<int> &sys, const std::vector<int> &prep) {
    const auto &members = rep.group().classes()[cls].members;
    const int pw = static_cast<int>(prep.size());
    const auto local = prepare_uniform(members.size());
    const auto full = Eigen::Index{1} << pw;
    CMatrix prep_op = CMatrix::Identity(full, full);
    prep_op.topLeftCorner(local.matrix().rows(), local.matrix().cols()) = local.matrix();
    if (pw > 0) state = apply_matrix(state, prep_op, prep, controls, control_value);
    const auto all_controls = concat(controls, prep);
    for (std::size_t i = 0; i < members.size(); ++i) {
        const std::uint64_t value = (control_value << pw) | i;
        state = apply_basis_map(state, rep.action(members[i]), sys, all_controls, value);
    }
    if (pw > 0) state = apply_matrix(state, prep_op.adjoint(), prep, controls, control_value);
    return state;
}

}  // namespace

PostSelectedState class_mixer_apply(const UnitaryRep &rep, std::size_t cls, const StateVector &state) {
    if (state.n_qubits() != rep.n_qubits()) throw DimensionError("class_mixer_apply: width mismatch");
    const int pw = ceil_log2(rep.group().classes().at(cls).size());
    const auto sys = range(0, rep.n_qubits());
    const auto prep = range(rep.n_qubits(), pw);
    auto joint = lcu_class_mixer(rep, cls, state.tensor(StateVector(pw)), {}, 0, sys, prep);
    const auto branch = extract_branch(joint, Register{"prep", rep.n_qubits(), pw}, 0);
    const double p = branch.amplitudes().squaredNorm();
    if (p < kZeroProbability) throw ZeroProbabilityError("class mixer annihilates the state");
    return PostSelectedState{branch.normalized(), std::min(p, 1.0)};
}

PostSelectedState class_mixer_apply_via_oracle(const UnitaryRep &rep, std::size_t cls, const StateVector &state) {
    const CVector out = class_mixer_matrix(rep, cls) * state.amplitudes();
    const double p = out.squaredNorm();
    if (p < kZeroProbability) throw ZeroProbabilityError("class mixer annihilates the state");
    return PostSelectedState{StateVector(out / std::sqrt(p)), std::min(p, 1.0)};
}

StateVector select_over_classes_unnormalized(const UnitaryRep &rep, const StateVector &state) {
    const auto &g = rep.group();
    const int anc_w = state.n_qubits() - rep.n_qubits();
    if (anc_w < ceil_log2(g.num_classes())) throw DimensionError("select_over_classes: ancilla register too narrow");
    const int pw = prep_width(g);
    const auto anc = range(0, anc_w);
    const auto sys = range(anc_w, rep.n_qubits());
    const auto prep = range(anc_w + rep.n_qubits(), pw);
    auto joint = state.tensor(StateVector(pw));
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
        joint = lcu_class_mixer(rep, c, std::move(joint), anc, c, sys, prep);
    }
    return extract_branch(joint, Register{"prep", anc_w + rep.n_qubits(), pw}, 0);
}

PostSelectedState select_over_classes(const UnitaryRep &rep, const StateVector &state) {
    const auto out = select_over_classes_unnormalized(rep, state);
    const double p = out.amplitudes().squaredNorm();
    if (p < kZeroProbability) throw ZeroProbabilityError("select_over_classes: prep post-selection has zero weight");
    return PostSelectedState{StateVector(out.amplitudes() / std::sqrt(p)), std::min(p, 1.0)};
}

PostSelectedState select_over_classes_via_oracle(const UnitaryRep &rep, const StateVector &state) {
    const auto &g = rep.group();
    const int anc_w = state.n_qubits() - rep.n_qubits();
    if (anc_w < ceil_log2(g.num_classes())) throw DimensionError("select_over_classes: ancilla register too narrow");
    const auto anc_dim = Eigen::Index{1} << anc_w;
    const auto d = static_cast<Eigen::Index>(rep.dim());
    CMatrix big = CMatrix::Zero(anc_dim * d, anc_dim * d);
    for (Eigen::Index a = 0; a < anc_dim; ++a) {
        big.block(a * d, a * d, d, d) = static_cast<std::size_t>(a) < g.num_classes()
                                            ? class_mixer_matrix(rep, static_cast<std::size_t>(a))
                                            : CMatrix::Identity(d, d);
    }
    const CVector out = big * state.amplitudes();
    const double p = out.squaredNorm();
    if (p < kZeroProbability) throw ZeroProbabilityError("select_over_classes: zero weight");
    return PostSelectedState{StateVector(out / std::sqrt(p)), std::min(p, 1.0)};
}

namespace {

TgsaOutcome make_outcome(const UnitaryRep &rep, StateVector joint, int n_anc) {
    TgsaOutcome out;
    out.n_anc = n_anc;
    out.n_sys = rep.n_qubits();
    out.prep_probability = std::min(joint.amplitudes().squaredNorm(), 1.0);
    const Register anc{"anc", 0, n_anc};
    const auto &irreps = rep.group().irreps();
    for (std::size_t k = 0; k < irreps.size(); ++k) {
        TgsaBranch b;
        b.irrep = k;
        b.label = irreps[k].label;
        b.dim = irreps[k].dim;
        const auto branch = extract_branch(joint, anc, k);
        b.probability = branch.amplitudes().squaredNorm();
        b.amplitude = std::sqrt(b.probability);
        if (b.probability >= kZeroProbability) b.state = branch.normalized();
        out.branches.push_back(std::move(b));
    }
    out.joint = std::move(joint);
    return out;
}

}  // namespace

TgsaOutcome tgsa_apply(const UnitaryRep &rep, const StateVector &sys_state) {
    const int n_anc = ceil_log2(rep.group().num_classes());
    return tgsa_apply(rep, StateVector(n_anc), sys_state);
}

TgsaOutcome tgsa_apply(const UnitaryRep &rep, const StateVector &anc_state, const StateVector &sys_state) {
    if (sys_state.n_qubits() != rep.n_qubits()) throw DimensionError("tgsa_apply: system width mismatch");
    const auto qct = build_qct(rep.group());
    if (anc_state.n_qubits() != qct.n_anc) throw DimensionError("tgsa_apply: ancilla width mismatch");
    const auto anc = range(0, qct.n_anc);
    auto joint = anc_state.tensor(sys_state);
    joint = apply_matrix(joint, qct.unitary.matrix().adjoint(), anc);
    joint = select_over_classes_unnormalized(rep, joint);
    joint = apply_matrix(joint, qct.unitary.matrix(), anc);
    return make_outcome(rep, std::move(joint), qct.n_anc);
}

DenseOperator projector_matrix(const UnitaryRep &rep, std::size_t irrep) {
    const auto &g = rep.group();
    const auto d = static_cast<Eigen::Index>(rep.dim());
    CMatrix p = CMatrix::Zero(d, d);
    for (std::size_t e = 0; e < g.order(); ++e) {
        const cplx chi = g.character(irrep, e);
        const auto &a = rep.action(e);
        for (std::uint64_t j = 0; j < a.dim(); ++j) {
            p(static_cast<Eigen::Index>(a.image[j]), static_cast<Eigen::Index>(j)) += chi * a.phase_at(j);
        }
    }
    p *= static_cast<double>(g.irreps()[irrep].dim) / static_cast<double>(g.order());
    return DenseOperator(std::move(p));
}

TgsaOutcome tgsa_apply_via_oracle(const UnitaryRep &rep, const StateVector &sys_state) {
    const auto &g = rep.group();
    const int n_anc = ceil_log2(g.num_classes());
    CVector joint = CVector::Zero(static_cast<Eigen::Index>((std::uint64_t{1} << n_anc) * rep.dim()));
    const auto d = static_cast<Eigen::Index>(rep.dim());
    for (std::size_t k = 0; k < g.num_classes(); ++k) {
        const double inv_dim = 1.0 / g.irreps()[k].dim;
        joint.segment(static_cast<Eigen::Index>(k) * d, d) =
            inv_dim * (projector_matrix(rep, k).matrix() * sys_state.amplitudes());
    }
    return make_outcome(rep, StateVector(std::move(joint), true), n_anc);
}

PostSelectedState project_and_postselect(const UnitaryRep &rep, std::size_t irrep, const StateVector &state) {
    const auto out = tgsa_apply(rep, state);
    const auto &b = out.branches.at(irrep);
    if (!b.state) {
        throw ZeroProbabilityError("irrep " + b.label + " of " + rep.group().name() + " has zero weight in the input");
    }
    return PostSelectedState{*b.state, std::min(b.probability, 1.0)};
}

TgsaOutcome prepare_projection_abelian(const UnitaryRep &rep, const StateVector &state) {
    const auto &g = rep.group();
    if (!g.is_abelian()) {
        throw std::invalid_argument("prepare_projection_abelian: " + g.name() +
                                    " is non-abelian; the PREPARE weighting is only defined for abelian groups");
    }
    if (state.n_qubits() != rep.n_qubits()) throw DimensionError("prepare_projection_abelian: width mismatch");
    const auto qct = build_qct(g);
    const auto anc = range(0, qct.n_anc);
    auto joint = StateVector(qct.n_anc).tensor(state);
    joint = apply_matrix(joint, prepare_uniform(g.num_classes()).matrix(), anc);
    joint = select_over_classes_unnormalized(rep, joint);
    joint = apply_matrix(joint, qct.unitary.matrix(), anc);
    return make_outcome(rep, std::move(joint), qct.n_anc);
}

std::vector<std::uint64_t> sample_branches(const TgsaOutcome &outcome, std::uint64_t shots, std::uint64_t seed) {
    std::vector<double> p;
    for (const auto &b : outcome.branches) p.push_back(b.probability);
    return sample_counts(p, shots, seed);
}

}  // namespace symmetra
