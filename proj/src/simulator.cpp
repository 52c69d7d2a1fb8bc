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

#include "symmetra/simulator.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace symmetra {

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

int ceil_log2(std::uint64_t n) {
    int bits = 0;
    while ((std::uint64_t{1} << bits) < n) ++bits;
    return bits;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int n_qubits) : amps_(CVector::Zero(Eigen::Index{1} << n_qubits)), n_qubits_(n_qubits) {
    if (n_qubits < 0 || n_qubits > 30) throw DimensionError("StateVector: qubit count out of range");
    amps_[0] = 1.0;
}

StateVector::StateVector(CVector amplitudes, bool subnormalized)
    : amps_(std::move(amplitudes)), subnormalized_(subnormalized) {
    const auto n = static_cast<std::uint64_t>(amps_.size());
    if (!is_power_of_two(n)) throw DimensionError("StateVector: length must be a power of two");
    n_qubits_ = ceil_log2(n);
    if (!subnormalized_ && std::abs(amps_.norm() - 1.0) > kFlagTolerance) {
        throw std::invalid_argument("StateVector: amplitudes are not normalized");
    }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) throw DimensionError("StateVector::basis: index out of range");
    s.amps_[0] = 0.0;
    s.amps_[static_cast<Eigen::Index>(index)] = 1.0;
    return s;
}

StateVector StateVector::random(int n_qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector v(Eigen::Index{1} << n_qubits);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v[i] = cplx(re, im);
    }
    v /= v.norm();
    return StateVector(std::move(v));
}

StateVector StateVector::normalized() const {
    const double n = amps_.norm();
    if (n * n < kZeroProbability) throw ZeroProbabilityError("cannot normalize a zero-weight state");
    return StateVector(amps_ / n);
}

StateVector StateVector::tensor(const StateVector &other) const {
    CVector out(amps_.size() * other.amps_.size());
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        out.segment(i * other.amps_.size(), other.amps_.size()) = amps_[i] * other.amps_;
    }
    return StateVector(std::move(out), subnormalized_ || other.subnormalized_);
}

cplx StateVector::inner(const StateVector &other) const {
    if (other.dim() != dim()) throw DimensionError("inner: dimension mismatch");
    return amps_.dot(other.amps_);
}

// ---------------------------------------------------------------------------
// DenseOperator

double hermiticity_defect(const CMatrix &m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

double unitarity_defect(const CMatrix &m) {
    return (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

double op_norm(const CMatrix &m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DenseOperator::DenseOperator(CMatrix m, bool hermitian, bool unitary)
    : m_(std::move(m)), hermitian_(hermitian), unitary_(unitary) {
    if (m_.rows() != m_.cols()) throw DimensionError("DenseOperator: matrix must be square");
    if (hermitian_ && hermiticity_defect(m_) > kFlagTolerance) {
        throw std::invalid_argument("DenseOperator: matrix flagged hermitian is not");
    }
    if (unitary_ && unitarity_defect(m_) > kFlagTolerance) {
        throw std::invalid_argument("DenseOperator: matrix flagged unitary is not");
    }
}

DenseOperator DenseOperator::identity(std::uint64_t dim) {
    return DenseOperator(CMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)), true,
                         true);
}

int DenseOperator::n_qubits() const {
    if (!is_power_of_two(dim())) throw DimensionError("DenseOperator: dimension is not a power of two");
    return ceil_log2(dim());
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out;
    out.m_ = m_.adjoint();
    out.hermitian_ = hermitian_;
    out.unitary_ = unitary_;
    return out;
}

DenseOperator DenseOperator::operator*(const DenseOperator &rhs) const {
    if (rhs.dim() != dim()) throw DimensionError("DenseOperator product: dimension mismatch");
    DenseOperator out;
    out.m_ = m_ * rhs.m_;
    out.unitary_ = unitary_ && rhs.unitary_;
    return out;
}

DenseOperator DenseOperator::kron(const DenseOperator &rhs) const {
    DenseOperator out;
    out.m_ = symmetra::kron(m_, rhs.m_);
    out.hermitian_ = hermitian_ && rhs.hermitian_;
    out.unitary_ = unitary_ && rhs.unitary_;
    return out;
}

// ---------------------------------------------------------------------------
// Registers

std::vector<int> Register::qubits() const {
    std::vector<int> q(static_cast<std::size_t>(width));
    std::iota(q.begin(), q.end(), offset);
    return q;
}

RegisterLayout &RegisterLayout::add(std::string name, int width) {
    if (width < 0) throw std::invalid_argument("RegisterLayout: negative width");
    for (const auto &r : regs_) {
        if (r.name == name) throw std::invalid_argument("RegisterLayout: duplicate register " + name);
    }
    regs_.push_back(Register{std::move(name), total_, width});
    total_ += width;
    return *this;
}

const Register &RegisterLayout::operator[](const std::string &name) const {
    for (const auto &r : regs_) {
        if (r.name == name) return r;
    }
    throw std::out_of_range("RegisterLayout: no register named " + name);
}

// ---------------------------------------------------------------------------
// BasisMap

BasisMap BasisMap::identity(std::uint64_t dim) {
    BasisMap m;
    m.image.resize(dim);
    std::iota(m.image.begin(), m.image.end(), std::uint64_t{0});
    return m;
}

void BasisMap::validate() const {
    std::vector<bool> seen(image.size(), false);
    for (auto v : image) {
        if (v >= image.size() || seen[v]) throw std::invalid_argument("BasisMap: image is not a bijection");
        seen[v] = true;
    }
    if (!phase.empty() && phase.size() != image.size()) throw std::invalid_argument("BasisMap: phase size mismatch");
}

BasisMap BasisMap::compose(const BasisMap &rhs) const {
    if (rhs.dim() != dim()) throw DimensionError("BasisMap::compose: dimension mismatch");
    BasisMap out;
    out.image.resize(dim());
    const bool phased = !phase.empty() || !rhs.phase.empty();
    if (phased) out.phase.resize(dim());
    for (std::uint64_t j = 0; j < dim(); ++j) {
        const auto mid = rhs.image[j];
        out.image[j] = image[mid];
        if (phased) out.phase[j] = phase_at(mid) * rhs.phase_at(j);
    }
    return out;
}

BasisMap BasisMap::inverse() const {
    BasisMap out;
    out.image.resize(dim());
    if (!phase.empty()) out.phase.resize(dim());
    for (std::uint64_t j = 0; j < dim(); ++j) {
        out.image[image[j]] = j;
        if (!phase.empty()) out.phase[image[j]] = std::conj(phase[j]);
    }
    return out;
}

CMatrix BasisMap::dense() const {
    const auto d = static_cast<Eigen::Index>(dim());
    CMatrix m = CMatrix::Zero(d, d);
    for (std::uint64_t j = 0; j < dim(); ++j) {
        m(static_cast<Eigen::Index>(image[j]), static_cast<Eigen::Index>(j)) = phase_at(j);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Kernels

namespace {

struct LocalIndexer {
    std::vector<std::uint64_t> offsets;  // local index -> global bit pattern
    std::uint64_t target_mask = 0;
    std::uint64_t control_mask = 0;
    std::uint64_t control_pattern = 0;
};

LocalIndexer make_indexer(int n, std::span<const int> targets, std::span<const int> controls,
                          std::uint64_t control_value) {
    LocalIndexer ix;
    const auto bit = [n](int q) -> std::uint64_t {
        if (q < 0 || q >= n) throw DimensionError("qubit index out of range");
        return std::uint64_t{1} << (n - 1 - q);
    };
    const std::size_t k = targets.size();
    for (int q : targets) {
        if (ix.target_mask & bit(q)) throw DimensionError("duplicate target qubit");
        ix.target_mask |= bit(q);
    }
    if (controls.size() < 64 && (control_value >> controls.size()) != 0) {
        throw DimensionError("control value does not fit the control register");
    }
    for (std::size_t j = 0; j < controls.size(); ++j) {
        const auto b = bit(controls[j]);
        if ((ix.target_mask | ix.control_mask) & b) throw DimensionError("control overlaps target");
        ix.control_mask |= b;
        if ((control_value >> (controls.size() - 1 - j)) & 1U) ix.control_pattern |= b;
    }
    ix.offsets.assign(std::size_t{1} << k, 0);
    for (std::uint64_t l = 0; l < ix.offsets.size(); ++l) {
        std::uint64_t g = 0;
        for (std::size_t t = 0; t < k; ++t) {
            if ((l >> (k - 1 - t)) & 1U) g |= bit(targets[t]);
        }
        ix.offsets[l] = g;
    }
    return ix;
}

}  // namespace

StateVector apply_matrix(const StateVector &state, const CMatrix &op, std::span<const int> targets,
                         std::span<const int> controls, std::uint64_t control_value) {
    const auto ix = make_indexer(state.n_qubits(), targets, controls, control_value);
    const auto local = static_cast<Eigen::Index>(ix.offsets.size());
    if (op.rows() != local || op.cols() != local) throw DimensionError("apply_matrix: operator/target size mismatch");
    CVector out = state.amplitudes();
    CVector gathered(local);
    for (std::uint64_t base = 0; base < state.dim(); ++base) {
        if (base & ix.target_mask) continue;
        if ((base & ix.control_mask) != ix.control_pattern) continue;
        for (Eigen::Index l = 0; l < local; ++l) gathered[l] = state[base | ix.offsets[static_cast<std::size_t>(l)]];
        const CVector res = op * gathered;
        for (Eigen::Index l = 0; l < local; ++l) {
            out[static_cast<Eigen::Index>(base | ix.offsets[static_cast<std::size_t>(l)])] = res[l];
        }
    }
    return StateVector(std::move(out), true);
}

StateVector apply_basis_map(const StateVector &state, const BasisMap &map, std::span<const int> targets,
                            std::span<const int> controls, std::uint64_t control_value) {
    const auto ix = make_indexer(state.n_qubits(), targets, controls, control_value);
    if (map.dim() != ix.offsets.size()) throw DimensionError("apply_basis_map: map/target size mismatch");
    CVector out = state.amplitudes();
    for (std::uint64_t base = 0; base < state.dim(); ++base) {
        if (base & ix.target_mask) continue;
        if ((base & ix.control_mask) != ix.control_pattern) continue;
        for (std::uint64_t l = 0; l < map.dim(); ++l) {
            out[static_cast<Eigen::Index>(base | ix.offsets[map.image[l]])] =
                map.phase_at(l) * state[base | ix.offsets[l]];
        }
    }
    return StateVector(std::move(out), true);
}

StateVector apply_operator(const DenseOperator &op, const StateVector &state, const Register &target) {
    if (op.dim() != target.dim()) throw DimensionError("apply_operator: operator does not match register width");
    const auto q = target.qubits();
    auto out = apply_matrix(state, op.matrix(), q);
    return StateVector(out.amplitudes(), state.subnormalized() || !op.unitary());
}

StateVector controlled_apply(const Register &control, std::uint64_t index, const DenseOperator &op,
                             const StateVector &state, const Register &target) {
    if (index >= control.dim()) throw DimensionError("controlled_apply: index exceeds control register");
    if (op.dim() != target.dim()) throw DimensionError("controlled_apply: operator does not match register width");
    const auto t = target.qubits();
    const auto c = control.qubits();
    auto out = apply_matrix(state, op.matrix(), t, c, index);
    return StateVector(out.amplitudes(), state.subnormalized() || !op.unitary());
}

CMatrix embed_operator(const CMatrix &op, int n_qubits, const Register &target) {
    if (target.offset + target.width > n_qubits) throw DimensionError("embed_operator: register exceeds width");
    const auto left = CMatrix::Identity(Eigen::Index{1} << target.offset, Eigen::Index{1} << target.offset);
    const int right_bits = n_qubits - target.offset - target.width;
    const auto right = CMatrix::Identity(Eigen::Index{1} << right_bits, Eigen::Index{1} << right_bits);
    return kron(kron(left, op), right);
}

StateVector project_register(const StateVector &state, const Register &reg, std::uint64_t outcome) {
    if (outcome >= reg.dim()) throw DimensionError("project_register: outcome exceeds register");
    const auto q = reg.qubits();
    const auto ix = make_indexer(state.n_qubits(), {}, q, outcome);
    CVector out = CVector::Zero(static_cast<Eigen::Index>(state.dim()));
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if ((i & ix.control_mask) == ix.control_pattern) out[static_cast<Eigen::Index>(i)] = state[i];
    }
    return StateVector(std::move(out), true);
}

PostSelectedState measure_register(const StateVector &state, const Register &reg, std::uint64_t outcome) {
    const auto projected = project_register(state, reg, outcome);
    const double p = projected.amplitudes().squaredNorm();
    if (p < kZeroProbability) {
        throw ZeroProbabilityError("measure_register: outcome " + std::to_string(outcome) + " on register '" +
                                   reg.name + "' has zero probability");
    }
    return PostSelectedState{StateVector(projected.amplitudes() / std::sqrt(p)), std::min(p, 1.0)};
}

PostSelectedState measure_register(const PostSelectedState &state, const Register &reg, std::uint64_t outcome) {
    auto next = measure_register(state.state, reg, outcome);
    next.probability *= state.probability;
    return next;
}

std::vector<double> register_distribution(const StateVector &state, const Register &reg) {
    std::vector<double> p(reg.dim(), 0.0);
    const int n = state.n_qubits();
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const std::uint64_t value = (i >> (n - reg.offset - reg.width)) & (reg.dim() - 1);
        p[value] += std::norm(state[i]);
    }
    return p;
}

StateVector extract_branch(const StateVector &state, const Register &reg, std::uint64_t outcome) {
    if (outcome >= reg.dim()) throw DimensionError("extract_branch: outcome exceeds register");
    const int n = state.n_qubits();
    const int low_bits = n - reg.offset - reg.width;
    const std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;
    const int rest = n - reg.width;
    CVector out(Eigen::Index{1} << rest);
    for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(out.size()); ++r) {
        const std::uint64_t high = r >> low_bits;
        const std::uint64_t low = r & low_mask;
        const std::uint64_t full = (((high << reg.width) | outcome) << low_bits) | low;
        out[static_cast<Eigen::Index>(r)] = state[full];
    }
    return StateVector(std::move(out), true);
}

std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities, std::uint64_t shots,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> cumulative(probabilities.size());
    std::partial_sum(probabilities.begin(), probabilities.end(), cumulative.begin());
    std::vector<std::uint64_t> counts(probabilities.size() + 1, 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        // 53 random bits -> uniform double in [0, 1); platform independent.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        ++counts[static_cast<std::size_t>(it - cumulative.begin())];
    }
    return counts;
}

Eigensystem exact_eigensystem(const DenseOperator &op) {
    if (!op.hermitian()) throw std::invalid_argument("exact_eigensystem: operator is not flagged hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(op.matrix());
    if (solver.info() != Eigen::Success) throw std::runtime_error("exact_eigensystem: diagonalization failed");
    Eigensystem es;
    const auto &vals = solver.eigenvalues();
    es.values.assign(vals.data(), vals.data() + vals.size());
    es.vectors = solver.eigenvectors();
    return es;
}

cplx expectation(const StateVector &state, const DenseOperator &op) {
    if (op.dim() != state.dim()) throw DimensionError("expectation: dimension mismatch");
    return state.amplitudes().dot(op.matrix() * state.amplitudes());
}

}  // namespace symmetra
