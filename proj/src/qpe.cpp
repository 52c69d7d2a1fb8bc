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

#include "symmetra/qpe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace symmetra {

EnergyCalibration EnergyCalibration::from_range(double e_min, double e_max, int n) {
    if (n < 1) throw std::invalid_argument("EnergyCalibration: n must be >= 1");
    if (e_max < e_min) throw std::invalid_argument("EnergyCalibration: empty range");
    EnergyCalibration c;
    c.e_min = e_min;
    c.e_max = e_max;
    c.n = n;
    c.scale = (1.0 - std::ldexp(1.0, -n)) / (e_max - e_min + kPad);
    return c;
}

double EnergyCalibration::bin_width() const { return std::ldexp(1.0, -n) / scale; }

double phase_to_energy(std::uint64_t u, int n, const EnergyCalibration &cal) {
    return cal.e_min + std::ldexp(static_cast<double>(u), -n) / cal.scale;
}

std::uint64_t PhaseDistribution::peak() const {
    return static_cast<std::uint64_t>(std::max_element(probabilities.begin(), probabilities.end()) -
                                      probabilities.begin());
}

namespace {

// Runs the QPE register logic on `state` whose system occupies `sys` and whose
// last n qubits are the phase register (initialized to |0>).
StateVector run_phase_register(StateVector state, const CMatrix &u, const std::vector<int> &sys, int first_phase,
                               int n) {
    CMatrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    for (int j = 0; j < n; ++j) {
        const int q = first_phase + j;
        state = apply_matrix(state, h, std::vector<int>{q});
    }
    // Phase qubit n-1 (least significant) controls U, qubit n-2 controls U^2, ...
    CMatrix power = u;
    for (int j = n - 1; j >= 0; --j) {
        state = apply_matrix(state, power, sys, std::vector<int>{first_phase + j}, 1);
        if (j > 0) power = power * power;
    }
    std::vector<int> phase(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) phase[static_cast<std::size_t>(j)] = first_phase + j;
    return apply_matrix(state, qft_matrix(n).matrix().adjoint(), phase);
}

std::vector<int> iota_vec(int begin, int count) {
    std::vector<int> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = begin + i;
    return v;
}

}  // namespace

PhaseDistribution qpe(const DenseOperator &u, const StateVector &state, int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("qpe: n must be in [1, 16]");
    if (unitarity_defect(u.matrix()) > kFlagTolerance) throw std::invalid_argument("qpe: operator is not unitary");
    if (u.dim() != state.dim()) throw DimensionError("qpe: operator/state dimension mismatch");
    const int ns = state.n_qubits();
    auto joint = run_phase_register(state.tensor(StateVector(n)), u.matrix(), iota_vec(0, ns), ns, n);
    PhaseDistribution d;
    d.n = n;
    d.probabilities = register_distribution(joint, Register{"phase", ns, n});
    return d;
}

DenseOperator evolution_unitary(const DenseOperator &h, const EnergyCalibration &cal) {
    const auto es = exact_eigensystem(h);
    CVector phases(static_cast<Eigen::Index>(es.values.size()));
    for (std::size_t i = 0; i < es.values.size(); ++i) {
        phases[static_cast<Eigen::Index>(i)] =
            std::polar(1.0, 2.0 * std::numbers::pi * cal.scale * (es.values[i] - cal.e_min));
    }
    CMatrix u = es.vectors * phases.asDiagonal() * es.vectors.adjoint();
    return DenseOperator(std::move(u), false, true);
}

void check_symmetry(const UnitaryRep &rep, const DenseOperator &h, double tol) {
    if (h.dim() != rep.dim()) throw DimensionError("check_symmetry: dimension mismatch");
    const auto &g = rep.group();
    for (std::size_t e = 0; e < g.order(); ++e) {
        const CMatrix r = rep.matrix(e);
        const double c = (h.matrix() * r - r * h.matrix()).cwiseAbs().maxCoeff();
        if (c > tol) {
            throw SymmetryError("Hamiltonian does not commute with rho(" + g.element(e).str() + ") of " + g.name() +
                                " (commutator " + std::to_string(c) + ")");
        }
    }
}

SqpeResult sqpe(const UnitaryRep &rep, const DenseOperator &h, int n, const StateVector &sys_state) {
    return sqpe(rep, h, n, StateVector(ceil_log2(rep.group().num_classes())), sys_state);
}

SqpeResult sqpe(const UnitaryRep &rep, const DenseOperator &h, int n, const StateVector &anc_state,
                const StateVector &sys_state) {
    if (n < 1 || n > 12) throw std::invalid_argument("sqpe: n must be in [1, 12]");
    check_symmetry(rep, h);
    const auto es = exact_eigensystem(h);
    SqpeResult result;
    result.calibration = EnergyCalibration::from_range(es.values.front(), es.values.back(), n);
    const auto u = evolution_unitary(h, result.calibration);

    const auto t = tgsa_apply(rep, anc_state, sys_state);
    result.prep_probability = t.prep_probability;
    const int na = t.n_anc;
    const int ns = t.n_sys;
    const auto joint = run_phase_register(t.joint.tensor(StateVector(n)), u.matrix(), iota_vec(na, ns), na + ns, n);

    const std::uint64_t phase_dim = std::uint64_t{1} << n;
    for (const auto &b : t.branches) {
        PhaseDistribution d;
        d.n = n;
        d.irrep_label = b.label;
        d.calibration = result.calibration;
        d.weight = b.probability;
        d.probabilities.assign(phase_dim, 0.0);
        const auto branch = extract_branch(joint, Register{"anc", 0, na}, b.irrep);
        for (std::uint64_t i = 0; i < branch.dim(); ++i) d.probabilities[i % phase_dim] += std::norm(branch[i]);
        if (b.probability >= kZeroProbability) {
            for (auto &p : d.probabilities) p /= b.probability;
        }
        result.branches.push_back(std::move(d));
    }
    return result;
}

std::vector<double> restricted_spectrum(const DenseOperator &h, const DenseOperator &projector) {
    Eigen::SelfAdjointEigenSolver<CMatrix> ps((projector.matrix() + projector.matrix().adjoint()) / 2.0);
    std::vector<Eigen::Index> cols;
    for (Eigen::Index i = 0; i < ps.eigenvalues().size(); ++i) {
        if (ps.eigenvalues()[i] > 0.5) cols.push_back(i);
    }
    if (cols.empty()) return {};
    CMatrix basis(projector.matrix().rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = ps.eigenvectors().col(cols[c]);
    const CMatrix block = basis.adjoint() * h.matrix() * basis;
    const auto es = exact_eigensystem(DenseOperator((block + block.adjoint()) / 2.0, true));
    return es.values;
}

}  // namespace symmetra
