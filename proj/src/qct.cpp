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

#include "symmetra/qct.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace symmetra {

QctMatrix build_qct(const CharacterTable &table) {
    const std::size_t n = table.size();
    if (n == 0 || table.class_sizes.size() != n) throw std::invalid_argument("build_qct: malformed character table");
    QctMatrix q;
    q.n_conj = n;
    q.n_anc = ceil_log2(n);
    const auto dim = Eigen::Index{1} << q.n_anc;
    CMatrix m = CMatrix::Identity(dim, dim);
    const double order = static_cast<double>(table.group_order);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                std::sqrt(static_cast<double>(table.class_sizes[c]) / order) * table.chi[r][c];
        }
    }
    const double defect = unitarity_defect(m);
    if (defect > kFlagTolerance) {
        throw std::runtime_error("build_qct: QCT for " + table.group + " is not unitary (defect " +
                                 std::to_string(defect) + "); character table is inconsistent");
    }
    q.unitary = DenseOperator(std::move(m), false, true);
    q.class_to_basis.resize(n);
    q.irrep_to_basis.resize(n);
    std::iota(q.class_to_basis.begin(), q.class_to_basis.end(), std::uint64_t{0});
    std::iota(q.irrep_to_basis.begin(), q.irrep_to_basis.end(), std::uint64_t{0});
    q.class_labels = table.class_labels;
    for (const auto &ir : table.irreps) q.irrep_labels.push_back(ir.label);
    return q;
}

DenseOperator qft_matrix(int m) {
    if (m < 1) throw std::invalid_argument("qft_matrix: m must be >= 1");
    const auto dim = Eigen::Index{1} << m;
    CMatrix f(dim, dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Eigen::Index k = 0; k < dim; ++k) {
        for (Eigen::Index v = 0; v < dim; ++v) {
            const auto kv = (k * v) % dim;
            f(k, v) = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(kv) / static_cast<double>(dim));
        }
    }
    return DenseOperator(std::move(f), false, true);
}

double verify_qct_equals_abelian_fourier(const FiniteGroup &g) {
    for (const auto &ir : g.irreps()) {
        if (ir.dim != 1) {
            throw std::invalid_argument("verify_qct_equals_abelian_fourier: " + g.name() +
                                        " has an irrep of dimension > 1");
        }
    }
    const auto q = build_qct(g);
    const double norm = 1.0 / std::sqrt(static_cast<double>(g.order()));
    double worst = 0.0;
    for (std::size_t k = 0; k < g.irreps().size(); ++k) {
        for (std::size_t e = 0; e < g.order(); ++e) {
            const cplx fourier = norm * g.character(k, e);
            const auto row = static_cast<Eigen::Index>(q.irrep_to_basis[k]);
            const auto col = static_cast<Eigen::Index>(q.class_to_basis[g.class_of(e)]);
            worst = std::max(worst, std::abs(fourier - q.unitary.matrix()(row, col)));
        }
    }
    return worst;
}

}  // namespace symmetra
