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

#include <string>
#include <vector>

#include "symmetra/groups.hpp"
#include "symmetra/simulator.hpp"

namespace symmetra {

/// Quantum character transform on ceil(log2 N_conj) ancilla qubits.
/// Entry (irrep, class) = sqrt(|C|/|G|) chi_irrep(C); identity on padding.
struct QctMatrix {
    DenseOperator unitary;
    int n_anc = 0;
    std::size_t n_conj = 0;
    std::vector<std::uint64_t> class_to_basis;
    std::vector<std::uint64_t> irrep_to_basis;
    std::vector<std::string> class_labels;
    std::vector<std::string> irrep_labels;
};

/// Throws std::runtime_error if the result is not unitary to 1e-10, which
/// signals a broken character table.
QctMatrix build_qct(const CharacterTable &table);
inline QctMatrix build_qct(const FiniteGroup &g) { return build_qct(g.character_table()); }

/// (1/sqrt M) e^{2 pi i k v / M}, rows k, columns v, M = 2^m.
DenseOperator qft_matrix(int m);

/// Max deviation between the QCT block and the element-basis Fourier transform
/// F(k, g) = chi_k(g)/sqrt|G|. Only defined when every irrep is one
/// dimensional; throws std::invalid_argument otherwise.
double verify_qct_equals_abelian_fourier(const FiniteGroup &g);

}  // namespace symmetra
