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

// Leading-term fault-tolerant cost formulas. Constant (+O(1)) terms are not
// modelled; every estimate carries leading_term_only = true.

#include <cstdint>
#include <string>

namespace symmetra {

enum class DepthClass { Constant, Linear, Quadratic, Exponential };
std::string to_string(DepthClass d);

enum class IncrementScheme { Incrementer, Adder };
IncrementScheme parse_increment_scheme(const std::string &name);
std::string to_string(IncrementScheme s);

struct ResourceEstimate {
    std::int64_t t_count = 0;
    std::int64_t toffoli_count = 0;
    std::int64_t ancilla_qubits = 0;
    /// Data qubits the primitive acts on (0 when not applicable).
    std::int64_t qubits = 0;
    /// Number of sequential primitive applications (1 for a single block).
    std::int64_t sequential_ops = 1;
    DepthClass depth_class = DepthClass::Constant;
    bool leading_term_only = true;
};

/// One controlled +1 on an m-qubit register.
/// Incrementer: T 12(m+1), Toffoli 3(m+1), ancilla ceil(log2 m).
/// Adder:       T 8m,      Toffoli 4m,      ancilla m.
ResourceEstimate cyclic_increment_resources(int m, IncrementScheme scheme);

/// SELECT over Z_{2^m} powers. Incrementer: 2^m - 1 sequential increments.
/// Adder: one controlled addition per ancilla bit, T 8m^2, Toffoli 4m^2.
ResourceEstimate cyclic_select_resources(int m, IncrementScheme scheme);

/// Unary iteration over D = N_conj * max|C| indices: T 4D - 4, Toffoli D - 1,
/// ancilla ceil(log2 N_conj) + ceil(log2 max|C|) - 1 (floored at 0).
ResourceEstimate unary_iteration_resources(std::int64_t n_conj, std::int64_t max_class_size);

}  // namespace symmetra
