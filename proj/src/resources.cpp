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

#include "symmetra/resources.hpp"

#include <algorithm>
#include <stdexcept>

namespace symmetra {

namespace {

std::int64_t ceil_log2_int(std::int64_t n) {
    std::int64_t r = 0;
    while ((std::int64_t{1} << r) < n) ++r;
    return r;
}

void check_m(int m, const char *who) {
    // 2^m - 1 increments must fit comfortably in 64 bits.
    if (m < 1 || m > 40) throw std::invalid_argument(std::string(who) + ": m must be in [1, 40]");
}

}  // namespace

std::string to_string(DepthClass d) {
    switch (d) {
        case DepthClass::Constant: return "constant";
        case DepthClass::Linear: return "linear";
        case DepthClass::Quadratic: return "quadratic";
        case DepthClass::Exponential: return "exponential";
    }
    return "unknown";
}

IncrementScheme parse_increment_scheme(const std::string &name) {
    if (name == "incrementer") return IncrementScheme::Incrementer;
    if (name == "adder") return IncrementScheme::Adder;
    throw std::invalid_argument("unknown increment scheme '" + name + "' (expected incrementer|adder)");
}

std::string to_string(IncrementScheme s) { return s == IncrementScheme::Incrementer ? "incrementer" : "adder"; }

ResourceEstimate cyclic_increment_resources(int m, IncrementScheme scheme) {
    check_m(m, "cyclic_increment_resources");
    ResourceEstimate r;
    r.depth_class = DepthClass::Linear;
    if (scheme == IncrementScheme::Incrementer) {
        r.t_count = 12 * (m + 1);
        r.toffoli_count = 3 * (m + 1);
        r.ancilla_qubits = ceil_log2_int(m);
        r.qubits = m + 1;
    } else {
        r.t_count = 8 * m;
        r.toffoli_count = 4 * m;
        r.ancilla_qubits = m;
        r.qubits = m;
    }
    return r;
}

ResourceEstimate cyclic_select_resources(int m, IncrementScheme scheme) {
    auto r = cyclic_increment_resources(m, scheme);
    if (scheme == IncrementScheme::Incrementer) {
        r.sequential_ops = (std::int64_t{1} << m) - 1;
        r.t_count *= r.sequential_ops;
        r.toffoli_count *= r.sequential_ops;
        r.depth_class = DepthClass::Exponential;
    } else {
        r.sequential_ops = m;
        r.t_count *= m;
        r.toffoli_count *= m;
        r.depth_class = DepthClass::Quadratic;
    }
    return r;
}

ResourceEstimate unary_iteration_resources(std::int64_t n_conj, std::int64_t max_class_size) {
    if (n_conj < 1 || max_class_size < 1) {
        throw std::invalid_argument("unary_iteration_resources: N_conj and max|C| must be >= 1");
    }
    const std::int64_t d = n_conj * max_class_size;
    ResourceEstimate r;
    r.t_count = 4 * d - 4;
    r.toffoli_count = d - 1;
    r.ancilla_qubits = std::max<std::int64_t>(0, ceil_log2_int(n_conj) + ceil_log2_int(max_class_size) - 1);
    r.sequential_ops = d;
    r.depth_class = DepthClass::Linear;
    return r;
}

}  // namespace symmetra
