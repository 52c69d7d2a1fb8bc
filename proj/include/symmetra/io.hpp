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

// JSON and CSV serialization. Complex numbers are always [re, im] in JSON and
// in CSV cells that carry a non-zero imaginary part. Object keys keep
// insertion order so output is byte-stable.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symmetra/models.hpp"
#include "symmetra/resources.hpp"

namespace symmetra::io {

using Json = nlohmann::ordered_json;

/// "%.15g" with negative zero printed as 0.
std::string format_real(double x);
/// Real when |im| <= 1e-12 (and integral values print without a fraction),
/// otherwise "[re, im]" (quoted, so it stays one CSV cell).
std::string format_character(cplx z);

/// Quotes a CSV cell when it contains a comma, quote or newline.
std::string csv_field(const std::string &s);

Json complex_json(cplx z);
Json to_json(const CharacterTable &t);
Json to_json(const QctMatrix &q);
Json to_json(const StateVector &s);
Json to_json(const TgsaOutcome &o);
Json to_json(const PhaseDistribution &d);
Json to_json(const SqpeResult &r);
Json to_json(const ResourceEstimate &r);

/// Wide table: irrep,dim,<one column per class>; a second header row is
/// avoided by naming class columns "<label>[<size>]".
std::string character_table_csv(const CharacterTable &t);

/// Columns p,q,b,E (one row per eigenvalue).
std::string butterfly_csv(const std::vector<ButterflyPoint> &points);

struct IsingBlockRow {
    int k = 0;
    int sigma = 0;
    double energy = 0.0;
};
/// Columns k,sigma,E.
std::string ising_blocks_csv(const std::vector<IsingBlockRow> &rows);

/// Columns irrep_label,u,probability,energy,conditional_probability where
/// probability is the joint P(irrep, u). With split_label the label
/// "a/b" is emitted as two columns named by the header pair.
std::string sqpe_csv(const SqpeResult &r, const std::pair<std::string, std::string> *split_label = nullptr);

/// Columns m,scheme,stage,t_count,toffoli_count,ancilla_qubits,qubits,sequential_ops,depth_class.
std::string resources_csv(int m_min, int m_max);

}  // namespace symmetra::io
