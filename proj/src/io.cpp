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

#include "symmetra/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace symmetra::io {

std::string format_real(double x) {
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string format_character(cplx z) {
    auto clean = [](double v) { return std::abs(v - std::round(v)) <= 1e-12 ? std::round(v) : v; };
    if (std::abs(z.imag()) <= 1e-12) return format_real(clean(z.real()));
    return "\"[" + format_real(clean(z.real())) + ", " + format_real(clean(z.imag())) + "]\"";
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    return out + "\"";
}

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CharacterTable &t) {
    Json j;
    j["group"] = t.group;
    j["order"] = t.group_order;
    Json classes = Json::array();
    for (std::size_t c = 0; c < t.class_labels.size(); ++c) {
        classes.push_back(Json{{"label", t.class_labels[c]}, {"size", t.class_sizes[c]}});
    }
    j["classes"] = classes;
    Json irreps = Json::array();
    for (std::size_t g = 0; g < t.irreps.size(); ++g) {
        Json row = Json::array();
        for (std::size_t c = 0; c < t.class_labels.size(); ++c) {
            if (t.integer_chi) {
                row.push_back((*t.integer_chi)[g][c]);
            } else {
                row.push_back(complex_json(t.chi[g][c]));
            }
        }
        irreps.push_back(Json{{"label", t.irreps[g].label}, {"dim", t.irreps[g].dim}, {"characters", row}});
    }
    j["irreps"] = irreps;
    return j;
}

Json to_json(const QctMatrix &q) {
    Json j;
    j["n_anc"] = q.n_anc;
    j["n_conj"] = q.n_conj;
    j["class_labels"] = q.class_labels;
    j["irrep_labels"] = q.irrep_labels;
    Json rows = Json::array();
    const auto &m = q.unitary.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    return j;
}

Json to_json(const StateVector &s) {
    Json amps = Json::array();
    for (std::uint64_t i = 0; i < s.dim(); ++i) amps.push_back(complex_json(s[i]));
    return Json{{"n_qubits", s.n_qubits()}, {"amplitudes", amps}};
}

Json to_json(const TgsaOutcome &o) {
    Json j;
    j["n_anc"] = o.n_anc;
    j["n_sys"] = o.n_sys;
    j["prep_probability"] = o.prep_probability;
    Json branches = Json::array();
    for (const auto &b : o.branches) {
        Json bj{{"irrep", b.irrep}, {"label", b.label}, {"dim", b.dim}, {"probability", b.probability},
                {"amplitude", b.amplitude}};
        bj["state"] = b.state ? to_json(*b.state) : Json(nullptr);
        branches.push_back(bj);
    }
    j["branches"] = branches;
    return j;
}

Json to_json(const PhaseDistribution &d) {
    Json j;
    j["n"] = d.n;
    j["irrep_label"] = d.irrep_label ? Json(*d.irrep_label) : Json(nullptr);
    j["weight"] = d.weight;
    j["peak"] = d.peak();
    if (d.calibration) j["peak_energy"] = phase_to_energy(d.peak(), d.n, *d.calibration);
    j["probabilities"] = d.probabilities;
    return j;
}

Json to_json(const SqpeResult &r) {
    Json j;
    j["calibration"] = Json{{"e_min", r.calibration.e_min},
                            {"e_max", r.calibration.e_max},
                            {"scale", r.calibration.scale},
                            {"n", r.calibration.n},
                            {"bin_width", r.calibration.bin_width()},
                            {"convention", "U = exp(2 pi i s (H - E_min)); E = E_min + (u / 2^n) / s"}};
    j["prep_probability"] = r.prep_probability;
    Json branches = Json::array();
    for (const auto &b : r.branches) branches.push_back(to_json(b));
    j["branches"] = branches;
    return j;
}

Json to_json(const ResourceEstimate &r) {
    return Json{{"t_count", r.t_count},
                {"toffoli_count", r.toffoli_count},
                {"ancilla_qubits", r.ancilla_qubits},
                {"qubits", r.qubits},
                {"sequential_ops", r.sequential_ops},
                {"depth_class", to_string(r.depth_class)},
                {"leading_term_only", r.leading_term_only}};
}

std::string character_table_csv(const CharacterTable &t) {
    std::ostringstream os;
    os << "irrep,dim";
    for (std::size_t c = 0; c < t.class_labels.size(); ++c) os << ',' << csv_field(t.class_labels[c] + "[" + std::to_string(t.class_sizes[c]) + "]");
    os << '\n';
    for (std::size_t g = 0; g < t.irreps.size(); ++g) {
        os << csv_field(t.irreps[g].label) << ',' << t.irreps[g].dim;
        for (std::size_t c = 0; c < t.class_labels.size(); ++c) {
            if (t.integer_chi) {
                os << ',' << (*t.integer_chi)[g][c];
            } else {
                os << ',' << format_character(t.chi[g][c]);
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string butterfly_csv(const std::vector<ButterflyPoint> &points) {
    std::ostringstream os;
    os << "p,q,b,E\n";
    for (const auto &pt : points) {
        for (double e : pt.energies) os << pt.p << ',' << pt.q << ',' << format_real(pt.b) << ',' << format_real(e) << '\n';
    }
    return os.str();
}

std::string ising_blocks_csv(const std::vector<IsingBlockRow> &rows) {
    std::ostringstream os;
    os << "k,sigma,E\n";
    for (const auto &r : rows) os << r.k << ',' << r.sigma << ',' << format_real(r.energy) << '\n';
    return os.str();
}

std::string sqpe_csv(const SqpeResult &r, const std::pair<std::string, std::string> *split_label) {
    std::ostringstream os;
    if (split_label) {
        os << split_label->first << ',' << split_label->second;
    } else {
        os << "irrep_label";
    }
    os << ",u,probability,energy,conditional_probability\n";
    for (const auto &b : r.branches) {
        const std::string raw = b.irrep_label.value_or("");
        std::string label = csv_field(raw);
        if (split_label) {
            const auto slash = raw.find('/');
            label = csv_field(raw.substr(0, slash)) + "," +
                    csv_field(slash == std::string::npos ? "" : raw.substr(slash + 1));
        }
        for (std::uint64_t u = 0; u < b.probabilities.size(); ++u) {
            os << label << ',' << u << ',' << format_real(b.weight * b.probabilities[u]) << ','
               << format_real(phase_to_energy(u, b.n, r.calibration)) << ',' << format_real(b.probabilities[u]) << '\n';
        }
    }
    return os.str();
}

std::string resources_csv(int m_min, int m_max) {
    std::ostringstream os;
    os << "m,scheme,stage,t_count,toffoli_count,ancilla_qubits,qubits,sequential_ops,depth_class\n";
    for (int m = m_min; m <= m_max; ++m) {
        for (auto scheme : {IncrementScheme::Incrementer, IncrementScheme::Adder}) {
            for (int stage = 0; stage < 2; ++stage) {
                const auto r = stage == 0 ? cyclic_increment_resources(m, scheme) : cyclic_select_resources(m, scheme);
                os << m << ',' << to_string(scheme) << ',' << (stage == 0 ? "increment" : "select") << ',' << r.t_count
                   << ',' << r.toffoli_count << ',' << r.ancilla_qubits << ',' << r.qubits << ',' << r.sequential_ops
                   << ',' << to_string(r.depth_class) << '\n';
            }
        }
    }
    return os.str();
}

}  // namespace symmetra::io
