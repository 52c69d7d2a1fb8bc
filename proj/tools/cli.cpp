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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "acceptance.hpp"
#include "symmetra/io.hpp"
#include "symmetra/models.hpp"
#include "symmetra/resources.hpp"

namespace symmetra::cli {

namespace {

using io::Json;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class InvariantError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string &property) {
    if (!ok) throw InvariantError(property);
}

struct Common {
    std::string out_path;
    std::string format;
    std::uint64_t seed = 1;
};

void add_common(CLI::App *app, Common &c, const std::string &default_format) {
    c.format = default_format;
    app->add_option("--out", c.out_path, "Write the result to this file instead of stdout");
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app->add_option("--seed", c.seed, "Seed for all random draws (" + std::string(kRngName) + ")")->capture_default_str();
}

GroupPtr group_arg(const std::string &spec) {
    try {
        return parse_group(spec);
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
}

int int_field(const std::string &text, const std::string &what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception &) {
        throw UsageError("bad integer '" + text + "' in " + what);
    }
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    return parts;
}

constexpr const char *kRepHelp =
    "Representation: shift:m (Z_{2^m} on m qubits), parity:N, translation:N, perm:N:w (S_N on N blocks of w "
    "qubits), ising:N (Z_N x Z_2), h2 (S_2 x S_2 exchange/spin), h2-exchange, h2-spin";

UnitaryRep rep_arg(const std::string &spec) {
    const auto parts = split(spec, ':');
    const auto &kind = parts.empty() ? spec : parts[0];
    auto arg = [&](std::size_t i) {
        if (parts.size() <= i) throw UsageError("representation '" + spec + "' is missing a parameter");
        return int_field(parts[i], "representation '" + spec + "'");
    };
    try {
        if (kind == "shift") return cyclic_shift_rep(arg(1));
        if (kind == "parity") return parity_flip_rep(arg(1));
        if (kind == "translation") return site_translation_rep(arg(1));
        if (kind == "perm") return permutation_rep(arg(1), parts.size() > 2 ? arg(2) : 1);
        if (kind == "ising") return ising_symmetry_rep(arg(1));
        if (kind == "h2") return h2_sector_rep();
        if (kind == "h2-exchange") return h2_exchange_rep();
        if (kind == "h2-spin") return h2_spin_exchange_rep();
    } catch (const UsageError &) {
        throw;
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown representation '" + spec + "'");
}

constexpr const char *kStateHelp =
    "Input state: zero, random (seeded), h2-product (the (I, ZH, X, H) product state), a basis index, or a bit "
    "string such as 0b0110";

StateVector h2_product_state() {
    CMatrix had(2, 2), z(2, 2), x(2, 2);
    had << 1, 1, 1, -1;
    had /= std::sqrt(2.0);
    z << 1, 0, 0, -1;
    x << 0, 1, 1, 0;
    const CMatrix prep = kron(kron(kron(CMatrix::Identity(2, 2), z * had), x), had);
    return StateVector(CVector(prep * StateVector(4).amplitudes()));
}

StateVector state_arg(const std::string &spec, int n_qubits, std::uint64_t seed) {
    if (spec == "zero") return StateVector(n_qubits);
    if (spec == "random") {
        std::mt19937_64 rng(seed);
        return StateVector::random(n_qubits, rng);
    }
    if (spec == "h2-product") {
        if (n_qubits != 4) throw UsageError("h2-product needs a 4-qubit representation");
        return h2_product_state();
    }
    std::uint64_t index = 0;
    try {
        std::size_t used = 0;
        if (spec.rfind("0b", 0) == 0) {
            index = std::stoull(spec.substr(2), &used, 2);
            used += 2;
        } else {
            index = std::stoull(spec, &used, 10);
        }
        if (used != spec.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception &) {
        throw UsageError("bad state '" + spec + "'");
    }
    if (index >= (std::uint64_t{1} << n_qubits)) throw UsageError("basis index out of range for " + std::to_string(n_qubits) + " qubits");
    return StateVector::basis(n_qubits, index);
}

std::size_t irrep_arg(const FiniteGroup &g, const std::string &spec) {
    for (std::size_t i = 0; i < g.irreps().size(); ++i) {
        if (g.irreps()[i].label == spec) return i;
    }
    const int v = int_field(spec, "irrep");
    if (v < 0 || static_cast<std::size_t>(v) >= g.irreps().size()) throw UsageError("irrep index out of range");
    return static_cast<std::size_t>(v);
}

Rational parse_rational_or_throw(const std::string &text, double &value) {
    try {
        const auto [v, r] = parse_flux(text);
        value = v;
        return r.value_or(Rational{0, 0});
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
}

std::string csv_meta(const std::string &command, const Common &c) {
    return "# symmetra " + command + "\n# rng: " + std::string(kRngName) + ", seed " + std::to_string(c.seed) + "\n";
}

Json json_meta(const std::string &command, const Common &c) {
    return Json{{"command", command}, {"rng", kRngName}, {"seed", c.seed}};
}

// ---- subcommands ------------------------------------------------------------------

struct CharactersArgs {
    Common c;
    std::string group;
};

std::string cmd_characters(const CharactersArgs &a) {
    const auto g = group_arg(a.group);
    const auto &t = g->character_table();
    const auto res = verify_orthogonality(t);
    require(res.max() <= 1e-10, "character orthogonality violated (residual " + io::format_real(res.max()) + ")");
    if (a.c.format == "json") {
        Json j{{"meta", json_meta("characters", a.c)}, {"result", io::to_json(t)}};
        j["result"]["orthogonality_residual"] = res.max();
        return j.dump(2) + "\n";
    }
    return csv_meta("characters --group " + a.group, a.c) + io::character_table_csv(t);
}

struct QctArgs {
    Common c;
    std::string group;
};

std::string cmd_qct(const QctArgs &a) {
    const auto g = group_arg(a.group);
    QctMatrix q;
    try {
        q = build_qct(*g);
    } catch (const std::runtime_error &e) {
        throw InvariantError(std::string("QCT unitarity: ") + e.what());
    }
    if (a.c.format == "json") {
        return Json{{"meta", json_meta("qct", a.c)}, {"result", io::to_json(q)}}.dump(2) + "\n";
    }
    std::ostringstream os;
    os << csv_meta("qct --group " + a.group, a.c) << "row,col,re,im\n";
    const auto &m = q.unitary.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index col = 0; col < m.cols(); ++col)
            os << r << ',' << col << ',' << io::format_real(m(r, col).real()) << ',' << io::format_real(m(r, col).imag())
               << '\n';
    return os.str();
}

struct ProjectArgs {
    Common c;
    std::string rep;
    std::string irrep;
    std::string state = "random";
};

std::string cmd_project(const ProjectArgs &a) {
    const auto rep = rep_arg(a.rep);
    const auto psi = state_arg(a.state, rep.n_qubits(), a.c.seed);
    const auto g = irrep_arg(rep.group(), a.irrep);
    const auto p = projector_matrix(rep, g);
    const double herm = hermiticity_defect(p.matrix());
    require(herm <= 1e-10, "projector hermiticity violated");
    const auto out = project_and_postselect(rep, g, psi);
    if (a.c.format == "csv") {
        std::ostringstream os;
        os << csv_meta("project --rep " + a.rep + " --irrep " + a.irrep, a.c) << "# probability "
           << io::format_real(out.probability) << "\nindex,re,im\n";
        for (std::uint64_t i = 0; i < out.state.dim(); ++i) {
            os << i << ',' << io::format_real(out.state[i].real()) << ',' << io::format_real(out.state[i].imag()) << '\n';
        }
        return os.str();
    }
    Json r{{"representation", rep.name()},
           {"irrep", g},
           {"label", rep.group().irreps()[g].label},
           {"probability", out.probability},
           {"input", io::to_json(psi)},
           {"state", io::to_json(out.state)}};
    return Json{{"meta", json_meta("project", a.c)}, {"result", r}}.dump(2) + "\n";
}

struct TgsaArgs {
    Common c;
    std::string rep;
    std::string state = "random";
    std::uint64_t shots = 0;
};

std::string cmd_tgsa(const TgsaArgs &a) {
    const auto rep = rep_arg(a.rep);
    const auto psi = state_arg(a.state, rep.n_qubits(), a.c.seed);
    const auto out = tgsa_apply(rep, psi);
    double total = 0.0;
    for (const auto &b : out.branches) total += b.probability;
    require(std::abs(total - out.prep_probability) <= 1e-10,
            "branch probabilities do not sum to the prep success probability");
    std::vector<std::uint64_t> counts;
    if (a.shots > 0) counts = sample_branches(out, a.shots, a.c.seed);
    if (a.c.format == "csv") {
        std::ostringstream os;
        os << csv_meta("tgsa --rep " + a.rep, a.c) << "irrep,label,dim,probability,amplitude"
           << (a.shots ? ",count\n" : "\n");
        for (std::size_t i = 0; i < out.branches.size(); ++i) {
            const auto &b = out.branches[i];
            os << b.irrep << ',' << io::csv_field(b.label) << ',' << b.dim << ',' << io::format_real(b.probability) << ','
               << io::format_real(b.amplitude);
            if (a.shots) os << ',' << counts[i];
            os << '\n';
        }
        if (a.shots) os << "prep_failure,,," << io::format_real(1.0 - out.prep_probability) << ",," << counts.back() << '\n';
        return os.str();
    }
    Json r = io::to_json(out);
    r["representation"] = rep.name();
    r["input"] = io::to_json(psi);
    if (a.shots) {
        r["shots"] = a.shots;
        r["counts"] = counts;
    }
    return Json{{"meta", json_meta("tgsa", a.c)}, {"result", r}}.dump(2) + "\n";
}

struct SqpeArgs {
    Common c;
    std::string model = "h2";
    int n = 6;
    std::string config;
    std::string state;
    int m = 2;
    std::string b = "1/2";
    double jx = 1.0;
    double jy = 1.0;
    int sites = 4;
    double field = 0.5;
    double coupling = 1.0;
};

std::string cmd_sqpe(const SqpeArgs &a) {
    if (a.n < 1 || a.n > 12) throw UsageError("--n must be in [1, 12]");
    ModelHamiltonian model;
    StateVector psi;
    bool h2 = false;
    if (a.model == "h2") {
        h2 = true;
        model = h2_hamiltonian(H2Integrals::from_json_file(a.config.empty() ? acceptance::default_h2_config() : a.config));
        psi = state_arg(a.state.empty() ? "h2-product" : a.state, 4, a.c.seed);
    } else if (a.model == "harper") {
        double bv = 0.0;
        const auto r = parse_rational_or_throw(a.b, bv);
        model = r.q ? harper_hamiltonian(a.m, r, a.jx, a.jy) : harper_hamiltonian(a.m, bv, a.jx, a.jy);
        psi = state_arg(a.state.empty() ? "random" : a.state, 2 * a.m, a.c.seed);
    } else {
        model = ising_hamiltonian(a.sites, std::vector<double>(static_cast<std::size_t>(a.sites), a.field),
                                  std::vector<double>(static_cast<std::size_t>(a.sites), 0.0), a.coupling);
        psi = state_arg(a.state.empty() ? "random" : a.state, a.sites, a.c.seed);
    }
    auto r = sqpe(*model.symmetry, model.h, a.n, psi);
    if (h2) {
        for (std::size_t g = 0; g < r.branches.size(); ++g) r.branches[g].irrep_label = h2_sector_name(g);
    }
    for (const auto &b : r.branches) {
        if (b.weight < 1e-12) continue;
        const double s = std::accumulate(b.probabilities.begin(), b.probabilities.end(), 0.0);
        require(std::abs(s - 1.0) <= 1e-10, "phase distribution of " + b.irrep_label.value_or("?") + " does not sum to 1");
    }
    if (a.c.format == "json") {
        Json res = io::to_json(r);
        res["model"] = model.metadata;
        return Json{{"meta", json_meta("sqpe", a.c)}, {"result", res}}.dump(2) + "\n";
    }
    const std::pair<std::string, std::string> cols{"statistics", "spin"};
    std::ostringstream os;
    os << csv_meta("sqpe --model " + a.model + " --n " + std::to_string(a.n), a.c);
    os << "# calibration: E = E_min + (u / 2^n) / s, E_min " << io::format_real(r.calibration.e_min) << ", s "
       << io::format_real(r.calibration.scale) << ", bin " << io::format_real(r.calibration.bin_width()) << "\n";
    os << io::sqpe_csv(r, h2 ? &cols : nullptr);
    return os.str();
}

struct ModelArgs {
    Common c;
    std::string kind;
    int sites = 8;
    double field = 0.5;
    double longitudinal = 0.0;
    double coupling = 1.0;
    int m = 3;
    std::string b = "1/2";
    double jx = 1.0;
    double jy = 1.0;
    std::string sweep;
    std::string config;
};

int sweep_max_q(const std::string &s) {
    std::string t;
    for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    }
    if (t.rfind("q<=", 0) == 0) t = t.substr(3);
    const int q = int_field(t, "--sweep");
    if (q < 1) throw UsageError("--sweep bound must be >= 1");
    return q;
}

std::string cmd_model(const ModelArgs &a) {
    std::ostringstream os;
    if (a.kind == "ising") {
        const auto n = static_cast<std::size_t>(a.sites);
        const auto m = ising_hamiltonian(a.sites, std::vector<double>(n, a.field), std::vector<double>(n, a.longitudinal),
                                         a.coupling);
        std::vector<io::IsingBlockRow> rows;
        std::vector<double> all;
        for (int k = 0; k < a.sites; ++k) {
            for (int s = 0; s < 2; ++s) {
                for (double e : ising_block_spectrum(m.h, a.sites, k, s)) {
                    rows.push_back({k, s, e});
                    all.push_back(e);
                }
            }
        }
        if (a.longitudinal == 0.0) {
            std::sort(all.begin(), all.end());
            const auto full = exact_eigensystem(m.h).values;
            require(all.size() == full.size(), "Ising block dimensions do not sum to 2^N");
            for (std::size_t i = 0; i < all.size(); ++i) {
                require(std::abs(all[i] - full[i]) <= 1e-9, "Ising block spectra do not partition the full spectrum");
            }
        }
        os << csv_meta("model ising --sites " + std::to_string(a.sites), a.c) << io::ising_blocks_csv(rows);
        return os.str();
    }
    if (a.kind == "harper") {
        if (!a.sweep.empty()) {
            const auto pts = harper_butterfly(a.m, sweep_max_q(a.sweep), a.jx, a.jy);
            for (const auto &p : pts) {
                require(p.union_residual <= 1e-9, "block spectra differ from the full spectrum at b = " +
                                                      std::to_string(p.p) + "/" + std::to_string(p.q));
            }
            os << csv_meta("model harper --m " + std::to_string(a.m) + " --sweep " + a.sweep, a.c) << io::butterfly_csv(pts);
            return os.str();
        }
        double bv = 0.0;
        parse_rational_or_throw(a.b, bv);
        os << csv_meta("model harper --m " + std::to_string(a.m) + " --b " + a.b, a.c) << "k_y,E\n";
        const auto blocks = harper_momentum_blocks(a.m, bv, a.jx, a.jy);
        require(harper_block_residual(a.m, bv, a.jx, a.jy) <= 1e-10, "QFT_y block-diagonalization residual");
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            for (double e : exact_eigensystem(blocks[k]).values) os << k << ',' << io::format_real(e) << '\n';
        }
        return os.str();
    }
    // h2
    const auto m = h2_hamiltonian(H2Integrals::from_json_file(a.config.empty() ? acceptance::default_h2_config() : a.config));
    const auto rep = h2_sector_rep();
    os << csv_meta("model h2", a.c) << "statistics,spin,E\n";
    for (std::size_t g = 0; g < 4; ++g) {
        const auto name = h2_sector_name(g);
        const auto slash = name.find('/');
        for (double e : restricted_spectrum(m.h, projector_matrix(rep, g))) {
            os << name.substr(0, slash) << ',' << name.substr(slash + 1) << ',' << io::format_real(e) << '\n';
        }
    }
    return os.str();
}

struct ResourcesArgs {
    Common c;
    int m_min = 1;
    int m_max = 10;
    std::string group;
};

std::string cmd_resources(const ResourcesArgs &a) {
    if (a.m_min < 1 || a.m_max < a.m_min || a.m_max > 40) throw UsageError("need 1 <= --m-min <= --m-max <= 40");
    std::optional<ResourceEstimate> unary;
    GroupPtr g;
    if (!a.group.empty()) {
        g = group_arg(a.group);
        unary = unary_iteration_resources(static_cast<std::int64_t>(g->num_classes()),
                                          static_cast<std::int64_t>(g->max_class_size()));
    }
    if (a.c.format == "json") {
        Json rows = Json::array();
        for (int m = a.m_min; m <= a.m_max; ++m) {
            for (auto s : {IncrementScheme::Incrementer, IncrementScheme::Adder}) {
                rows.push_back(Json{{"m", m},
                                    {"scheme", to_string(s)},
                                    {"increment", io::to_json(cyclic_increment_resources(m, s))},
                                    {"select", io::to_json(cyclic_select_resources(m, s))}});
            }
        }
        Json r{{"cyclic", rows}};
        if (unary) {
            r["unary_iteration"] = io::to_json(*unary);
            r["unary_iteration"]["group"] = g->name();
            r["unary_iteration"]["n_conj"] = g->num_classes();
            r["unary_iteration"]["max_class_size"] = g->max_class_size();
        }
        return Json{{"meta", json_meta("resources", a.c)}, {"result", r}}.dump(2) + "\n";
    }
    std::string s = csv_meta("resources", a.c) + "# leading terms only; +O(1) constants dropped\n" +
                    io::resources_csv(a.m_min, a.m_max);
    if (unary) {
        s += "# unary iteration for " + g->name() + ": N_conj " + std::to_string(g->num_classes()) + ", max|C| " +
             std::to_string(g->max_class_size()) + ", T " + std::to_string(unary->t_count) + ", Toffoli " +
             std::to_string(unary->toffoli_count) + ", ancilla " + std::to_string(unary->ancilla_qubits) + "\n";
    }
    return s;
}

struct SelftestArgs {
    std::string inject;
    std::vector<int> criteria;
    std::string config;
    std::uint64_t seed = acceptance::Options{}.seed;
};

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Symmetry-adapted quantum circuits: characters, QCT, projections, SQPE, models and resources"};
    app.name("symmetra");
    app.require_subcommand(1);

    CharactersArgs ch;
    auto *sc = app.add_subcommand("characters", "Character table of a group");
    add_common(sc, ch.c, "csv");
    sc->add_option("--group", ch.group, "Group: zM, sN or products like z4xz2")->required();
    sc->footer("CSV: irrep,dim,<class>[<size>]... rows in irrep order; complex entries as \"[re, im]\".");

    QctArgs qa;
    auto *sq = app.add_subcommand("qct", "Quantum character transform matrix");
    add_common(sq, qa.c, "json");
    sq->add_option("--group", qa.group, "Group: zM, sN or products")->required();
    sq->footer("CSV: row,col,re,im (rows are irreps, columns classes, identity padding beyond).");

    ProjectArgs pa;
    auto *sp = app.add_subcommand("project", "Project a state onto one irrep and post-select");
    add_common(sp, pa.c, "json");
    sp->add_option("--rep", pa.rep, kRepHelp)->required();
    sp->add_option("--irrep", pa.irrep, "Irrep index or label")->required();
    sp->add_option("--state", pa.state, kStateHelp)->capture_default_str();
    sp->footer("CSV: index,re,im of the normalized post-selected state; probability in a comment line.");

    TgsaArgs ta;
    auto *st = app.add_subcommand("tgsa", "Symmetry-adapted transform with branch probabilities");
    add_common(st, ta.c, "json");
    st->add_option("--rep", ta.rep, kRepHelp)->required();
    st->add_option("--state", ta.state, kStateHelp)->capture_default_str();
    st->add_option("--shots", ta.shots, "Sample this many post-selection shots")->capture_default_str();
    st->footer("CSV: irrep,label,dim,probability,amplitude[,count]; a final prep_failure row when sampling.");

    SqpeArgs qp;
    auto *sqp = app.add_subcommand("sqpe", "Symmetry-adapted phase estimation");
    add_common(sqp, qp.c, "csv");
    sqp->add_option("--model", qp.model, "Model")->check(CLI::IsMember({"h2", "harper", "ising"}))->capture_default_str();
    sqp->add_option("--n", qp.n, "Phase qubits")->capture_default_str();
    sqp->add_option("--config", qp.config, "H2 integrals JSON (default: configs/h2_sto3g.json)");
    sqp->add_option("--state", qp.state, kStateHelp);
    sqp->add_option("--m", qp.m, "Harper: qubits per side")->capture_default_str();
    sqp->add_option("--b", qp.b, "Harper: flux p/q or decimal")->capture_default_str();
    sqp->add_option("--jx", qp.jx, "Harper: x hopping")->capture_default_str();
    sqp->add_option("--jy", qp.jy, "Harper: y hopping")->capture_default_str();
    sqp->add_option("--sites", qp.sites, "Ising: sites")->capture_default_str();
    sqp->add_option("--field", qp.field, "Ising: uniform transverse field")->capture_default_str();
    sqp->add_option("--coupling", qp.coupling, "Ising: J")->capture_default_str();
    sqp->footer(
        "CSV: irrep_label (h2: statistics,spin),u,probability,energy,conditional_probability. probability is the "
        "joint P(irrep, u); energy = E_min + (u / 2^n) / s.");

    ModelArgs ma;
    auto *sm = app.add_subcommand("model", "Model spectra by symmetry sector");
    add_common(sm, ma.c, "csv");
    sm->add_option("kind", ma.kind, "ising | harper | h2")->required()->check(CLI::IsMember({"ising", "harper", "h2"}));
    sm->add_option("--sites", ma.sites, "Ising: sites")->capture_default_str();
    sm->add_option("--field", ma.field, "Ising: uniform transverse field a")->capture_default_str();
    sm->add_option("--longitudinal", ma.longitudinal, "Ising: uniform longitudinal field w")->capture_default_str();
    sm->add_option("--coupling", ma.coupling, "Ising: J")->capture_default_str();
    sm->add_option("--m", ma.m, "Harper: qubits per side")->capture_default_str();
    sm->add_option("--b", ma.b, "Harper: flux p/q or decimal")->capture_default_str();
    sm->add_option("--jx", ma.jx, "Harper: x hopping")->capture_default_str();
    sm->add_option("--jy", ma.jy, "Harper: y hopping")->capture_default_str();
    sm->add_option("--sweep", ma.sweep, "Harper: butterfly over reduced b = p/q with q <= Q, given as 'q<=Q' or Q");
    sm->add_option("--config", ma.config, "H2 integrals JSON");
    sm->footer(
        "CSV: ising k,sigma,E; harper k_y,E (single b) or p,q,b,E (--sweep); h2 statistics,spin,E.");

    ResourcesArgs ra;
    auto *sr = app.add_subcommand("resources", "Leading-term gate counts");
    add_common(sr, ra.c, "csv");
    sr->add_option("--m-min", ra.m_min, "Smallest register width")->capture_default_str();
    sr->add_option("--m-max", ra.m_max, "Largest register width")->capture_default_str();
    sr->add_option("--group", ra.group, "Also report unary-iteration SELECT cost for this group");
    sr->footer("CSV: m,scheme,stage,t_count,toffoli_count,ancilla_qubits,qubits,sequential_ops,depth_class.");

    SelftestArgs sa;
    auto *ss = app.add_subcommand("selftest", "Run the acceptance suite (tolerances scaled by SYMMETRA_TOL)");
    ss->add_option("--inject", sa.inject, "Negative control")->check(CLI::IsMember({"character-table"}));
    ss->add_option("--criterion", sa.criteria, "Run only these criteria (1-11)");
    ss->add_option("--config", sa.config, "H2 integrals JSON");
    ss->add_option("--seed", sa.seed, "Seed")->capture_default_str();

    std::vector<std::string> storage;
    storage.push_back("symmetra");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "symmetra: " << e.what() << "\n";
        if (const auto *sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
            err << sub->help();
        } else {
            err << "Run 'symmetra --help' for usage.\n";
        }
        return kExitUsage;
    }

    try {
        if (sc->parsed()) emit(cmd_characters(ch), ch.c.out_path, out);
        if (sq->parsed()) emit(cmd_qct(qa), qa.c.out_path, out);
        if (sp->parsed()) emit(cmd_project(pa), pa.c.out_path, out);
        if (st->parsed()) emit(cmd_tgsa(ta), ta.c.out_path, out);
        if (sqp->parsed()) emit(cmd_sqpe(qp), qp.c.out_path, out);
        if (sm->parsed()) emit(cmd_model(ma), ma.c.out_path, out);
        if (sr->parsed()) emit(cmd_resources(ra), ra.c.out_path, out);
        if (ss->parsed()) {
            acceptance::Options opts;
            opts.tol_scale = acceptance::tolerance_scale_from_env();
            opts.inject_character_table = sa.inject == "character-table";
            opts.h2_config = sa.config;
            opts.seed = sa.seed;
            std::vector<int> ids = sa.criteria;
            if (ids.empty()) {
                for (int i = 1; i <= acceptance::kNumCriteria; ++i) ids.push_back(i);
            }
            for (int id : ids) {
                if (id < 1 || id > acceptance::kNumCriteria) throw UsageError("--criterion must be in [1, 11]");
            }
            const auto results = acceptance::run_all(opts, ids, out);
            for (const auto &r : results) {
                if (!r.pass) {
                    err << "symmetra: selftest failed: criterion " << r.id << " (" << r.title << ")\n";
                    return kExitInvariant;
                }
            }
        }
    } catch (const UsageError &e) {
        err << "symmetra: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "symmetra: invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error &e) {
        err << "symmetra: size limit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "symmetra: invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}

}  // namespace symmetra::cli
