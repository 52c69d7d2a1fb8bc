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

#include "symmetra/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace symmetra {

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int q) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), q));
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<Partition> Partition::all(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    // Parts are generated largest-first, so the output is descending lexicographic.
    auto rec = [&](auto &&self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    if (n >= 1) rec(rec, n, n);
    return out;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation images must form a bijection");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
    auto p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
    return p;
}

Permutation Permutation::cycle(int n, const std::vector<int> &points) {
    auto p = identity(n);
    for (std::size_t i = 0; i < points.size(); ++i) {
        p.images_[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
    }
    return Permutation(p.images_);
}

Permutation Permutation::operator*(const Permutation &rhs) const {
    if (rhs.size() != size()) {
        throw std::invalid_argument("cannot compose permutations of different degree");
    }
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) {
        im[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
    }
    Permutation out;
    out.images_ = std::move(im);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) {
        im[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    }
    Permutation out;
    out.images_ = std::move(im);
    return out;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i)) return false;
    }
    return true;
}

int Permutation::sign() const {
    int transpositions = 0;
    const auto type = cycle_type();
    for (int len : type.parts()) transpositions += len - 1;
    return transpositions % 2 == 0 ? 1 : -1;
}

std::string Permutation::cycle_notation() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i)) continue;
        out += "(";
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

// ---------------------------------------------------------------------------
// Canonical coding

std::vector<int> canonical_digits(const Permutation &g) {
    const int n = g.size();
    std::vector<int> digits(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
    Permutation h = g;
    // Peel off c_{(1..k)}^{i_{k-1}} from the left, k = n, n-1, ..., 2. The
    // remainder fixes k, and c^i sends k to i (1-based) for i >= 1.
    for (int k = n; k >= 2; --k) {
        const int image = h(k - 1) + 1;
        const int digit = image == k ? 0 : image;
        digits[static_cast<std::size_t>(k - 2)] = digit;
        if (digit) {
            std::vector<int> pts(static_cast<std::size_t>(k));
            std::iota(pts.begin(), pts.end(), 0);
            Permutation c = Permutation::cycle(n, pts);
            Permutation c_inv_pow = Permutation::identity(n);
            const Permutation c_inv = c.inverse();
            for (int t = 0; t < digit; ++t) c_inv_pow = c_inv * c_inv_pow;
            h = c_inv_pow * h;
        }
    }
    return digits;
}

std::uint64_t canonical_index(const Permutation &g) {
    const int n = g.size();
    const auto digits = canonical_digits(g);
    const std::uint64_t nfact = factorial(n);
    std::uint64_t index = 0;
    for (std::size_t j = 1; j <= digits.size(); ++j) {
        index += static_cast<std::uint64_t>(digits[j - 1]) * (nfact / factorial(static_cast<int>(j) + 1));
    }
    return index;
}

Permutation permutation_from_canonical_index(int n, std::uint64_t index) {
    const std::uint64_t nfact = factorial(n);
    if (index >= nfact) {
        throw std::out_of_range("canonical index out of range");
    }
    Permutation g = Permutation::identity(n);
    // Digit i_j has weight N!/(j+1)! and range j+1: a mixed-radix expansion.
    std::vector<int> digits(static_cast<std::size_t>(std::max(n - 1, 0)));
    for (int j = 1; j <= n - 1; ++j) {
        const std::uint64_t weight = nfact / factorial(j + 1);
        digits[static_cast<std::size_t>(j - 1)] = static_cast<int>((index / weight) % static_cast<std::uint64_t>(j + 1));
    }
    // g = c_n^{i_{n-1}} ... c_3^{i_2} c_2^{i_1}; build right to left.
    for (int j = 1; j <= n - 1; ++j) {
        std::vector<int> pts(static_cast<std::size_t>(j + 1));
        std::iota(pts.begin(), pts.end(), 0);
        const Permutation c = Permutation::cycle(n, pts);
        for (int t = 0; t < digits[static_cast<std::size_t>(j - 1)]; ++t) g = c * g;
    }
    return g;
}

// ---------------------------------------------------------------------------
// Frobenius character formula

namespace {

using Exponents = std::vector<int>;
using Poly = std::map<Exponents, long long>;

/// Multiplies by P_q(x) = sum_i x_i^q, dropping monomials that overshoot target.
Poly multiply_power_sum(const Poly &p, int q, const Exponents &target) {
    Poly out;
    for (const auto &[exps, coeff] : p) {
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] + q > target[i]) continue;
            Exponents e = exps;
            e[i] += q;
            out[e] += coeff;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

}  // namespace

long long frobenius_character(const Partition &lambda, const Partition &mu) {
    if (lambda.total() != mu.total()) {
        throw std::invalid_argument("frobenius_character: lambda and mu must partition the same N");
    }
    const int k = static_cast<int>(lambda.length());
    Exponents target(static_cast<std::size_t>(k));
    for (int n = 1; n <= k; ++n) {
        target[static_cast<std::size_t>(n - 1)] = lambda.parts()[static_cast<std::size_t>(n - 1)] + k - n;
    }

    // Vandermonde prod_{a<b}(x_a - x_b) = sum_sigma sgn(sigma) prod_a x_a^{k-1-sigma(a)}.
    Poly poly;
    std::vector<int> sigma(static_cast<std::size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        Exponents e(static_cast<std::size_t>(k));
        bool fits = true;
        for (int a = 0; a < k; ++a) {
            e[static_cast<std::size_t>(a)] = k - 1 - sigma[static_cast<std::size_t>(a)];
            fits = fits && e[static_cast<std::size_t>(a)] <= target[static_cast<std::size_t>(a)];
        }
        if (!fits) continue;
        int inversions = 0;
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                if (sigma[static_cast<std::size_t>(a)] > sigma[static_cast<std::size_t>(b)]) ++inversions;
            }
        }
        poly[e] += inversions % 2 == 0 ? 1 : -1;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    for (int part : mu.parts()) {
        poly = multiply_power_sum(poly, part, target);
    }
    const auto it = poly.find(target);
    return it == poly.end() ? 0 : it->second;
}

// ---------------------------------------------------------------------------
// Elements

bool operator==(const ProductPair &a, const ProductPair &b) { return a.parts == b.parts; }

std::string GroupElement::str() const {
    switch (kind()) {
        case GroupKind::cyclic:
            return std::to_string(std::get<CyclicValue>(value).value);
        case GroupKind::symmetric:
            return std::get<Permutation>(value).cycle_notation();
        case GroupKind::product: {
            const auto &p = std::get<ProductPair>(value);
            return "(" + p.parts[0].str() + "," + p.parts[1].str() + ")";
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Orthogonality

OrthogonalityResidual verify_orthogonality(const CharacterTable &t) {
    OrthogonalityResidual r;
    const std::size_t n = t.chi.size();
    const double order = static_cast<double>(t.group_order);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            cplx row = 0.0;
            cplx col = 0.0;
            for (std::size_t c = 0; c < n; ++c) {
                row += static_cast<double>(t.class_sizes[c]) / order * t.chi[a][c] * std::conj(t.chi[b][c]);
                col += t.chi[c][a] * std::conj(t.chi[c][b]);
            }
            const double row_expect = a == b ? 1.0 : 0.0;
            const double col_expect = a == b ? order / static_cast<double>(t.class_sizes[a]) : 0.0;
            r.row = std::max(r.row, std::abs(row - row_expect));
            r.column = std::max(r.column, std::abs(col - col_expect));
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// FiniteGroup

std::size_t FiniteGroup::index_of(const GroupElement &g) const {
    if (g.kind() != kind_) {
        throw std::out_of_range("element kind does not match group " + name_);
    }
    switch (kind_) {
        case GroupKind::cyclic: {
            const auto &c = std::get<CyclicValue>(g.value);
            if (c.modulus != static_cast<std::uint32_t>(parameter_) || c.value >= c.modulus) {
                throw std::out_of_range("cyclic element not in " + name_);
            }
            return c.value;
        }
        case GroupKind::symmetric: {
            const auto &p = std::get<Permutation>(g.value);
            if (p.size() != parameter_) throw std::out_of_range("permutation degree mismatch for " + name_);
            return static_cast<std::size_t>(canonical_index(p));
        }
        case GroupKind::product: {
            const auto &p = std::get<ProductPair>(g.value);
            return factors_[0]->index_of(p.parts[0]) * factors_[1]->order() + factors_[1]->index_of(p.parts[1]);
        }
    }
    throw std::logic_error("unreachable");
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
    switch (kind_) {
        case GroupKind::cyclic:
            return (a + b) % order();
        case GroupKind::symmetric:
            return static_cast<std::size_t>(canonical_index(std::get<Permutation>(elements_[a].value) *
                                                            std::get<Permutation>(elements_[b].value)));
        case GroupKind::product: {
            const std::size_t n2 = factors_[1]->order();
            return factors_[0]->multiply(a / n2, b / n2) * n2 + factors_[1]->multiply(a % n2, b % n2);
        }
    }
    throw std::logic_error("unreachable");
}

std::size_t FiniteGroup::inverse(std::size_t a) const {
    switch (kind_) {
        case GroupKind::cyclic:
            return (order() - a) % order();
        case GroupKind::symmetric:
            return static_cast<std::size_t>(canonical_index(std::get<Permutation>(elements_[a].value).inverse()));
        case GroupKind::product: {
            const std::size_t n2 = factors_[1]->order();
            return factors_[0]->inverse(a / n2) * n2 + factors_[1]->inverse(a % n2);
        }
    }
    throw std::logic_error("unreachable");
}

bool FiniteGroup::is_abelian() const { return num_classes() == order(); }

std::size_t FiniteGroup::max_class_size() const {
    std::size_t m = 0;
    for (const auto &c : classes_) m = std::max(m, c.size());
    return m;
}

void FiniteGroup::finish_classes(std::vector<std::size_t> class_key) {
    // class_key[e] is the class label of element e; labels are already in the
    // canonical order, so only membership lists remain to be filled.
    class_of_ = std::move(class_key);
    for (std::size_t e = 0; e < elements_.size(); ++e) {
        auto &cls = classes_[class_of_[e]];
        if (cls.members.empty()) cls.representative = e;
        cls.members.push_back(e);
    }
    table_.class_sizes.clear();
    table_.class_labels.clear();
    for (const auto &c : classes_) {
        table_.class_sizes.push_back(c.size());
        table_.class_labels.push_back(c.name);
    }
    table_.group = name_;
    table_.group_order = elements_.size();
}

GroupPtr cyclic_group(int m) {
    if (m < 1) throw std::invalid_argument("cyclic_group: M must be >= 1");
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->kind_ = GroupKind::cyclic;
    g->name_ = "Z" + std::to_string(m);
    g->parameter_ = m;
    const auto um = static_cast<std::uint32_t>(m);
    std::vector<std::size_t> key;
    for (std::uint32_t v = 0; v < um; ++v) {
        g->elements_.push_back(GroupElement{CyclicValue{v, um}});
        g->classes_.push_back(ConjugacyClass{v, std::to_string(v), 0, {}});
        key.push_back(v);
    }
    g->finish_classes(std::move(key));
    auto &t = g->table_;
    t.chi.assign(um, std::vector<cplx>(um));
    for (std::uint32_t k = 0; k < um; ++k) {
        t.irreps.push_back(IrrepInfo{"k=" + std::to_string(k), 1});
        for (std::uint32_t v = 0; v < um; ++v) {
            // Reduce kv mod M before scaling so the phase stays exact for large M.
            const auto kv = static_cast<std::uint64_t>(k) * v % um;
            t.chi[k][v] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(kv) / m);
        }
    }
    return g;
}

GroupPtr symmetric_group(int n, int cap) {
    if (n < 1) throw std::invalid_argument("symmetric_group: N must be >= 1");
    if (n > cap) {
        throw GroupSizeError("symmetric_group: N=" + std::to_string(n) + " exceeds the enumeration cap of " +
                             std::to_string(cap));
    }
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->kind_ = GroupKind::symmetric;
    g->name_ = "S" + std::to_string(n);
    g->parameter_ = n;

    // Classes: cycle types in ascending lexicographic order, identity (1^N) first.
    auto partitions = Partition::all(n);
    std::vector<Partition> class_parts(partitions.rbegin(), partitions.rend());
    std::map<Partition, std::size_t> class_index;
    for (std::size_t c = 0; c < class_parts.size(); ++c) {
        class_index[class_parts[c]] = c;
        g->classes_.push_back(ConjugacyClass{c, class_parts[c].str(), 0, {}});
    }

    const std::uint64_t count = factorial(n);
    std::vector<std::size_t> key;
    for (std::uint64_t i = 0; i < count; ++i) {
        auto p = permutation_from_canonical_index(n, i);
        key.push_back(class_index.at(p.cycle_type()));
        g->elements_.push_back(GroupElement{std::move(p)});
    }
    g->finish_classes(std::move(key));

    // Irreps: ascending dimension, ties by descending partition; trivial first.
    struct Row {
        Partition lambda;
        std::vector<long long> chi;
    };
    std::vector<Row> rows;
    for (const auto &lambda : partitions) {
        Row r{lambda, {}};
        for (const auto &mu : class_parts) r.chi.push_back(frobenius_character(lambda, mu));
        rows.push_back(std::move(r));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row &a, const Row &b) {
        if (a.chi[0] != b.chi[0]) return a.chi[0] < b.chi[0];
        return a.lambda > b.lambda;
    });
    auto &t = g->table_;
    std::vector<std::vector<long long>> ints;
    for (const auto &r : rows) {
        t.irreps.push_back(IrrepInfo{r.lambda.str(), static_cast<int>(r.chi[0])});
        t.chi.emplace_back(r.chi.begin(), r.chi.end());
        ints.push_back(r.chi);
    }
    t.integer_chi = std::move(ints);
    return g;
}

GroupPtr product_group(GroupPtr a, GroupPtr b) {
    if (!a || !b) throw std::invalid_argument("product_group: null factor");
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->kind_ = GroupKind::product;
    g->name_ = a->name() + "x" + b->name();
    g->factors_ = {a, b};
    const std::size_t na = a->order();
    const std::size_t nb = b->order();
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            g->elements_.push_back(GroupElement{ProductPair{{a->element(i), b->element(j)}}});
        }
    }
    const std::size_t ca = a->num_classes();
    const std::size_t cb = b->num_classes();
    for (std::size_t i = 0; i < ca; ++i) {
        for (std::size_t j = 0; j < cb; ++j) {
            g->classes_.push_back(ConjugacyClass{i * cb + j,
                                                 "(" + a->classes()[i].name + "|" + b->classes()[j].name + ")", 0, {}});
        }
    }
    std::vector<std::size_t> key(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) key[i * nb + j] = a->class_of(i) * cb + b->class_of(j);
    }
    g->finish_classes(std::move(key));

    const auto &ta = a->character_table();
    const auto &tb = b->character_table();
    auto &t = g->table_;
    const bool exact = ta.integer_chi.has_value() && tb.integer_chi.has_value();
    std::vector<std::vector<long long>> ints;
    for (std::size_t r1 = 0; r1 < ca; ++r1) {
        for (std::size_t r2 = 0; r2 < cb; ++r2) {
            t.irreps.push_back(IrrepInfo{"(" + ta.irreps[r1].label + "|" + tb.irreps[r2].label + ")",
                                         ta.irreps[r1].dim * tb.irreps[r2].dim});
            std::vector<cplx> row;
            std::vector<long long> irow;
            for (std::size_t c1 = 0; c1 < ca; ++c1) {
                for (std::size_t c2 = 0; c2 < cb; ++c2) {
                    row.push_back(ta.chi[r1][c1] * tb.chi[r2][c2]);
                    if (exact) irow.push_back((*ta.integer_chi)[r1][c1] * (*tb.integer_chi)[r2][c2]);
                }
            }
            t.chi.push_back(std::move(row));
            if (exact) ints.push_back(std::move(irow));
        }
    }
    if (exact) t.integer_chi = std::move(ints);
    return g;
}

GroupPtr parse_group(const std::string &spec) {
    std::string s;
    for (char c : spec) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    const auto x = s.find('x');
    if (x != std::string::npos) {
        return product_group(parse_group(s.substr(0, x)), parse_group(s.substr(x + 1)));
    }
    if (s.size() < 2 || (s[0] != 'z' && s[0] != 's')) {
        throw std::invalid_argument("unknown group '" + spec + "' (expected e.g. z4, s3, z8xz2)");
    }
    int value = 0;
    try {
        std::size_t used = 0;
        value = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception &) {
        throw std::invalid_argument("unknown group '" + spec + "' (expected e.g. z4, s3, z8xz2)");
    }
    return s[0] == 'z' ? cyclic_group(value) : symmetric_group(value);
}

}  // namespace symmetra
