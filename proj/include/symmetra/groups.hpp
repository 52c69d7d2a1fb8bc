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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace symmetra {

using cplx = std::complex<double>;

/// Raised when a group would be too large to enumerate densely.
class GroupSizeError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Weakly decreasing sequence of positive integers. Labels both the
/// cycle types (classes) and the irreps of S_N.
class Partition {
   public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    int total() const;
    std::size_t length() const { return parts_.size(); }

    /// "(2,1,1)"
    std::string str() const;

    /// Number of parts equal to q.
    int multiplicity(int q) const;

    /// All partitions of n, descending lexicographic ((n) first, (1^n) last).
    static std::vector<Partition> all(int n);

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &a, const Partition &b) { return a.parts_ <=> b.parts_; }

   private:
    std::vector<int> parts_;
};

/// Bijection on {0..N-1}. images()[i] is g(i); composition is (g*h)(i) = g(h(i)).
class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Swaps a and b (0-based).
    static Permutation transposition(int n, int a, int b);
    /// The cycle a_0 -> a_1 -> ... -> a_{k-1} -> a_0 (0-based points).
    static Permutation cycle(int n, const std::vector<int> &points);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int> &images() const { return images_; }

    Permutation operator*(const Permutation &rhs) const;
    Permutation inverse() const;
    Partition cycle_type() const;
    bool is_identity() const;
    /// +1 for even permutations, -1 for odd.
    int sign() const;
    std::string cycle_notation() const;

    friend bool operator==(const Permutation &, const Permutation &) = default;

   private:
    std::vector<int> images_;
};

/// Index of g in [0, N!) from its canonical-coding digits, where
/// g = c_{(1..N)}^{i_{N-1}} ... c_{(1,2,3)}^{i_2} c_{(1,2)}^{i_1} with i_j in Z_{j+1}
/// and index = sum_j i_j * N!/(j+1)!.
std::uint64_t canonical_index(const Permutation &g);
Permutation permutation_from_canonical_index(int n, std::uint64_t index);
/// Canonical-coding digits (i_1, ..., i_{N-1}).
std::vector<int> canonical_digits(const Permutation &g);

/// Chi_lambda(C_mu) via the Frobenius formula: coefficient of x^{l} in
/// Delta(x) * prod_q P_q(x)^{j_q}, with l_n = lambda_n + k - n. Exact integer
/// arithmetic throughout. Throws std::invalid_argument when |lambda| != |mu|.
long long frobenius_character(const Partition &lambda, const Partition &mu);

enum class GroupKind { cyclic, symmetric, product };

struct CyclicValue {
    std::uint32_t value = 0;
    std::uint32_t modulus = 1;
    friend bool operator==(const CyclicValue &, const CyclicValue &) = default;
};

struct GroupElement;

struct ProductPair {
    std::vector<GroupElement> parts;  // exactly two
    friend bool operator==(const ProductPair &, const ProductPair &);
};

struct GroupElement {
    std::variant<CyclicValue, Permutation, ProductPair> value;

    GroupKind kind() const { return static_cast<GroupKind>(value.index()); }
    std::string str() const;
    friend bool operator==(const GroupElement &, const GroupElement &) = default;
};

struct ConjugacyClass {
    std::size_t label = 0;
    std::string name;
    std::size_t representative = 0;     // element index
    std::vector<std::size_t> members;   // element indices, ascending
    std::size_t size() const { return members.size(); }
};

struct IrrepInfo {
    std::string label;
    int dim = 1;
};

/// chi(irrep, class). Rows are irreps, columns classes, both in the owning
/// group's canonical order.
struct CharacterTable {
    std::string group;
    std::vector<IrrepInfo> irreps;
    std::vector<std::string> class_labels;
    std::vector<std::size_t> class_sizes;
    std::size_t group_order = 0;
    std::vector<std::vector<cplx>> chi;
    /// Present for symmetric groups (and products of them): exact integer characters.
    std::optional<std::vector<std::vector<long long>>> integer_chi;

    std::size_t size() const { return chi.size(); }
    cplx operator()(std::size_t irrep, std::size_t cls) const { return chi[irrep][cls]; }
};

struct OrthogonalityResidual {
    double row = 0.0;
    double column = 0.0;
    double max() const { return row > column ? row : column; }
};

/// Max deviation of sum_C |C|/|G| chi_a(C) chi_b(C)^* from delta_ab (row) and of
/// sum_G chi_G(C) chi_G(C')^* from delta_CC' |G|/|C| (column).
OrthogonalityResidual verify_orthogonality(const CharacterTable &table);

/// Finite group enumerated densely. Elements are addressed by index in
/// [0, order()); the identity is always index 0. Immutable after construction.
class FiniteGroup {
   public:
    static constexpr int kDefaultSymmetricCap = 6;

    GroupKind kind() const { return kind_; }
    const std::string &name() const { return name_; }
    std::size_t order() const { return elements_.size(); }

    const GroupElement &element(std::size_t i) const { return elements_[i]; }
    const std::vector<GroupElement> &elements() const { return elements_; }
    /// Throws std::out_of_range for an element not in this group.
    std::size_t index_of(const GroupElement &g) const;

    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;
    std::size_t identity() const { return 0; }
    bool is_abelian() const;

    const std::vector<ConjugacyClass> &classes() const { return classes_; }
    std::size_t num_classes() const { return classes_.size(); }
    std::size_t class_of(std::size_t element) const { return class_of_[element]; }
    std::size_t max_class_size() const;

    const std::vector<IrrepInfo> &irreps() const { return table_.irreps; }
    const CharacterTable &character_table() const { return table_; }
    /// chi_irrep(g) for an element index.
    cplx character(std::size_t irrep, std::size_t element) const {
        return table_.chi[irrep][class_of_[element]];
    }

    /// Factors of a product group (empty otherwise).
    const std::vector<std::shared_ptr<const FiniteGroup>> &factors() const { return factors_; }
    /// Cyclic modulus M or symmetric degree N (0 for products).
    int parameter() const { return parameter_; }

    friend std::shared_ptr<const FiniteGroup> cyclic_group(int m);
    friend std::shared_ptr<const FiniteGroup> symmetric_group(int n, int cap);
    friend std::shared_ptr<const FiniteGroup> product_group(std::shared_ptr<const FiniteGroup> g,
                                                            std::shared_ptr<const FiniteGroup> h);

   private:
    FiniteGroup() = default;
    void finish_classes(std::vector<std::size_t> class_key_order);

    GroupKind kind_ = GroupKind::cyclic;
    std::string name_;
    int parameter_ = 0;
    std::vector<GroupElement> elements_;
    std::vector<std::size_t> class_of_;
    std::vector<ConjugacyClass> classes_;
    CharacterTable table_;
    std::vector<std::shared_ptr<const FiniteGroup>> factors_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Z_M with chi_k(v) = exp(2 pi i k v / M). Throws std::invalid_argument for m < 1.
GroupPtr cyclic_group(int m);
/// S_N; elements in canonical-index order. Throws GroupSizeError above the cap.
GroupPtr symmetric_group(int n, int cap = FiniteGroup::kDefaultSymmetricCap);
/// G x H with component-wise product; element and class (a, b) has index a*|H|+b.
GroupPtr product_group(GroupPtr g, GroupPtr h);

/// Builds a group from a short name: "z4", "s3", "z8xz2", "s2xs2".
GroupPtr parse_group(const std::string &spec);

}  // namespace symmetra
