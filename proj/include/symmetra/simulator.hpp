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

// Dense statevector engine.
//
// Basis convention: qubit 0 is the most significant bit of a basis index, so
// for n qubits the index of |b_0 b_1 ... b_{n-1}> is sum_q b_q 2^{n-1-q}. This
// matches writing integers as v = v_1 2^{m-1} + ... + v_m.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symmetra {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a post-selection lands on a branch of (numerically) zero weight.
class ZeroProbabilityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kZeroProbability = 1e-14;
inline constexpr double kFlagTolerance = 1e-10;

bool is_power_of_two(std::uint64_t n);
/// ceil(log2 n) with ceil_log2(1) == 0.
int ceil_log2(std::uint64_t n);

class StateVector {
   public:
    StateVector() = default;
    /// |0...0> on n qubits.
    explicit StateVector(int n_qubits);
    /// Throws DimensionError unless the length is a power of two. A state is
    /// "subnormalized" when it need not have unit norm.
    explicit StateVector(CVector amplitudes, bool subnormalized = false);

    static StateVector basis(int n_qubits, std::uint64_t index);
    /// Haar-like random state from a seeded normal draw.
    static StateVector random(int n_qubits, std::mt19937_64 &rng);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return static_cast<std::uint64_t>(amps_.size()); }
    const CVector &amplitudes() const { return amps_; }
    cplx operator[](std::uint64_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }
    bool subnormalized() const { return subnormalized_; }
    double norm() const { return amps_.norm(); }

    /// Unit-norm copy. Throws ZeroProbabilityError for a (near) zero vector.
    StateVector normalized() const;
    /// |this> (x) |other>, this register first.
    StateVector tensor(const StateVector &other) const;
    cplx inner(const StateVector &other) const;

   private:
    CVector amps_;
    int n_qubits_ = 0;
    bool subnormalized_ = false;
};

/// Square complex matrix with optional verified hermitian/unitary flags.
class DenseOperator {
   public:
    DenseOperator() = default;
    /// Throws std::invalid_argument if a requested flag fails at kFlagTolerance.
    explicit DenseOperator(CMatrix m, bool hermitian = false, bool unitary = false);

    static DenseOperator identity(std::uint64_t dim);

    const CMatrix &matrix() const { return m_; }
    std::uint64_t dim() const { return static_cast<std::uint64_t>(m_.rows()); }
    /// Qubit count; throws DimensionError when dim is not a power of two.
    int n_qubits() const;
    bool hermitian() const { return hermitian_; }
    bool unitary() const { return unitary_; }

    DenseOperator adjoint() const;
    DenseOperator operator*(const DenseOperator &rhs) const;
    /// this (x) rhs.
    DenseOperator kron(const DenseOperator &rhs) const;

   private:
    CMatrix m_;
    bool hermitian_ = false;
    bool unitary_ = false;
};

double hermiticity_defect(const CMatrix &m);
double unitarity_defect(const CMatrix &m);
CMatrix kron(const CMatrix &a, const CMatrix &b);
/// Spectral norm via singular values.
double op_norm(const CMatrix &m);

/// Contiguous, named qubit range.
struct Register {
    std::string name;
    int offset = 0;
    int width = 0;

    std::vector<int> qubits() const;
    std::uint64_t dim() const { return std::uint64_t{1} << width; }
};

/// Disjoint registers covering [0, n) in declaration order.
class RegisterLayout {
   public:
    RegisterLayout() = default;
    /// Appends a register after the existing ones.
    RegisterLayout &add(std::string name, int width);
    const Register &operator[](const std::string &name) const;
    const std::vector<Register> &registers() const { return regs_; }
    int total_width() const { return total_; }

   private:
    std::vector<Register> regs_;
    int total_ = 0;
};

/// Basis-permutation-with-phase action: |j> -> phase[j] |image[j]>.
struct BasisMap {
    std::vector<std::uint64_t> image;
    std::vector<cplx> phase;  // empty means all phases are 1

    std::uint64_t dim() const { return image.size(); }
    static BasisMap identity(std::uint64_t dim);
    /// Throws std::invalid_argument if image is not a bijection.
    void validate() const;
    cplx phase_at(std::uint64_t j) const { return phase.empty() ? cplx{1.0} : phase[j]; }
    /// (this * rhs)|j> = this(rhs|j>).
    BasisMap compose(const BasisMap &rhs) const;
    BasisMap inverse() const;
    CMatrix dense() const;
};

struct PostSelectedState {
    StateVector state;
    double probability = 1.0;
};

// Kernels on explicit qubit lists (qubit order inside the list = significance
// order of the local operator's basis index).

StateVector apply_matrix(const StateVector &state, const CMatrix &op, std::span<const int> targets,
                         std::span<const int> controls = {}, std::uint64_t control_value = 0);
StateVector apply_basis_map(const StateVector &state, const BasisMap &map, std::span<const int> targets,
                            std::span<const int> controls = {}, std::uint64_t control_value = 0);

/// Applies op on target, identity elsewhere.
StateVector apply_operator(const DenseOperator &op, const StateVector &state, const Register &target);
/// Applies op on target only on the component where control holds |index>.
StateVector controlled_apply(const Register &control, std::uint64_t index, const DenseOperator &op,
                             const StateVector &state, const Register &target);

/// Full Kronecker expansion I (x) op (x) I of a register-local operator.
CMatrix embed_operator(const CMatrix &op, int n_qubits, const Register &target);

/// Unnormalized projection of register onto |outcome>.
StateVector project_register(const StateVector &state, const Register &reg, std::uint64_t outcome);
/// Projects, renormalizes and records probability. Throws ZeroProbabilityError
/// below kZeroProbability.
PostSelectedState measure_register(const StateVector &state, const Register &reg, std::uint64_t outcome);
/// Composes post-selections: probabilities multiply.
PostSelectedState measure_register(const PostSelectedState &state, const Register &reg, std::uint64_t outcome);
/// Probability of each outcome of reg.
std::vector<double> register_distribution(const StateVector &state, const Register &reg);
/// Amplitudes of the remaining qubits with reg fixed to outcome (reg removed, unnormalized).
StateVector extract_branch(const StateVector &state, const Register &reg, std::uint64_t outcome);

/// Deterministic inverse-CDF sampler over an explicit distribution, driven by
/// mt19937_64. The final bucket may be an implicit remainder 1 - sum(p).
std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities, std::uint64_t shots,
                                         std::uint64_t seed);
inline constexpr const char *kRngName = "mt19937_64";

struct Eigensystem {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // columns
};

/// Throws std::invalid_argument if op is not flagged hermitian.
Eigensystem exact_eigensystem(const DenseOperator &op);
cplx expectation(const StateVector &state, const DenseOperator &op);

}  // namespace symmetra
