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

// Class mixers, SELECT over conjugacy classes and the symmetry-adapted
// transform QCT^dag -> SELECT -> QCT.
//
// Register order for every circuit here: irrep/class ancilla first, system
// next, and the LCU prep register (ceil(log2 max|C|) qubits) last. The prep
// register is post-selected on |0> and removed before results are returned.

#include <optional>
#include <string>
#include <vector>

#include "symmetra/qct.hpp"
#include "symmetra/reps.hpp"

namespace symmetra {

/// Unitary of size 2^ceil(log2 dim) whose first column is uniform over the
/// first `dim` entries (a real Householder reflection).
DenseOperator prepare_uniform(std::uint64_t dim);

/// (1/|C|) sum_{g in C} rho(g) as a dense matrix.
CMatrix class_mixer_matrix(const UnitaryRep &rep, std::size_t cls);

/// Realizes the class mixer by PREP, member-indexed SELECT, PREP^dag and
/// post-selection of the prep register. Throws ZeroProbabilityError when the
/// mixer annihilates the state.
PostSelectedState class_mixer_apply(const UnitaryRep &rep, std::size_t cls, const StateVector &state);
PostSelectedState class_mixer_apply_via_oracle(const UnitaryRep &rep, std::size_t cls, const StateVector &state);

/// Unnormalized result of sum_C |C><C| (x) mixer(C) on (anc (x) sys); ancilla
/// values >= N_conj act as identity. `state` width = anc width + rep width.
StateVector select_over_classes_unnormalized(const UnitaryRep &rep, const StateVector &state);
PostSelectedState select_over_classes(const UnitaryRep &rep, const StateVector &state);
PostSelectedState select_over_classes_via_oracle(const UnitaryRep &rep, const StateVector &state);

struct TgsaBranch {
    std::size_t irrep = 0;
    std::string label;
    int dim = 1;
    /// Joint probability of the prep post-selection and this ancilla outcome.
    double probability = 0.0;
    /// Norm of the branch vector, i.e. a_Gamma / d_Gamma for the trivial input.
    double amplitude = 0.0;
    /// Normalized branch state; empty when the branch has zero weight.
    std::optional<StateVector> state;
};

struct TgsaOutcome {
    /// Subnormalized state on (irrep ancilla (x) system) after the prep
    /// post-selection.
    StateVector joint;
    int n_anc = 0;
    int n_sys = 0;
    /// Probability that the LCU prep register returns to |0>.
    double prep_probability = 1.0;
    std::vector<TgsaBranch> branches;
};

/// Ancilla starts in |trivial irrep> = |0>.
TgsaOutcome tgsa_apply(const UnitaryRep &rep, const StateVector &sys_state);
/// Arbitrary ancilla input state of width ceil(log2 N_conj).
TgsaOutcome tgsa_apply(const UnitaryRep &rep, const StateVector &anc_state, const StateVector &sys_state);
/// Same result computed from dense projector matrices: branch = (1/d) P |psi>.
TgsaOutcome tgsa_apply_via_oracle(const UnitaryRep &rep, const StateVector &sys_state);

/// P = (d/|G|) sum_g chi(g) rho(g).
DenseOperator projector_matrix(const UnitaryRep &rep, std::size_t irrep);

/// T_GSA followed by measuring the ancilla at `irrep`.
PostSelectedState project_and_postselect(const UnitaryRep &rep, std::size_t irrep, const StateVector &state);

/// Uniform PREPARE -> SELECT -> QCT; each branch holds P|psi> with no 1/d
/// factor. Abelian groups only (std::invalid_argument otherwise).
TgsaOutcome prepare_projection_abelian(const UnitaryRep &rep, const StateVector &state);

/// Seeded shot counts over the branches of an outcome; the final entry
/// counts shots where the prep post-selection failed.
std::vector<std::uint64_t> sample_branches(const TgsaOutcome &outcome, std::uint64_t shots, std::uint64_t seed);

}  // namespace symmetra
