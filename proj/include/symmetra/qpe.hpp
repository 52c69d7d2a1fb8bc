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

// Phase estimation. The n phase qubits are appended after the system; phase
// qubit 0 is the most significant bit of the readout u and controls U^{2^{n-1}}.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symmetra/tgsa.hpp"

namespace symmetra {

/// Maps a hermitian H to H' = s (H - E_min) with spectrum inside [0, 1).
/// U = exp(2 pi i H'), so eigenvalue E has phase s (E - E_min) and readout u
/// decodes to E = E_min + (u / 2^n) / s.
struct EnergyCalibration {
    double e_min = 0.0;
    double e_max = 0.0;
    double scale = 1.0;
    int n = 1;

    static constexpr double kPad = 1e-6;
    /// s = (1 - 2^-n) / (E_max - E_min + kPad).
    static EnergyCalibration from_range(double e_min, double e_max, int n);
    /// Width of one readout bin in energy units.
    double bin_width() const;
};

double phase_to_energy(std::uint64_t u, int n, const EnergyCalibration &cal);

struct PhaseDistribution {
    int n = 0;
    std::vector<double> probabilities;  // over u in [0, 2^n)
    std::optional<std::string> irrep_label;
    std::optional<EnergyCalibration> calibration;
    /// Weight of this branch in the joint distribution (1 for plain QPE).
    double weight = 1.0;

    std::uint64_t peak() const;
};

/// Standard QPE of a unitary on the given system state.
PhaseDistribution qpe(const DenseOperator &u, const StateVector &state, int n);

/// exp(2 pi i s (H - E_min)) via the exact eigensystem.
DenseOperator evolution_unitary(const DenseOperator &h, const EnergyCalibration &cal);

class SymmetryError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Throws SymmetryError naming the first element g with ||[H, rho(g)]|| > tol.
void check_symmetry(const UnitaryRep &rep, const DenseOperator &h, double tol = 1e-8);

struct SqpeResult {
    EnergyCalibration calibration;
    double prep_probability = 1.0;
    /// One conditional distribution per irrep, in irrep order; weight is the
    /// joint probability of that irrep.
    std::vector<PhaseDistribution> branches;
};

/// T_GSA on (irrep ancilla, system) followed by QPE of exp(2 pi i H') on the
/// system. Calibration comes from the exact spectrum of H.
SqpeResult sqpe(const UnitaryRep &rep, const DenseOperator &h, int n, const StateVector &sys_state);
/// As above with an explicit ancilla input state.
SqpeResult sqpe(const UnitaryRep &rep, const DenseOperator &h, int n, const StateVector &anc_state,
                const StateVector &sys_state);

/// Eigenvalues of H restricted to the range of a projector (rank by
/// eigenvalues of P above 1/2).
std::vector<double> restricted_spectrum(const DenseOperator &h, const DenseOperator &projector);

}  // namespace symmetra
