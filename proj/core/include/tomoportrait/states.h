// Copyright 2026 The tomoportrait Authors
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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tomoportrait/linalg.h"

namespace tomo {

enum class BellKind { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

inline constexpr BellKind kAllBellKinds[] = {
    BellKind::kPhiPlus, BellKind::kPhiMinus, BellKind::kPsiPlus, BellKind::kPsiMinus};

/// "Φ+", "Φ-", "Ψ+", "Ψ-".
std::string_view bell_kind_name(BellKind kind);
/// Accepts the Greek names and the ASCII spellings "Phi+", "phi-", "Psi+", ...
/// ("−" U+2212 is accepted for the minus sign).
BellKind parse_bell_kind(std::string_view text);

/// Normalized state vector on n qubits.
class PureState {
   public:
    /// Throws InputError unless the length is 2^n (n >= 1) and the squared
    /// norm is 1 within 1e-12.
    explicit PureState(std::vector<Complex> amplitudes);

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::size_t num_qubits() const { return num_qubits_; }
    /// |psi><psi|.
    Operator projector() const;

   private:
    std::vector<Complex> amplitudes_;
    std::size_t num_qubits_;
};

/// Every density-matrix condition that `op` violates, checked all at once.
struct ValidationReport {
    double hermiticity_defect = 0;
    double trace_defect = 0;
    double min_eigenvalue = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

ValidationReport validate_density(const Operator &op);

/// Hermitian, unit-trace, positive semidefinite operator (within the
/// tolerances above).
class DensityMatrix {
   public:
    /// Throws InputError listing every violated condition.
    static DensityMatrix from_operator(Operator op);
    static DensityMatrix from_pure(const PureState &psi);
    static DensityMatrix maximally_mixed(std::size_t num_qubits);

    const Operator &op() const { return op_; }
    std::size_t num_qubits() const { return op_.num_qubits(); }
    std::size_t dim() const { return op_.dim(); }

    bool operator==(const DensityMatrix &) const = default;

   private:
    explicit DensityMatrix(Operator op) : op_(std::move(op)) {}
    Operator op_;
};

/// Bell pair with real amplitudes; basis order (++, +-, -+, --).
PureState bell_state(BellKind kind);

/// (1/4) sum_X |X_AB><X_AB| (x) |X_CD><X_CD| over the four Bell kinds.
DensityMatrix smolin_mixture();
/// (1/16)(I + sx^4 + sy^4 + sz^4).
DensityMatrix smolin_pauli();

/// Relabels qubits: input qubit k becomes output qubit perm[k].
DensityMatrix permute_qubits(const DensityMatrix &rho, std::span<const std::size_t> perm);

struct SeparableTerm {
    double weight;
    DensityMatrix left;
    DensityMatrix right;
};

/// Convex combination of product states across a left:right cut.
struct SeparableDecomposition {
    std::vector<SeparableTerm> terms;
};

/// sum_i p_i left_i (x) right_i. Throws InputError on negative weights, weights
/// not summing to 1 within 1e-12, or inconsistent factor dimensions.
DensityMatrix assemble_separable(const SeparableDecomposition &dec);

}  // namespace tomo
