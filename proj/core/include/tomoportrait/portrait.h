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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "tomoportrait/cut.h"
#include "tomoportrait/linalg.h"
#include "tomoportrait/tomography.h"

namespace tomo {

/// Column-stochastic 2 x k matrix compressing a k-outcome distribution onto
/// two bins. Row 0 is bin 1 ("portrait spin up"), row 1 is bin 2.
class PortraitMatrix {
   public:
    /// Throws InputError on negative entries, mismatched row lengths, or any
    /// column whose sum differs from 1 by more than 1e-12. Nothing is
    /// renormalized.
    PortraitMatrix(std::vector<double> bin1, std::vector<double> bin2);

    /// The 2 x 2 identity: a qubit is its own portrait.
    static PortraitMatrix identity();
    /// Bin 1 collects outcomes with an even number of -1/2 projections
    /// (product of the 2m signs is +1), bin 2 the rest.
    static PortraitMatrix parity(std::size_t num_qubits);

    std::size_t k() const { return bins_[0].size(); }
    double operator()(std::size_t bin, std::size_t outcome) const { return bins_[bin][outcome]; }
    const std::vector<double> &row(std::size_t bin) const { return bins_[bin]; }

    bool operator==(const PortraitMatrix &) const = default;

   private:
    std::array<std::vector<double>, 2> bins_;
};

/// w over bin pairs (1,1), (1,2), (2,1), (2,2).
struct PortraitDistribution {
    std::array<double, 4> probs{};

    double operator()(std::size_t bin_a, std::size_t bin_b) const { return probs[2 * bin_a + bin_b]; }
};

/// Tolerance on normalization and negativity of input distributions.
inline constexpr double kProbabilityTolerance = 1e-12;

/// q_i = sum_j pi_ij p_j.
std::array<double, 2> apply_portrait(std::span<const double> p, const PortraitMatrix &pi);

/// w(i, j) = sum pi_a(i, m_a) pi_b(j, m_b) joint(m_a, m_b), joint indexed with
/// m_a major.
PortraitDistribution product_portrait(
    std::span<const double> joint, const PortraitMatrix &pi_a, const PortraitMatrix &pi_b);

/// Reorders an n-qubit outcome distribution so that the left side of `cut`
/// forms the major index and the right side the minor index.
std::vector<double> regroup_for_cut(std::span<const double> probs, const CutSpec &cut);

/// Keeps m_A and compresses (m_B, m_C, m_D) by the sign of m_B m_C m_D.
/// Output order (m_A=+, p=+), (+, -), (-, +), (-, -).
PortraitDistribution smolin_parity_portrait(const TomogramVector &t);

/// 1/4 + m_A p (1/2) sum_i n_i^A n_i^B n_i^C n_i^D.
double smolin_portrait_closed(double m_a, int p, std::span<const Direction, 4> dirs);

}  // namespace tomo
