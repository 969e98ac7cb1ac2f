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
#include "tomoportrait/states.h"

namespace tomo {

/// Tag written next to serialized tomogram vectors.
inline constexpr std::string_view kOutcomeOrder = "lexicographic:+1/2_before_-1/2:qubit_A_slowest";

/// Joint spin-projection outcome: one of +1/2 or -1/2 per qubit.
class Outcome {
   public:
    /// Outcome encoded by a basis index of an n-qubit register (bit 0 = +1/2,
    /// qubit A most significant).
    static Outcome from_index(std::size_t index, std::size_t num_qubits);
    /// From signs of 2m, e.g. {+1, -1, -1, +1}.
    static Outcome from_signs(std::vector<int> signs);
    /// Parses strings such as "++-+".
    static Outcome parse(std::string_view text);

    std::size_t size() const { return signs_.size(); }
    /// 2m for qubit k, i.e. +1 or -1.
    int sign(std::size_t k) const { return signs_[k]; }
    /// Spin projection m for qubit k: +0.5 or -0.5.
    double m(std::size_t k) const { return 0.5 * signs_[k]; }
    std::size_t index() const;
    std::string to_string() const;

    bool operator==(const Outcome &) const = default;

   private:
    explicit Outcome(std::vector<int> signs) : signs_(std::move(signs)) {}
    std::vector<int> signs_;
};

/// Joint outcome probabilities for a fixed tuple of directions, in
/// kOutcomeOrder.
struct TomogramVector {
    std::vector<Direction> directions;
    std::vector<double> probs;
};

/// Rank-1 projector onto spin projection m (= +-1/2) along n: (I + 2m n.sigma)/2.
Operator projector(double m, const Direction &n);

/// Tr(rho . (x)_k projector(m_k, n_k)) without clamping.
double tomogram_raw(const DensityMatrix &rho, std::span<const Direction> dirs, const Outcome &m);
/// tomogram_raw clamped to [0, 1].
double tomogram(const DensityMatrix &rho, std::span<const Direction> dirs, const Outcome &m);

/// Every outcome at once: the diagonal of U^dagger rho U with U = (x)_k u(n_k).
/// Entries are left unclamped.
TomogramVector tomogram_vector(const DensityMatrix &rho, std::span<const Direction> dirs);

/// Closed-form Smolin tomogram: 1/16 + m_A m_B m_C m_D sum_i n_i^A n_i^B n_i^C n_i^D.
double smolin_tomogram_closed(const Outcome &m, std::span<const Direction, 4> dirs);

/// sum_i n_i^A n_i^B n_i^C n_i^D.
double four_way_overlap(std::span<const Direction, 4> dirs);

struct MarginalReport {
    double max_deviation = 0;
    bool consistent = false;
};

/// Compares the tomogram vector summed over discarded qubits against the
/// tomogram vector of the reduced state. Consistent when the deviation is at
/// most 1e-12.
MarginalReport marginal_check(
    const DensityMatrix &rho, std::span<const Direction> dirs, std::span<const std::size_t> keep);

}  // namespace tomo
