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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tomoportrait/cut.h"
#include "tomoportrait/linalg.h"
#include "tomoportrait/portrait.h"
#include "tomoportrait/states.h"

namespace tomo {

/// Measurement setting for one side of a CHSH experiment: one direction per
/// physical qubit on that side. A true qubit side has a single direction; the
/// BCD side of the Smolin portrait has three independent ones.
using Setting = std::vector<Direction>;

/// The four settings of a CHSH experiment. For the Smolin portrait these are
/// x1 = {a}, x2 = {d}, y1 = {b^B, b^C, b^D}, y2 = {c^B, c^C, c^D}.
struct ChshSettings {
    Setting x1;
    Setting x2;
    Setting y1;
    Setting y2;

    bool operator==(const ChshSettings &) const = default;
};

/// Directions in the order x1..., x2..., y1..., y2....
std::vector<Direction> flatten(const ChshSettings &s);

/// Binary-outcome joint distributions indexed by a pair of settings.
class BinaryCorrelationFamily {
   public:
    /// Returns P(s, t | x, y) in the order (+,+), (+,-), (-,+), (-,-).
    using Evaluator = std::function<std::array<double, 4>(const Setting &x, const Setting &y)>;

    BinaryCorrelationFamily(std::string name, Evaluator evaluate)
        : name_(std::move(name)), evaluate_(std::move(evaluate)) {}

    const std::string &name() const { return name_; }
    std::array<double, 4> distribution(const Setting &x, const Setting &y) const { return evaluate_(x, y); }
    /// s, t in {+1, -1}.
    double probability(int s, int t, const Setting &x, const Setting &y) const;

   private:
    std::string name_;
    Evaluator evaluate_;
};

/// Dense pipeline: tomogram vector of `rho` with the left side of `cut`
/// measured along x and the right side along y, compressed by
/// `left_portrait` (x) `right_portrait`.
BinaryCorrelationFamily state_family(
    DensityMatrix rho, CutSpec cut, PortraitMatrix left_portrait, PortraitMatrix right_portrait);
/// A two-qubit state with identity portraits on both qubits.
BinaryCorrelationFamily two_qubit_family(DensityMatrix rho);
/// Smolin state across A:BCD with the parity portrait, evaluated through the
/// dense density-matrix pipeline.
BinaryCorrelationFamily smolin_pipeline_family();
/// Smolin A:BCD parity portrait via its closed form, with s = 2 m_A and t = p.
BinaryCorrelationFamily smolin_portrait_family();

/// 4 x 4 column-stochastic matrix. Columns (x1,y1), (x1,y2), (x2,y1), (x2,y2);
/// rows (+,+), (+,-), (-,+), (-,-).
struct ChshMatrix {
    std::array<std::array<double, 4>, 4> entries{};  // [row][column]
    ChshSettings settings;

    double operator()(std::size_t row, std::size_t col) const { return entries[row][col]; }
    /// M_1k - M_2k - M_3k + M_4k.
    double correlation(std::size_t col) const;
};

/// Throws InputError naming the offending column if the family is not
/// normalized (within 1e-12) or nonnegative (within -1e-12) there.
ChshMatrix chsh_matrix(const BinaryCorrelationFamily &family, const ChshSettings &settings);

/// |C_1 + C_2 + C_3 - C_4|, in [0, 4].
double bell_number(const ChshMatrix &m);

/// |sum_i (a_i + d_i) prod_k b_i^k + (a_i - d_i) prod_k c_i^k| for k in {B, C, D}.
double smolin_bell_closed(const Direction &a, const Direction &d, const Direction &b_b, const Direction &b_c,
                          const Direction &b_d, const Direction &c_b, const Direction &c_c, const Direction &c_d);
/// Same, with settings shaped {1, 1, 3, 3}.
double smolin_bell_closed(const ChshSettings &s);

enum class Verdict { kEntangled, kInconclusive };

std::string_view verdict_name(Verdict v);

/// Margin above the classical bound 2 required to report entanglement.
inline constexpr double kBellViolationMargin = 1e-9;

/// ENTANGLED when best_value > 2 + 1e-9. Anything else is INCONCLUSIVE: the
/// CHSH bound is necessary, not sufficient, for separability.
Verdict separability_verdict(double best_value);

using BellObjective = std::function<double(const ChshSettings &)>;

/// bell_number(chsh_matrix(family, s)).
BellObjective pipeline_objective(BinaryCorrelationFamily family);
/// smolin_bell_closed.
BellObjective smolin_closed_objective();

/// Number of directions per setting (x1, x2, y1, y2).
struct SettingShape {
    std::size_t x1 = 1;
    std::size_t x2 = 1;
    std::size_t y1 = 1;
    std::size_t y2 = 1;

    std::size_t total() const { return x1 + x2 + y1 + y2; }
    static SettingShape smolin() { return {1, 1, 3, 3}; }
};

struct BellSearchOptions {
    std::size_t restarts = 32;
    std::uint64_t seed = 1;
    /// Starting point for restart 0; also supplies the value of every
    /// direction excluded by `free`.
    std::optional<ChshSettings> initial;
    /// Per flattened direction: true if optimized. Empty means all free.
    std::vector<bool> free;
    /// Worker threads for restarts. Results do not depend on this.
    std::size_t threads = 1;
    double improvement_tolerance = 1e-10;
    int max_sweeps = 200;
};

struct BellSearchResult {
    double best_value = 0;
    ChshSettings best_settings;
    std::uint64_t evaluations = 0;
    std::uint64_t seed = 0;
    std::size_t restarts = 0;
    std::size_t best_restart = 0;
};

/// Seeded multi-start maximization of `objective` over unit directions.
///
/// Each direction is parameterized by spherical angles (theta, phi). Every
/// restart draws uniformly random directions (restart 0 uses
/// `options.initial` when given) and then runs coordinate-wise ascent: each
/// angle is line-searched over its full period by a 16-point scan followed by
/// golden-section refinement around the best scan point, and a move is kept
/// only if it strictly improves the objective. A restart stops when a sweep
/// improves by less than `improvement_tolerance` or after `max_sweeps`
/// sweeps. The best restart wins, ties going to the lowest restart index.
BellSearchResult maximize_bell(const BellObjective &objective, SettingShape shape, const BellSearchOptions &options);

}  // namespace tomo
