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

#include "tomoportrait/bell.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "tomoportrait/errors.h"
#include "tomoportrait/random.h"
#include "tomoportrait/tomography.h"

namespace tomo {

namespace {

std::vector<Direction *> slots(ChshSettings &s) {
    std::vector<Direction *> out;
    for (Setting *side : {&s.x1, &s.x2, &s.y1, &s.y2}) {
        for (Direction &d : *side) {
            out.push_back(&d);
        }
    }
    return out;
}

ChshSettings shaped(SettingShape shape) {
    return {Setting(shape.x1), Setting(shape.x2), Setting(shape.y1), Setting(shape.y2)};
}

bool matches(const ChshSettings &s, SettingShape shape) {
    return s.x1.size() == shape.x1 && s.x2.size() == shape.x2 && s.y1.size() == shape.y1 && s.y2.size() == shape.y2;
}

struct RestartOutcome {
    double value = 0;
    ChshSettings settings;
    std::uint64_t evaluations = 0;
};

/// Coordinate-wise ascent from `start` over the (theta, phi) angles of every
/// free direction.
RestartOutcome refine(
    const BellObjective &objective, ChshSettings start, const std::vector<bool> &free, const BellSearchOptions &opt) {
    constexpr int kScanPoints = 16;
    constexpr double kGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2
    constexpr double kLineTolerance = 1e-8;
    const double two_pi = 2 * std::numbers::pi;

    RestartOutcome out;
    out.settings = std::move(start);
    std::vector<Direction *> dirs = slots(out.settings);
    std::vector<EulerAngles> angles;
    for (Direction *d : dirs) {
        angles.push_back(euler_angles(*d));
    }

    auto eval = [&] {
        ++out.evaluations;
        return objective(out.settings);
    };
    double current = eval();

    for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
        double sweep_start = current;
        for (std::size_t k = 0; k < dirs.size(); ++k) {
            if (!free[k]) {
                continue;
            }
            for (int which = 0; which < 2; ++which) {
                EulerAngles base = angles[k];
                double &param = which == 0 ? angles[k].theta : angles[k].phi;
                const double origin = param;
                Direction original = *dirs[k];
                auto at = [&](double t) {
                    param = t;
                    *dirs[k] = direction(angles[k]);
                    return eval();
                };

                double step = two_pi / kScanPoints;
                double best_t = origin;
                double best_f = current;
                for (int g = 1; g < kScanPoints; ++g) {
                    double t = origin + g * step;
                    double f = at(t);
                    if (f > best_f) {
                        best_f = f;
                        best_t = t;
                    }
                }

                double lo = best_t - step;
                double hi = best_t + step;
                double x1 = hi - kGolden * (hi - lo);
                double x2 = lo + kGolden * (hi - lo);
                double f1 = at(x1);
                double f2 = at(x2);
                while (hi - lo > kLineTolerance) {
                    if (f1 < f2) {
                        lo = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = lo + kGolden * (hi - lo);
                        f2 = at(x2);
                    } else {
                        hi = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = hi - kGolden * (hi - lo);
                        f1 = at(x1);
                    }
                }
                if (f1 > best_f) {
                    best_f = f1;
                    best_t = x1;
                }
                if (f2 > best_f) {
                    best_f = f2;
                    best_t = x2;
                }

                if (best_f > current) {
                    param = best_t;
                    *dirs[k] = direction(angles[k]);
                    current = best_f;
                } else {
                    angles[k] = base;
                    *dirs[k] = original;
                }
            }
        }
        if (current - sweep_start < opt.improvement_tolerance) {
            break;
        }
    }
    out.value = current;
    return out;
}

}  // namespace

std::vector<Direction> flatten(const ChshSettings &s) {
    std::vector<Direction> out;
    for (const Setting *side : {&s.x1, &s.x2, &s.y1, &s.y2}) {
        out.insert(out.end(), side->begin(), side->end());
    }
    return out;
}

double BinaryCorrelationFamily::probability(int s, int t, const Setting &x, const Setting &y) const {
    if ((s != 1 && s != -1) || (t != 1 && t != -1)) {
        throw InputError("binary outcomes must be +1 or -1");
    }
    std::size_t index = (s > 0 ? 0 : 2) + (t > 0 ? 0 : 1);
    return distribution(x, y)[index];
}

BinaryCorrelationFamily state_family(
    DensityMatrix rho, CutSpec cut, PortraitMatrix left_portrait, PortraitMatrix right_portrait) {
    if (cut.num_qubits() != rho.num_qubits()) {
        throw InputError("cut " + cut.to_string() + " does not match a " + std::to_string(rho.num_qubits()) +
                         "-qubit state");
    }
    if (left_portrait.k() != (std::size_t{1} << cut.left().size()) ||
        right_portrait.k() != (std::size_t{1} << cut.right().size())) {
        throw InputError("portrait sizes do not match the sides of cut " + cut.to_string());
    }
    std::string name = "state[" + cut.to_string() + "]";
    return BinaryCorrelationFamily(
        std::move(name), [rho = std::move(rho), cut = std::move(cut), left = std::move(left_portrait),
                          right = std::move(right_portrait)](const Setting &x, const Setting &y) {
            if (x.size() != cut.left().size() || y.size() != cut.right().size()) {
                throw InputError("setting sizes do not match cut " + cut.to_string());
            }
            std::vector<Direction> dirs(cut.num_qubits());
            for (std::size_t i = 0; i < x.size(); ++i) {
                dirs[cut.left()[i]] = x[i];
            }
            for (std::size_t i = 0; i < y.size(); ++i) {
                dirs[cut.right()[i]] = y[i];
            }
            TomogramVector t = tomogram_vector(rho, dirs);
            return product_portrait(regroup_for_cut(t.probs, cut), left, right).probs;
        });
}

BinaryCorrelationFamily two_qubit_family(DensityMatrix rho) {
    return state_family(std::move(rho), CutSpec({0}, {1}, 2), PortraitMatrix::identity(), PortraitMatrix::identity());
}

BinaryCorrelationFamily smolin_pipeline_family() {
    return state_family(
        smolin_pauli(), CutSpec({0}, {1, 2, 3}, 4), PortraitMatrix::identity(), PortraitMatrix::parity(3));
}

BinaryCorrelationFamily smolin_portrait_family() {
    return BinaryCorrelationFamily("smolin-closed[A:BCD]", [](const Setting &x, const Setting &y) {
        if (x.size() != 1 || y.size() != 3) {
            throw InputError("Smolin portrait settings need one direction for A and three for BCD");
        }
        std::array<Direction, 4> dirs{x[0], y[0], y[1], y[2]};
        return std::array<double, 4>{
            smolin_portrait_closed(0.5, 1, dirs),
            smolin_portrait_closed(0.5, -1, dirs),
            smolin_portrait_closed(-0.5, 1, dirs),
            smolin_portrait_closed(-0.5, -1, dirs),
        };
    });
}

double ChshMatrix::correlation(std::size_t col) const {
    return entries[0][col] - entries[1][col] - entries[2][col] + entries[3][col];
}

ChshMatrix chsh_matrix(const BinaryCorrelationFamily &family, const ChshSettings &settings) {
    ChshMatrix m;
    m.settings = settings;
    const std::array<std::pair<const Setting *, const Setting *>, 4> columns{{
        {&settings.x1, &settings.y1},
        {&settings.x1, &settings.y2},
        {&settings.x2, &settings.y1},
        {&settings.x2, &settings.y2},
    }};
    for (std::size_t col = 0; col < 4; ++col) {
        auto p = family.distribution(*columns[col].first, *columns[col].second);
        double sum = 0;
        for (std::size_t row = 0; row < 4; ++row) {
            if (!(p[row] >= -kProbabilityTolerance)) {
                throw InputError(family.name() + ": column " + std::to_string(col + 1) + " has negative entry " +
                                 std::to_string(p[row]));
            }
            m.entries[row][col] = p[row];
            sum += p[row];
        }
        if (!(std::abs(sum - 1) <= kProbabilityTolerance)) {
            throw InputError(family.name() + ": column " + std::to_string(col + 1) + " sums to " +
                             std::to_string(sum) + ", not 1");
        }
    }
    return m;
}

double bell_number(const ChshMatrix &m) {
    return std::abs(m.correlation(0) + m.correlation(1) + m.correlation(2) - m.correlation(3));
}

double smolin_bell_closed(const Direction &a, const Direction &d, const Direction &b_b, const Direction &b_c,
                          const Direction &b_d, const Direction &c_b, const Direction &c_c, const Direction &c_d) {
    double sum = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        sum += (a[i] + d[i]) * b_b[i] * b_c[i] * b_d[i] + (a[i] - d[i]) * c_b[i] * c_c[i] * c_d[i];
    }
    return std::abs(sum);
}

double smolin_bell_closed(const ChshSettings &s) {
    if (!matches(s, SettingShape::smolin())) {
        throw InputError("Smolin Bell settings need shape {1, 1, 3, 3}");
    }
    return smolin_bell_closed(s.x1[0], s.x2[0], s.y1[0], s.y1[1], s.y1[2], s.y2[0], s.y2[1], s.y2[2]);
}

std::string_view verdict_name(Verdict v) {
    return v == Verdict::kEntangled ? "ENTANGLED" : "INCONCLUSIVE";
}

Verdict separability_verdict(double best_value) {
    if (!(best_value >= 0)) {
        throw InputError("Bell value must be nonnegative");
    }
    return best_value > 2 + kBellViolationMargin ? Verdict::kEntangled : Verdict::kInconclusive;
}

BellObjective pipeline_objective(BinaryCorrelationFamily family) {
    return [family = std::move(family)](const ChshSettings &s) { return bell_number(chsh_matrix(family, s)); };
}

BellObjective smolin_closed_objective() {
    return [](const ChshSettings &s) { return smolin_bell_closed(s); };
}

BellSearchResult maximize_bell(const BellObjective &objective, SettingShape shape, const BellSearchOptions &options) {
    if (options.restarts < 1) {
        throw InputError("maximize_bell needs at least one restart");
    }
    std::size_t n = shape.total();
    if (n == 0) {
        throw InputError("setting shape is empty");
    }
    if (options.initial && !matches(*options.initial, shape)) {
        throw InputError("initial settings do not match the setting shape");
    }
    std::vector<bool> free = options.free.empty() ? std::vector<bool>(n, true) : options.free;
    if (free.size() != n) {
        throw InputError("free mask has " + std::to_string(free.size()) + " entries for " + std::to_string(n) +
                         " directions");
    }
    bool any_frozen = std::find(free.begin(), free.end(), false) != free.end();
    if (any_frozen && !options.initial) {
        throw InputError("frozen directions need initial settings");
    }

    // Starting points are drawn serially so that the thread count cannot
    // influence them.
    Rng rng(options.seed);
    std::vector<ChshSettings> starts;
    starts.reserve(options.restarts);
    for (std::size_t r = 0; r < options.restarts; ++r) {
        ChshSettings s = options.initial ? *options.initial : shaped(shape);
        std::vector<Direction *> dirs = slots(s);
        for (std::size_t k = 0; k < n; ++k) {
            Direction drawn = rng.direction();
            if (free[k] && !(r == 0 && options.initial)) {
                *dirs[k] = drawn;
            }
        }
        starts.push_back(std::move(s));
    }

    std::vector<RestartOutcome> outcomes(options.restarts);
    std::size_t workers = std::clamp<std::size_t>(options.threads, 1, options.restarts);
    if (workers == 1) {
        for (std::size_t r = 0; r < options.restarts; ++r) {
            outcomes[r] = refine(objective, starts[r], free, options);
        }
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t r = w; r < options.restarts; r += workers) {
                            outcomes[r] = refine(objective, starts[r], free, options);
                        }
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    BellSearchResult result;
    result.seed = options.seed;
    result.restarts = options.restarts;
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        result.evaluations += outcomes[r].evaluations;
        if (r == 0 || outcomes[r].value > result.best_value) {
            result.best_value = outcomes[r].value;
            result.best_settings = outcomes[r].settings;
            result.best_restart = r;
        }
    }
    return result;
}

}  // namespace tomo
