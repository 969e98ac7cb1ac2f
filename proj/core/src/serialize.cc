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

#include "tomoportrait/serialize.h"

#include <string>

#include "tomoportrait/errors.h"

namespace tomo::json {

namespace {

double number(const json &j, std::string_view what) {
    if (!j.is_number()) {
        throw InputError(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

const json &field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

json direction_list(std::span<const Direction> dirs) {
    json out = json::array();
    for (const auto &d : dirs) {
        out.push_back(from_direction(d));
    }
    return out;
}

Setting to_setting(const json &j) {
    if (!j.is_array()) {
        throw InputError("setting must be an array of directions");
    }
    Setting out;
    for (const auto &d : j) {
        out.push_back(to_direction(d));
    }
    return out;
}

}  // namespace

json from_operator(const Operator &op) {
    json entries = json::array();
    for (const Complex &v : op.data()) {
        entries.push_back({v.real(), v.imag()});
    }
    return {{"dim", op.dim()}, {"qubit_order", kQubitOrder}, {"entries", std::move(entries)}};
}

Operator to_operator(const json &j) {
    const json &entries = field(j, "entries");
    if (!entries.is_array()) {
        throw InputError("'entries' must be an array of [re, im] pairs");
    }
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (const auto &e : entries) {
        if (e.is_array() && e.size() == 2) {
            data.emplace_back(number(e[0], "entry real part"), number(e[1], "entry imaginary part"));
        } else if (e.is_number()) {
            data.emplace_back(e.get<double>(), 0.0);
        } else {
            throw InputError("matrix entries must be [re, im] pairs or real numbers");
        }
    }
    std::size_t dim = 0;
    while (dim * dim < data.size()) {
        ++dim;
    }
    if (dim * dim != data.size()) {
        throw InputError("matrix has " + std::to_string(data.size()) + " entries, not a perfect square");
    }
    if (j.contains("dim") && j.at("dim") != dim) {
        throw InputError("'dim' disagrees with the number of entries");
    }
    return Operator(dim, std::move(data));
}

json from_density(const DensityMatrix &rho) {
    json out = from_operator(rho.op());
    out["type"] = "density_matrix";
    out["n_qubits"] = rho.num_qubits();
    return out;
}

DensityMatrix to_density(const json &j) {
    return DensityMatrix::from_operator(to_operator(j));
}

json from_direction(const Direction &n) {
    return {n.x(), n.y(), n.z()};
}

Direction to_direction(const json &j, double tolerance) {
    if (!j.is_array() || j.size() != 3) {
        throw InputError("direction must be an array of three numbers");
    }
    return Direction::normalized(number(j[0], "x"), number(j[1], "y"), number(j[2], "z"), tolerance);
}

json from_tomogram(const TomogramVector &t) {
    json outcomes = json::array();
    std::size_t n = t.directions.size();
    for (std::size_t i = 0; i < t.probs.size(); ++i) {
        outcomes.push_back(Outcome::from_index(i, n).to_string());
    }
    return {
        {"type", "tomogram_vector"},
        {"outcome_order", kOutcomeOrder},
        {"qubit_order", kQubitOrder},
        {"directions", direction_list(t.directions)},
        {"outcomes", std::move(outcomes)},
        {"probs", t.probs},
    };
}

TomogramVector to_tomogram(const json &j) {
    TomogramVector t;
    for (const auto &d : field(j, "directions")) {
        t.directions.push_back(to_direction(d, Direction::kUnitTolerance));
    }
    for (const auto &p : field(j, "probs")) {
        t.probs.push_back(number(p, "probability"));
    }
    if (t.probs.size() != (std::size_t{1} << t.directions.size())) {
        throw InputError("tomogram vector length does not match its directions");
    }
    return t;
}

json from_portrait(const PortraitMatrix &pi) {
    return {{"type", "portrait_matrix"}, {"k", pi.k()}, {"entries", {pi.row(0), pi.row(1)}}};
}

PortraitMatrix to_portrait(const json &j) {
    const json &rows = field(j, "entries");
    if (!rows.is_array() || rows.size() != 2) {
        throw InputError("portrait 'entries' must be a 2 x k array");
    }
    std::array<std::vector<double>, 2> bins;
    for (std::size_t i = 0; i < 2; ++i) {
        for (const auto &v : rows[i]) {
            bins[i].push_back(number(v, "portrait entry"));
        }
    }
    return PortraitMatrix(std::move(bins[0]), std::move(bins[1]));
}

json from_portrait_distribution(const PortraitDistribution &w) {
    return {{"bin_order", "(1,1),(1,2),(2,1),(2,2)"}, {"probs", w.probs}};
}

json from_settings(const ChshSettings &s) {
    return {
        {"x1", direction_list(s.x1)},
        {"x2", direction_list(s.x2)},
        {"y1", direction_list(s.y1)},
        {"y2", direction_list(s.y2)},
    };
}

ChshSettings to_settings(const json &j) {
    return {to_setting(field(j, "x1")), to_setting(field(j, "x2")), to_setting(field(j, "y1")),
            to_setting(field(j, "y2"))};
}

json from_chsh_matrix(const ChshMatrix &m) {
    json rows = json::array();
    for (const auto &row : m.entries) {
        rows.push_back(row);
    }
    return {
        {"row_order", "(+,+),(+,-),(-,+),(-,-)"},
        {"column_order", "(x1,y1),(x1,y2),(x2,y1),(x2,y2)"},
        {"entries", std::move(rows)},
    };
}

json from_search_result(const BellSearchResult &r) {
    return {
        {"best_value", r.best_value},
        {"best_settings", from_settings(r.best_settings)},
        {"evaluations", r.evaluations},
        {"seed", r.seed},
        {"restarts", r.restarts},
        {"best_restart", r.best_restart},
    };
}

json from_ppt_report(const PptReport &r) {
    return {
        {"cut", r.cut.to_string()},
        {"min_eigenvalue", r.min_eigenvalue},
        {"verdict", ppt_verdict_name(r.verdict)},
        {"spectrum", r.spectrum},
        {"note", r.note},
    };
}

}  // namespace tomo::json
