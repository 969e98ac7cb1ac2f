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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "tomoportrait/bell.h"
#include "tomoportrait/errors.h"
#include "tomoportrait/portrait.h"
#include "tomoportrait/ppt.h"
#include "tomoportrait/serialize.h"
#include "tomoportrait/tomography.h"

#ifndef TOMOPORTRAIT_VERSION
#define TOMOPORTRAIT_VERSION "unknown"
#endif

namespace tomo::cli {

using nlohmann::json;
namespace ser = tomo::json;

namespace {

const std::set<std::string> kSetupKeys = {
    "state", "cut", "directions", "seed", "restarts", "tomogram_directions", "outcome",
};

char qubit_letter(std::size_t q) {
    return static_cast<char>('A' + q);
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
        throw InputError(std::string(what) + " must be a nonnegative integer, got '" + std::string(text) + "'");
    }
    return v;
}

std::uint64_t json_u64(const json &j, std::string_view what) {
    if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
        throw InputError("setup '" + std::string(what) + "' must be a nonnegative integer");
    }
    return j.get<std::uint64_t>();
}

bool is_smolin(const Config &c) {
    return c.state_name == "smolin" || c.state_name == "smolin-mixture";
}

const DensityMatrix &require_state(const Config &c) {
    if (!c.state) {
        throw InputError("no state given (use --state or the setup 'state' key)");
    }
    return *c.state;
}

CutSpec require_cut(const Config &c) {
    const DensityMatrix &rho = require_state(c);
    if (!c.cut) {
        std::vector<std::size_t> rest;
        for (std::size_t q = 1; q < rho.num_qubits(); ++q) {
            rest.push_back(q);
        }
        return CutSpec({0}, rest, rho.num_qubits());
    }
    if (c.cut->num_qubits() != rho.num_qubits()) {
        throw InputError("cut " + c.cut->to_string() + " covers " + std::to_string(c.cut->num_qubits()) +
                         " qubits but the state has " + std::to_string(rho.num_qubits()));
    }
    return *c.cut;
}

/// Setting names for one side: prefix alone for a single qubit, else prefix
/// followed by each qubit letter.
std::vector<std::string> side_names(char prefix, const std::vector<std::size_t> &qubits) {
    std::vector<std::string> names;
    for (std::size_t q : qubits) {
        std::string name(1, prefix);
        if (qubits.size() > 1) {
            name += qubit_letter(q);
        }
        names.push_back(std::move(name));
    }
    return names;
}

struct NamedLayout {
    std::vector<std::string> x1, x2, y1, y2;

    explicit NamedLayout(const CutSpec &cut)
        : x1(side_names('a', cut.left())),
          x2(side_names('d', cut.left())),
          y1(side_names('b', cut.right())),
          y2(side_names('c', cut.right())) {}

    std::vector<std::string> all() const {
        std::vector<std::string> out;
        for (const auto *v : {&x1, &x2, &y1, &y2}) {
            out.insert(out.end(), v->begin(), v->end());
        }
        return out;
    }
};

Direction parse_named_direction(const std::string &name, const json &j) {
    try {
        return ser::to_direction(j, kSetupDirectionTolerance);
    } catch (const InputError &e) {
        throw InputError("direction '" + name + "' = " + j.dump() + ": " + e.what());
    }
}

std::optional<ChshSettings> named_settings(const Config &c, const CutSpec &cut, bool required) {
    NamedLayout layout(cut);
    std::string missing;
    for (const auto &name : layout.all()) {
        if (!c.directions.contains(name)) {
            missing += (missing.empty() ? "" : ", ") + name;
        }
    }
    if (!missing.empty()) {
        if (!required && c.directions.empty()) {
            return std::nullopt;
        }
        throw InputError("missing directions for cut " + cut.to_string() + ": " + missing);
    }
    for (const auto &[name, value] : c.directions) {
        auto names = layout.all();
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw InputError("direction '" + name + "' is not used by cut " + cut.to_string());
        }
    }
    auto pick = [&](const std::vector<std::string> &names) {
        Setting s;
        for (const auto &n : names) {
            s.push_back(parse_named_direction(n, c.directions.at(n)));
        }
        return s;
    };
    return ChshSettings{pick(layout.x1), pick(layout.x2), pick(layout.y1), pick(layout.y2)};
}

json named_settings_json(const ChshSettings &s, const CutSpec &cut) {
    NamedLayout layout(cut);
    json out = json::object();
    auto put = [&](const std::vector<std::string> &names, const Setting &dirs) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            out[names[i]] = ser::from_direction(dirs[i]);
        }
    };
    put(layout.x1, s.x1);
    put(layout.x2, s.x2);
    put(layout.y1, s.y1);
    put(layout.y2, s.y2);
    return out;
}

PortraitMatrix side_portrait(std::size_t qubits) {
    return qubits == 1 ? PortraitMatrix::identity() : PortraitMatrix::parity(qubits);
}

BinaryCorrelationFamily family_for(const Config &c, const CutSpec &cut) {
    return state_family(require_state(c), cut, side_portrait(cut.left().size()), side_portrait(cut.right().size()));
}

bool closed_form_applies(const Config &c, const CutSpec &cut) {
    return is_smolin(c) && cut.left().size() == 1 && cut.right().size() == 3;
}

Direction parse_axis_token(std::string_view token) {
    std::string_view t = token;
    double sign = 1;
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
        sign = t.front() == '-' ? -1 : 1;
        t.remove_prefix(1);
    }
    if (t == "x" || t == "X") {
        return Direction(sign, 0, 0);
    }
    if (t == "y" || t == "Y") {
        return Direction(0, sign, 0);
    }
    if (t == "z" || t == "Z") {
        return Direction(0, 0, sign);
    }
    throw InputError("bad axis '" + std::string(token) + "' in --dirs (expected [+-]x, y or z)");
}

std::vector<Direction> tomogram_dirs(const Config &c, std::size_t n) {
    std::vector<Direction> dirs;
    if (!c.tomogram_directions) {
        return std::vector<Direction>(n, Direction::z_axis());
    }
    const json &j = *c.tomogram_directions;
    if (j.is_string()) {
        std::stringstream ss(j.get<std::string>());
        std::string token;
        while (std::getline(ss, token, ',')) {
            dirs.push_back(parse_axis_token(token));
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            dirs.push_back(parse_named_direction("tomogram_directions[" + std::to_string(i) + "]", j[i]));
        }
    } else {
        throw InputError("'tomogram_directions' must be an array of directions or an axis string");
    }
    if (dirs.size() == 1 && n > 1) {
        dirs.assign(n, dirs[0]);
    }
    if (dirs.size() != n) {
        throw InputError("got " + std::to_string(dirs.size()) + " tomogram directions for a " + std::to_string(n) +
                         "-qubit state");
    }
    return dirs;
}

json tolerances() {
    return {
        {"setup_direction_unit", kSetupDirectionTolerance},
        {"direction_unit", Direction::kUnitTolerance},
        {"hermitian", kHermitianTolerance},
        {"trace", kTraceTolerance},
        {"psd", kPsdTolerance},
        {"probability", kProbabilityTolerance},
        {"bell_violation_margin", kBellViolationMargin},
        {"negativity", kNegativityThreshold},
    };
}

json envelope(std::string_view command, const Config &c) {
    return {
        {"tool", "tomoportrait"},
        {"version", TOMOPORTRAIT_VERSION},
        {"command", command},
        {"seed", c.seed},
        {"tolerances", tolerances()},
        {"state", c.state_name},
    };
}

json load_setup_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open setup file '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw InputError("setup file '" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace

DensityMatrix named_state(std::string_view name) {
    if (name == "smolin") {
        return smolin_pauli();
    }
    if (name == "smolin-mixture") {
        return smolin_mixture();
    }
    if (name.starts_with("bell:")) {
        return DensityMatrix::from_pure(bell_state(parse_bell_kind(name.substr(5))));
    }
    throw InputError("unknown state '" + std::string(name) + "' (expected smolin, smolin-mixture or bell:<kind>)");
}

Config resolve(const Flags &flags, const json &setup, std::optional<std::string> env_seed) {
    if (!setup.is_null() && !setup.is_object()) {
        throw InputError("setup must be a JSON object");
    }
    json s = setup.is_null() ? json::object() : setup;
    for (const auto &[key, value] : s.items()) {
        if (!kSetupKeys.contains(key)) {
            throw InputError("unknown setup key '" + key + "'");
        }
    }

    Config c;
    if (env_seed) {
        c.seed = parse_u64(*env_seed, kSeedEnvVar);
    }

    if (flags.state) {
        c.state_name = *flags.state;
        c.state = named_state(*flags.state);
    } else if (s.contains("state")) {
        const json &st = s["state"];
        if (st.is_string()) {
            c.state_name = st.get<std::string>();
            c.state = named_state(c.state_name);
        } else if (st.is_object()) {
            c.state_name = "inline";
            c.state = ser::to_density(st);
        } else {
            throw InputError("setup 'state' must be a name or an inline density matrix");
        }
    }

    if (flags.cut) {
        c.cut = CutSpec::parse(*flags.cut);
    } else if (s.contains("cut")) {
        if (!s["cut"].is_string()) {
            throw InputError("setup 'cut' must be a string such as \"A:BCD\"");
        }
        c.cut = CutSpec::parse(s["cut"].get<std::string>());
    }

    if (s.contains("directions")) {
        if (!s["directions"].is_object()) {
            throw InputError("setup 'directions' must be an object of named vectors");
        }
        for (const auto &[name, value] : s["directions"].items()) {
            c.directions[name] = value;
        }
    }

    if (flags.dirs) {
        c.tomogram_directions = *flags.dirs;
    } else if (s.contains("tomogram_directions")) {
        c.tomogram_directions = s["tomogram_directions"];
    }

    if (flags.outcome) {
        c.outcome = *flags.outcome;
    } else if (s.contains("outcome")) {
        if (!s["outcome"].is_string()) {
            throw InputError("setup 'outcome' must be a string such as \"++-+\"");
        }
        c.outcome = s["outcome"].get<std::string>();
    }

    if (flags.seed) {
        c.seed = *flags.seed;
    } else if (s.contains("seed")) {
        c.seed = json_u64(s["seed"], "seed");
    }

    if (flags.restarts) {
        c.restarts = *flags.restarts;
    } else if (s.contains("restarts")) {
        c.restarts = json_u64(s["restarts"], "restarts");
    }
    if (c.restarts < 1) {
        throw InputError("restarts must be at least 1");
    }
    c.threads = std::max<std::size_t>(flags.threads, 1);
    return c;
}

json cmd_state(const Config &c) {
    json out = envelope("state", c);
    out.update(ser::from_density(require_state(c)));
    return out;
}

json cmd_tomogram(const Config &c) {
    const DensityMatrix &rho = require_state(c);
    std::vector<Direction> dirs = tomogram_dirs(c, rho.num_qubits());
    json out = envelope("tomogram", c);
    if (c.outcome) {
        Outcome m = Outcome::parse(*c.outcome);
        if (m.size() != rho.num_qubits()) {
            throw InputError("outcome '" + *c.outcome + "' has " + std::to_string(m.size()) +
                             " signs for a " + std::to_string(rho.num_qubits()) + "-qubit state");
        }
        out["outcome_order"] = kOutcomeOrder;
        out["qubit_order"] = ser::kQubitOrder;
        out["directions"] = json::array();
        for (const auto &d : dirs) {
            out["directions"].push_back(ser::from_direction(d));
        }
        out["outcome"] = m.to_string();
        out["probability"] = tomogram(rho, dirs, m);
        return out;
    }
    out["tomogram"] = ser::from_tomogram(tomogram_vector(rho, dirs));
    return out;
}

json cmd_bell(const Config &c) {
    CutSpec cut = require_cut(c);
    ChshSettings settings = *named_settings(c, cut, true);
    ChshMatrix m = chsh_matrix(family_for(c, cut), settings);
    double dense = bell_number(m);

    json out = envelope("bell", c);
    out["cut"] = cut.to_string();
    out["directions"] = named_settings_json(settings, cut);
    out["chsh_matrix"] = ser::from_chsh_matrix(m);
    out["dense_pipeline"] = dense;
    if (closed_form_applies(c, cut)) {
        double closed = smolin_bell_closed(settings);
        out["closed_form"] = closed;
        out["abs_difference"] = std::abs(closed - dense);
    } else {
        out["closed_form"] = nullptr;
        out["abs_difference"] = nullptr;
    }
    out["verdict"] = verdict_name(separability_verdict(dense));
    return out;
}

json cmd_bell_maximize(const Config &c) {
    CutSpec cut = require_cut(c);
    BellSearchOptions options;
    options.seed = c.seed;
    options.restarts = c.restarts;
    options.threads = c.threads;
    options.initial = named_settings(c, cut, false);

    bool closed = closed_form_applies(c, cut);
    BellObjective objective = closed ? smolin_closed_objective() : pipeline_objective(family_for(c, cut));
    SettingShape shape{cut.left().size(), cut.left().size(), cut.right().size(), cut.right().size()};
    BellSearchResult r = maximize_bell(objective, shape, options);

    json out = envelope("bell-maximize", c);
    out["cut"] = cut.to_string();
    out["objective"] = closed ? "closed_form" : "dense_pipeline";
    out["result"] = ser::from_search_result(r);
    out["best_directions"] = named_settings_json(r.best_settings, cut);
    out["verdict"] = verdict_name(separability_verdict(r.best_value));
    return out;
}

json cmd_ppt(const Config &c) {
    CutSpec cut = require_cut(c);
    json out = envelope("ppt", c);
    out.update(ser::from_ppt_report(ppt_check(require_state(c), cut)));
    return out;
}

int run(std::string_view verb, const Flags &flags, std::optional<std::string> env_seed, std::ostream &out,
        std::ostream &err) {
    try {
        json setup = flags.setup_path ? load_setup_file(*flags.setup_path) : json();
        Config c = resolve(flags, setup, std::move(env_seed));
        json report;
        if (verb == "state") {
            report = cmd_state(c);
        } else if (verb == "tomogram") {
            report = cmd_tomogram(c);
        } else if (verb == "bell") {
            report = cmd_bell(c);
        } else if (verb == "bell-maximize") {
            report = cmd_bell_maximize(c);
        } else if (verb == "ppt") {
            report = cmd_ppt(c);
        } else {
            throw InputError("unknown command '" + std::string(verb) + "'");
        }
        std::string text = report.dump(2) + "\n";
        if (flags.out_path) {
            std::ofstream f(*flags.out_path, std::ios::binary);
            if (!f || !(f << text) || !f.flush()) {
                throw InputError("cannot write '" + *flags.out_path + "'");
            }
        } else {
            out << text;
        }
        return kOk;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const NumericalError &e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumericalFailure;
    }
}

}  // namespace tomo::cli
