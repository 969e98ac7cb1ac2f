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

// Command implementations behind the `tomoportrait` executable.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tomoportrait/cut.h"
#include "tomoportrait/states.h"

namespace tomo::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kNumericalFailure = 3,
};

/// Environment variable that may set the default seed (flags and setup files
/// take precedence).
inline constexpr const char *kSeedEnvVar = "TOMOPORTRAIT_SEED";
inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr std::size_t kDefaultRestarts = 32;
/// Setup-file directions must be unit within this before rescaling.
inline constexpr double kSetupDirectionTolerance = 1e-9;

/// Values given on the command line. Unset fields fall back to the setup file
/// and then to defaults.
struct Flags {
    std::optional<std::string> setup_path;
    std::optional<std::string> state;
    std::optional<std::string> cut;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> restarts;
    std::optional<std::string> dirs;
    std::optional<std::string> outcome;
    std::optional<std::string> out_path;
    std::size_t threads = 1;
};

/// Fully resolved inputs for one command.
struct Config {
    std::string state_name;
    std::optional<DensityMatrix> state;
    std::optional<CutSpec> cut;
    /// Raw direction entries keyed by name; validated when a command uses them.
    std::map<std::string, nlohmann::json> directions;
    std::optional<nlohmann::json> tomogram_directions;
    std::optional<std::string> outcome;
    std::uint64_t seed = kDefaultSeed;
    std::size_t restarts = kDefaultRestarts;
    std::size_t threads = 1;
};

/// Builds a named state: "smolin", "smolin-mixture", "bell:<kind>".
DensityMatrix named_state(std::string_view name);

/// Merges flags over the setup object over defaults. `env_seed` is the value
/// of kSeedEnvVar, if set.
Config resolve(const Flags &flags, const nlohmann::json &setup, std::optional<std::string> env_seed);

nlohmann::json cmd_state(const Config &config);
nlohmann::json cmd_tomogram(const Config &config);
nlohmann::json cmd_bell(const Config &config);
nlohmann::json cmd_bell_maximize(const Config &config);
nlohmann::json cmd_ppt(const Config &config);

/// Loads the setup file, resolves, runs `verb`, and writes the JSON report to
/// `flags.out_path` or `out`. Errors go to `err`. Returns the process exit
/// code.
int run(std::string_view verb, const Flags &flags, std::optional<std::string> env_seed, std::ostream &out,
        std::ostream &err);

}  // namespace tomo::cli
