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

#include <cstdlib>
#include <iostream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "cli.h"

int main(int argc, char **argv) {
    CLI::App app{"Tomographic qubit-portrait Bell tests and PPT checks for multi-qubit states."};
    app.require_subcommand(1);
    app.set_version_flag("--version", TOMOPORTRAIT_VERSION_STRING);

    tomo::cli::Flags flags;
    std::string state_name;
    std::uint64_t seed = 0;
    std::size_t restarts = 0;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--setup", flags.setup_path, "JSON setup file");
        sub->add_option("--out", flags.out_path, "Write the report here instead of stdout");
        sub->add_option("--state", flags.state, "Named state; overrides the setup file");
    };

    auto *state = app.add_subcommand("state", "Write a named density matrix");
    state->add_option("name", state_name, "smolin, smolin-mixture or bell:<kind>")->required();
    state->add_option("--out", flags.out_path, "Write the matrix here instead of stdout");

    auto *tomogram = app.add_subcommand("tomogram", "Tomogram vector or one outcome probability");
    add_common(tomogram);
    tomogram->add_option("--dirs", flags.dirs, "Comma-separated axes per qubit, e.g. z,z,x,-y");
    tomogram->add_option("--outcome", flags.outcome, "Single outcome such as ++-+");

    auto *bell = app.add_subcommand("bell", "Bell number at the setup's directions");
    add_common(bell);
    bell->add_option("--cut", flags.cut, "Bipartition such as A:BCD");

    auto *maximize = app.add_subcommand("bell-maximize", "Seeded multi-start Bell number search");
    add_common(maximize);
    maximize->add_option("--cut", flags.cut, "Bipartition such as A:BCD");
    auto *seed_opt = maximize->add_option("--seed", seed, "Random seed");
    auto *restarts_opt = maximize->add_option("--restarts", restarts, "Number of restarts")->check(CLI::PositiveNumber);
    maximize->add_option("--threads", flags.threads, "Worker threads (results do not depend on this)")
        ->check(CLI::PositiveNumber);

    auto *ppt = app.add_subcommand("ppt", "Partial-transpose check across a cut");
    add_common(ppt);
    ppt->add_option("--cut", flags.cut, "Bipartition such as A:BCD");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return tomo::cli::kInputError;
    }

    if (seed_opt->count() > 0) {
        flags.seed = seed;
    }
    if (restarts_opt->count() > 0) {
        flags.restarts = restarts;
    }
    if (state->parsed()) {
        flags.state = state_name;
    }

    std::optional<std::string> env_seed;
    if (const char *v = std::getenv(tomo::cli::kSeedEnvVar)) {
        env_seed = v;
    }
    std::string verb = app.get_subcommands().front()->get_name();
    return tomo::cli::run(verb, flags, env_seed, std::cout, std::cerr);
}
