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

#include <string_view>

#include <nlohmann/json.hpp>

#include "tomoportrait/bell.h"
#include "tomoportrait/linalg.h"
#include "tomoportrait/portrait.h"
#include "tomoportrait/ppt.h"
#include "tomoportrait/states.h"
#include "tomoportrait/tomography.h"

/// JSON forms of the library's values.
///
/// Complex numbers are [re, im] pairs, matrices are row-major, and doubles are
/// written in shortest round-trip form (at most 17 significant digits), so
/// every value re-parses to the identical double. Parsers throw InputError on
/// malformed input.
namespace tomo::json {

using nlohmann::json;

inline constexpr std::string_view kQubitOrder = "qubit_A_most_significant";

json from_operator(const Operator &op);
Operator to_operator(const json &j);

json from_density(const DensityMatrix &rho);
/// Accepts the object written by from_density (the "entries" key is
/// required; "dim" is checked when present). Validates as a density matrix.
DensityMatrix to_density(const json &j);

json from_direction(const Direction &n);
/// A three-element array. The norm must be within `tolerance` of 1; the
/// vector is then rescaled to unit length.
Direction to_direction(const json &j, double tolerance = 1e-9);

json from_tomogram(const TomogramVector &t);
TomogramVector to_tomogram(const json &j);

json from_portrait(const PortraitMatrix &pi);
PortraitMatrix to_portrait(const json &j);

json from_portrait_distribution(const PortraitDistribution &w);

json from_settings(const ChshSettings &s);
ChshSettings to_settings(const json &j);

json from_chsh_matrix(const ChshMatrix &m);

json from_search_result(const BellSearchResult &r);

json from_ppt_report(const PptReport &r);

}  // namespace tomo::json
