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
#include <vector>

#include "tomoportrait/cut.h"
#include "tomoportrait/states.h"

namespace tomo {

enum class PptVerdict {
    /// Partial transpose is positive semidefinite. Necessary for
    /// separability; beyond 2x2 and 2x3 systems it does not certify it.
    kPpt,
    /// A negative eigenvalue certifies entanglement across the cut.
    kNptEntangled,
};

std::string_view ppt_verdict_name(PptVerdict v);

/// Eigenvalues below -1e-10 count as genuine negativity.
inline constexpr double kNegativityThreshold = 1e-10;

struct PptReport {
    CutSpec cut;
    double min_eigenvalue;
    PptVerdict verdict;
    /// Full spectrum of the partial transpose, ascending.
    std::vector<double> spectrum;
    std::string_view note;
};

/// Partial transpose over `cut.left()` and its spectrum.
PptReport ppt_check(const DensityMatrix &rho, const CutSpec &cut);

}  // namespace tomo
