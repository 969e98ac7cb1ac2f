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

#include "tomoportrait/ppt.h"

#include <string>

#include "tomoportrait/errors.h"
#include "tomoportrait/linalg.h"

namespace tomo {

std::string_view ppt_verdict_name(PptVerdict v) {
    return v == PptVerdict::kPpt ? "PPT" : "NPT_ENTANGLED";
}

PptReport ppt_check(const DensityMatrix &rho, const CutSpec &cut) {
    if (cut.num_qubits() != rho.num_qubits()) {
        throw InputError("cut " + cut.to_string() + " does not match a " + std::to_string(rho.num_qubits()) +
                         "-qubit state");
    }
    Operator pt = partial_transpose(rho.op(), cut.left());
    std::vector<double> spectrum = hermitian_eigenvalues(pt);
    double min_eigenvalue = spectrum.front();
    PptVerdict verdict = min_eigenvalue < -kNegativityThreshold ? PptVerdict::kNptEntangled : PptVerdict::kPpt;
    std::string_view note = verdict == PptVerdict::kNptEntangled
                                ? "negative partial transpose certifies entanglement across the cut"
                                : "positive partial transpose is necessary for separability but does not certify it";
    return PptReport{cut, min_eigenvalue, verdict, std::move(spectrum), note};
}

}  // namespace tomo
