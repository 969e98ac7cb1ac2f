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

#include "tomoportrait/states.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tomoportrait/errors.h"

namespace tomo {

std::string_view bell_kind_name(BellKind kind) {
    switch (kind) {
        case BellKind::kPhiPlus:
            return "Φ+";
        case BellKind::kPhiMinus:
            return "Φ-";
        case BellKind::kPsiPlus:
            return "Ψ+";
        case BellKind::kPsiMinus:
            return "Ψ-";
    }
    throw InputError("invalid BellKind");
}

BellKind parse_bell_kind(std::string_view text) {
    std::string s(text);
    // Normalize U+2212 MINUS SIGN to ASCII.
    for (std::size_t pos; (pos = s.find("−")) != std::string::npos;) {
        s.replace(pos, std::string_view("−").size(), "-");
    }
    if (s == "Φ+" || s == "Phi+" || s == "phi+" || s == "PHI+") return BellKind::kPhiPlus;
    if (s == "Φ-" || s == "Phi-" || s == "phi-" || s == "PHI-") return BellKind::kPhiMinus;
    if (s == "Ψ+" || s == "Psi+" || s == "psi+" || s == "PSI+") return BellKind::kPsiPlus;
    if (s == "Ψ-" || s == "Psi-" || s == "psi-" || s == "PSI-") return BellKind::kPsiMinus;
    throw InputError("unknown Bell state '" + std::string(text) + "'");
}

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    std::size_t d = amplitudes_.size();
    if (d < 2 || !std::has_single_bit(d)) {
        throw InputError("state vector length must be a power of two >= 2");
    }
    num_qubits_ = static_cast<std::size_t>(std::countr_zero(d));
    double norm2 = 0;
    for (const auto &a : amplitudes_) {
        norm2 += std::norm(a);
    }
    if (!(std::abs(norm2 - 1) <= 1e-12)) {
        throw InputError("state vector is not normalized (squared norm " + std::to_string(norm2) + ")");
    }
}

Operator PureState::projector() const {
    std::size_t d = amplitudes_.size();
    Operator out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            out(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
        }
    }
    return out;
}

ValidationReport validate_density(const Operator &op) {
    ValidationReport report;
    report.hermiticity_defect = hermiticity_defect(op);
    report.trace_defect = std::abs(op.trace() - Complex{1, 0});
    if (report.hermiticity_defect > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "not Hermitian: max |h_ij - conj(h_ji)| = " << report.hermiticity_defect;
        report.violations.push_back(msg.str());
    }
    if (!(report.trace_defect <= kTraceTolerance)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "trace is " << op.trace().real() << (op.trace().imag() >= 0 ? "+" : "") << op.trace().imag()
            << "i, not 1";
        report.violations.push_back(msg.str());
    }
    if (report.hermiticity_defect <= kHermitianTolerance) {
        report.min_eigenvalue = hermitian_eigenvalues(op).front();
        if (report.min_eigenvalue < -kPsdTolerance) {
            std::ostringstream msg;
            msg << "not positive semidefinite: min eigenvalue " << report.min_eigenvalue;
            report.violations.push_back(msg.str());
        }
    } else {
        report.min_eigenvalue = std::nan("");
        report.violations.emplace_back("positivity not checked: operator is not Hermitian");
    }
    return report;
}

DensityMatrix DensityMatrix::from_operator(Operator op) {
    ValidationReport report = validate_density(op);
    if (!report.ok()) {
        std::string msg = "invalid density matrix:";
        for (const auto &v : report.violations) {
            msg += "\n  - " + v;
        }
        throw InputError(msg);
    }
    return DensityMatrix(std::move(op));
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    return from_operator(psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > 16) {
        throw InputError("maximally mixed state needs 1..16 qubits");
    }
    std::size_t d = std::size_t{1} << num_qubits;
    return DensityMatrix(Operator::identity(d) * Complex{1.0 / static_cast<double>(d), 0});
}

PureState bell_state(BellKind kind) {
    const double h = std::numbers::sqrt2 / 2;
    switch (kind) {
        case BellKind::kPhiPlus:
            return PureState({h, 0, 0, h});
        case BellKind::kPhiMinus:
            return PureState({h, 0, 0, -h});
        case BellKind::kPsiPlus:
            return PureState({0, h, h, 0});
        case BellKind::kPsiMinus:
            return PureState({0, h, -h, 0});
    }
    throw InputError("invalid BellKind");
}

DensityMatrix smolin_mixture() {
    Operator sum(16);
    for (BellKind kind : kAllBellKinds) {
        Operator pair = bell_state(kind).projector();
        sum += tensor(pair, pair);
    }
    return DensityMatrix::from_operator(sum * Complex{0.25, 0});
}

DensityMatrix smolin_pauli() {
    Operator sum = Operator::identity(16);
    for (const Operator &s : {pauli_x(), pauli_y(), pauli_z()}) {
        sum += tensor(tensor(s, s), tensor(s, s));
    }
    return DensityMatrix::from_operator(sum * Complex{1.0 / 16, 0});
}

DensityMatrix permute_qubits(const DensityMatrix &rho, std::span<const std::size_t> perm) {
    std::size_t n = rho.num_qubits();
    if (perm.size() != n) {
        throw InputError("permutation has " + std::to_string(perm.size()) + " entries for " + std::to_string(n) +
                         " qubits");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) {
            throw InputError("not a permutation of the qubit indices");
        }
        seen[p] = true;
    }
    auto relabel = [&](std::size_t index) {
        std::size_t out = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if ((index >> (n - 1 - q)) & 1) {
                out |= std::size_t{1} << (n - 1 - perm[q]);
            }
        }
        return out;
    };
    const Operator &in = rho.op();
    std::size_t d = in.dim();
    std::vector<std::size_t> map(d);
    for (std::size_t i = 0; i < d; ++i) {
        map[i] = relabel(i);
    }
    Operator out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            out(map[r], map[c]) = in(r, c);
        }
    }
    return DensityMatrix::from_operator(std::move(out));
}

DensityMatrix assemble_separable(const SeparableDecomposition &dec) {
    if (dec.terms.empty()) {
        throw InputError("separable decomposition has no terms");
    }
    std::size_t left_dim = dec.terms.front().left.dim();
    std::size_t right_dim = dec.terms.front().right.dim();
    double total = 0;
    Operator sum(left_dim * right_dim);
    for (std::size_t i = 0; i < dec.terms.size(); ++i) {
        const SeparableTerm &term = dec.terms[i];
        if (!(term.weight >= 0)) {
            throw InputError("separable term " + std::to_string(i) + " has negative weight");
        }
        if (term.left.dim() != left_dim || term.right.dim() != right_dim) {
            throw InputError("separable term " + std::to_string(i) + " has inconsistent factor dimensions");
        }
        total += term.weight;
        sum += tensor(term.left.op(), term.right.op()) * Complex{term.weight, 0};
    }
    if (!(std::abs(total - 1) <= 1e-12)) {
        throw InputError("separable weights sum to " + std::to_string(total) + ", not 1");
    }
    return DensityMatrix::from_operator(std::move(sum));
}

}  // namespace tomo
