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

#include "tomoportrait/tomography.h"

#include <algorithm>
#include <cmath>

#include "tomoportrait/errors.h"

namespace tomo {

namespace {

void require_directions(const DensityMatrix &rho, std::span<const Direction> dirs) {
    if (dirs.size() != rho.num_qubits()) {
        throw InputError("expected " + std::to_string(rho.num_qubits()) + " directions for the state, got " +
                         std::to_string(dirs.size()));
    }
}

}  // namespace

Outcome Outcome::from_index(std::size_t index, std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits >= 64 || index >> num_qubits) {
        throw InputError("outcome index out of range");
    }
    std::vector<int> signs(num_qubits);
    for (std::size_t k = 0; k < num_qubits; ++k) {
        signs[k] = ((index >> (num_qubits - 1 - k)) & 1) ? -1 : 1;
    }
    return Outcome(std::move(signs));
}

Outcome Outcome::from_signs(std::vector<int> signs) {
    if (signs.empty()) {
        throw InputError("empty outcome");
    }
    for (int s : signs) {
        if (s != 1 && s != -1) {
            throw InputError("outcome signs must be +1 or -1");
        }
    }
    return Outcome(std::move(signs));
}

Outcome Outcome::parse(std::string_view text) {
    std::vector<int> signs;
    for (char c : text) {
        if (c == '+') {
            signs.push_back(1);
        } else if (c == '-') {
            signs.push_back(-1);
        } else {
            throw InputError("outcome '" + std::string(text) + "' must consist of '+' and '-'");
        }
    }
    return from_signs(std::move(signs));
}

std::size_t Outcome::index() const {
    std::size_t out = 0;
    for (int s : signs_) {
        out = (out << 1) | (s < 0 ? 1 : 0);
    }
    return out;
}

std::string Outcome::to_string() const {
    std::string out;
    for (int s : signs_) {
        out += s > 0 ? '+' : '-';
    }
    return out;
}

Operator projector(double m, const Direction &n) {
    double s;
    if (m == 0.5) {
        s = 1;
    } else if (m == -0.5) {
        s = -1;
    } else {
        throw InputError("spin projection must be +1/2 or -1/2");
    }
    return {
        {0.5 * (1 + s * n.z()), 0.5 * Complex{s * n.x(), -s * n.y()}},
        {0.5 * Complex{s * n.x(), s * n.y()}, 0.5 * (1 - s * n.z())},
    };
}

double tomogram_raw(const DensityMatrix &rho, std::span<const Direction> dirs, const Outcome &m) {
    require_directions(rho, dirs);
    if (m.size() != dirs.size()) {
        throw InputError("outcome has " + std::to_string(m.size()) + " entries for " +
                         std::to_string(dirs.size()) + " qubits");
    }
    std::size_t n = dirs.size();
    std::vector<Operator> factors;
    factors.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        factors.push_back(projector(m.m(k), dirs[k]));
    }
    // Tr(rho P) = sum_jk rho_jk P_kj with P_kj a product of 2x2 entries.
    const Operator &op = rho.op();
    std::size_t d = op.dim();
    Complex acc = 0;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            Complex p = 1;
            for (std::size_t q = 0; q < n; ++q) {
                std::size_t shift = n - 1 - q;
                p *= factors[q]((k >> shift) & 1, (j >> shift) & 1);
            }
            acc += op(j, k) * p;
        }
    }
    return acc.real();
}

double tomogram(const DensityMatrix &rho, std::span<const Direction> dirs, const Outcome &m) {
    return std::clamp(tomogram_raw(rho, dirs, m), 0.0, 1.0);
}

TomogramVector tomogram_vector(const DensityMatrix &rho, std::span<const Direction> dirs) {
    require_directions(rho, dirs);
    std::vector<Operator> rotations;
    rotations.reserve(dirs.size());
    for (const auto &n : dirs) {
        rotations.push_back(rotation_from_direction(n));
    }
    Operator u = tensor(rotations);
    Operator rho_u = rho.op() * u;
    std::size_t d = u.dim();
    TomogramVector out{{dirs.begin(), dirs.end()}, std::vector<double>(d)};
    for (std::size_t i = 0; i < d; ++i) {
        Complex acc = 0;
        for (std::size_t j = 0; j < d; ++j) {
            acc += std::conj(u(j, i)) * rho_u(j, i);
        }
        out.probs[i] = acc.real();
    }
    return out;
}

double four_way_overlap(std::span<const Direction, 4> dirs) {
    double sum = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        sum += dirs[0][i] * dirs[1][i] * dirs[2][i] * dirs[3][i];
    }
    return sum;
}

double smolin_tomogram_closed(const Outcome &m, std::span<const Direction, 4> dirs) {
    if (m.size() != 4) {
        throw InputError("Smolin tomogram needs a four-qubit outcome");
    }
    return 1.0 / 16 + m.m(0) * m.m(1) * m.m(2) * m.m(3) * four_way_overlap(dirs);
}

MarginalReport marginal_check(
    const DensityMatrix &rho, std::span<const Direction> dirs, std::span<const std::size_t> keep) {
    require_directions(rho, dirs);
    std::size_t n = rho.num_qubits();
    DensityMatrix reduced = DensityMatrix::from_operator(partial_trace(rho.op(), keep));
    std::vector<Direction> kept_dirs;
    for (std::size_t q : keep) {
        kept_dirs.push_back(dirs[q]);
    }
    TomogramVector full = tomogram_vector(rho, dirs);
    TomogramVector expected = tomogram_vector(reduced, kept_dirs);

    std::vector<double> summed(expected.probs.size(), 0.0);
    for (std::size_t i = 0; i < full.probs.size(); ++i) {
        std::size_t packed = 0;
        for (std::size_t q : keep) {
            packed = (packed << 1) | ((i >> (n - 1 - q)) & 1);
        }
        summed[packed] += full.probs[i];
    }
    MarginalReport report;
    for (std::size_t i = 0; i < summed.size(); ++i) {
        report.max_deviation = std::max(report.max_deviation, std::abs(summed[i] - expected.probs[i]));
    }
    report.consistent = report.max_deviation <= 1e-12;
    return report;
}

}  // namespace tomo
