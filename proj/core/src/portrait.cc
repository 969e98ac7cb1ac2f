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

#include "tomoportrait/portrait.h"

#include <bit>
#include <cmath>
#include <string>

#include "tomoportrait/errors.h"

namespace tomo {

namespace {

void require_distribution(std::span<const double> p, const char *what) {
    double sum = 0;
    for (double v : p) {
        if (!(v >= -kProbabilityTolerance)) {
            throw InputError(std::string(what) + " has a negative entry " + std::to_string(v));
        }
        sum += v;
    }
    if (!(std::abs(sum - 1) <= kProbabilityTolerance)) {
        throw InputError(std::string(what) + " sums to " + std::to_string(sum) + ", not 1");
    }
}

}  // namespace

PortraitMatrix::PortraitMatrix(std::vector<double> bin1, std::vector<double> bin2)
    : bins_{std::move(bin1), std::move(bin2)} {
    if (bins_[0].size() != bins_[1].size() || bins_[0].empty()) {
        throw InputError("portrait rows must be nonempty and of equal length");
    }
    for (std::size_t j = 0; j < k(); ++j) {
        if (!(bins_[0][j] >= 0) || !(bins_[1][j] >= 0)) {
            throw InputError("portrait column " + std::to_string(j) + " has a negative entry");
        }
        double sum = bins_[0][j] + bins_[1][j];
        if (!(std::abs(sum - 1) <= 1e-12)) {
            throw InputError("portrait column " + std::to_string(j) + " sums to " + std::to_string(sum) + ", not 1");
        }
    }
}

PortraitMatrix PortraitMatrix::identity() {
    return PortraitMatrix({1, 0}, {0, 1});
}

PortraitMatrix PortraitMatrix::parity(std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > 16) {
        throw InputError("parity portrait needs 1..16 qubits");
    }
    std::size_t k = std::size_t{1} << num_qubits;
    std::vector<double> even(k);
    std::vector<double> odd(k);
    for (std::size_t j = 0; j < k; ++j) {
        bool is_even = std::popcount(j) % 2 == 0;
        even[j] = is_even ? 1 : 0;
        odd[j] = is_even ? 0 : 1;
    }
    return PortraitMatrix(std::move(even), std::move(odd));
}

std::array<double, 2> apply_portrait(std::span<const double> p, const PortraitMatrix &pi) {
    if (p.size() != pi.k()) {
        throw InputError("distribution has " + std::to_string(p.size()) + " outcomes but the portrait expects " +
                         std::to_string(pi.k()));
    }
    require_distribution(p, "distribution");
    std::array<double, 2> q{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            q[i] += pi(i, j) * p[j];
        }
    }
    return q;
}

PortraitDistribution product_portrait(
    std::span<const double> joint, const PortraitMatrix &pi_a, const PortraitMatrix &pi_b) {
    std::size_t ka = pi_a.k();
    std::size_t kb = pi_b.k();
    if (joint.size() != ka * kb) {
        throw InputError("joint distribution has " + std::to_string(joint.size()) + " outcomes, portraits expect " +
                         std::to_string(ka) + " x " + std::to_string(kb));
    }
    require_distribution(joint, "joint distribution");
    PortraitDistribution w;
    for (std::size_t ma = 0; ma < ka; ++ma) {
        for (std::size_t mb = 0; mb < kb; ++mb) {
            double p = joint[ma * kb + mb];
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    w.probs[2 * i + j] += pi_a(i, ma) * pi_b(j, mb) * p;
                }
            }
        }
    }
    return w;
}

std::vector<double> regroup_for_cut(std::span<const double> probs, const CutSpec &cut) {
    std::size_t n = cut.num_qubits();
    if (probs.size() != (std::size_t{1} << n)) {
        throw InputError("distribution size does not match the " + std::to_string(n) + "-qubit cut");
    }
    std::size_t kb = std::size_t{1} << cut.right().size();
    std::vector<double> out(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        std::size_t a = 0;
        std::size_t b = 0;
        for (std::size_t q : cut.left()) {
            a = (a << 1) | ((i >> (n - 1 - q)) & 1);
        }
        for (std::size_t q : cut.right()) {
            b = (b << 1) | ((i >> (n - 1 - q)) & 1);
        }
        out[a * kb + b] = probs[i];
    }
    return out;
}

PortraitDistribution smolin_parity_portrait(const TomogramVector &t) {
    if (t.probs.size() != 16) {
        throw InputError("Smolin parity portrait needs a 16-entry four-qubit tomogram vector");
    }
    static const PortraitMatrix kParity = PortraitMatrix::parity(3);
    return product_portrait(t.probs, PortraitMatrix::identity(), kParity);
}

double smolin_portrait_closed(double m_a, int p, std::span<const Direction, 4> dirs) {
    if (m_a != 0.5 && m_a != -0.5) {
        throw InputError("m_A must be +1/2 or -1/2");
    }
    if (p != 1 && p != -1) {
        throw InputError("portrait label p must be +1 or -1");
    }
    return 0.25 + m_a * p * 0.5 * four_way_overlap(dirs);
}

}  // namespace tomo
