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

#include "tomoportrait/cut.h"

#include <algorithm>
#include <cctype>

#include "tomoportrait/errors.h"

namespace tomo {

CutSpec::CutSpec(std::vector<std::size_t> left, std::vector<std::size_t> right, std::size_t num_qubits)
    : left_(std::move(left)), right_(std::move(right)), num_qubits_(num_qubits) {
    if (left_.empty() || right_.empty()) {
        throw InputError("both sides of a cut must be nonempty");
    }
    std::sort(left_.begin(), left_.end());
    std::sort(right_.begin(), right_.end());
    std::vector<int> count(num_qubits, 0);
    for (const auto *side : {&left_, &right_}) {
        for (std::size_t q : *side) {
            if (q >= num_qubits) {
                throw InputError("cut names qubit " + std::to_string(q) + " of a " + std::to_string(num_qubits) +
                                 "-qubit register");
            }
            ++count[q];
        }
    }
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if (count[q] != 1) {
            throw InputError("cut must list every qubit exactly once; qubit " + std::string(1, char('A' + q)) +
                             (count[q] ? " repeats" : " is missing"));
        }
    }
}

CutSpec CutSpec::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos) {
        throw InputError("cut '" + std::string(text) + "' must have the form LEFT:RIGHT, e.g. A:BCD");
    }
    auto letters = [&](std::string_view side) {
        std::vector<std::size_t> out;
        for (char c : side) {
            char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (u < 'A' || u >= static_cast<char>('A' + kMaxQubits)) {
                throw InputError("cut '" + std::string(text) + "' contains '" + std::string(1, c) +
                                 "'; qubits are letters A-F");
            }
            out.push_back(static_cast<std::size_t>(u - 'A'));
        }
        return out;
    };
    auto left = letters(text.substr(0, colon));
    auto right = letters(text.substr(colon + 1));
    std::size_t n = left.size() + right.size();
    return CutSpec(std::move(left), std::move(right), n);
}

std::vector<CutSpec> CutSpec::all_cuts(std::size_t num_qubits) {
    if (num_qubits < 2 || num_qubits > kMaxQubits) {
        throw InputError("cuts need 2-6 qubits");
    }
    std::vector<CutSpec> out;
    std::size_t rest = num_qubits - 1;
    for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << rest); ++mask) {
        std::vector<std::size_t> left{0};
        std::vector<std::size_t> right;
        for (std::size_t q = 1; q < num_qubits; ++q) {
            ((mask >> (q - 1)) & 1 ? left : right).push_back(q);
        }
        out.emplace_back(std::move(left), std::move(right), num_qubits);
    }
    return out;
}

std::string CutSpec::to_string() const {
    std::string out;
    for (std::size_t q : left_) {
        out += static_cast<char>('A' + q);
    }
    out += ':';
    for (std::size_t q : right_) {
        out += static_cast<char>('A' + q);
    }
    return out;
}

}  // namespace tomo
