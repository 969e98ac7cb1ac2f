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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tomo {

/// Bipartition of an n-qubit register into two nonempty sides.
///
/// Text form uses letters A-F for qubits 0-5 separated by a colon, e.g.
/// "A:BCD" or "AB:CD". Both sides are stored in ascending qubit order.
class CutSpec {
   public:
    /// Throws InputError unless left and right are nonempty, disjoint and
    /// together cover 0..num_qubits-1.
    CutSpec(std::vector<std::size_t> left, std::vector<std::size_t> right, std::size_t num_qubits);

    static CutSpec parse(std::string_view text);
    /// Every bipartition with qubit A on the left side.
    static std::vector<CutSpec> all_cuts(std::size_t num_qubits);

    const std::vector<std::size_t> &left() const { return left_; }
    const std::vector<std::size_t> &right() const { return right_; }
    std::size_t num_qubits() const { return num_qubits_; }
    std::string to_string() const;

    bool operator==(const CutSpec &) const = default;

    static constexpr std::size_t kMaxQubits = 6;

   private:
    std::vector<std::size_t> left_;
    std::vector<std::size_t> right_;
    std::size_t num_qubits_;
};

}  // namespace tomo
