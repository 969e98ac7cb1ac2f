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

#include <cstdint>
#include <random>

#include "tomoportrait/linalg.h"

namespace tomo {

/// Seeded generator shared by the optimizer and the test suites.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Real-valued draws are derived here from raw 64-bit words instead
/// of through <random> distributions, whose algorithms are
/// implementation-defined, so every seed reproduces bit-for-bit across
/// toolchains.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Standard normal via Box-Muller.
    double normal();
    /// Uniform on the unit sphere.
    Direction direction();

   private:
    std::mt19937_64 engine_;
};

}  // namespace tomo
