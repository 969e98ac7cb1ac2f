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

#include "tomoportrait/serialize.h"

#include "gtest/gtest.h"
#include "test_util.h"
#include "tomoportrait/errors.h"

using namespace tomo;

TEST(Serialize, density_round_trip_is_bit_exact) {
    Rng rng(151);
    for (int trial = 0; trial < 20; ++trial) {
        DensityMatrix rho = trial == 0 ? smolin_pauli() : tomo::testing::random_density(1 + trial % 4, rng);
        std::string text = json::from_density(rho).dump();
        DensityMatrix back = json::to_density(nlohmann::json::parse(text));
        EXPECT_EQ(back, rho);
    }
}

TEST(Serialize, density_layout) {
    auto j = json::from_density(DensityMatrix::from_pure(bell_state(BellKind::kPhiPlus)));
    EXPECT_EQ(j["type"], "density_matrix");
    EXPECT_EQ(j["n_qubits"], 2);
    EXPECT_EQ(j["dim"], 4);
    EXPECT_EQ(j["qubit_order"], json::kQubitOrder);
    ASSERT_EQ(j["entries"].size(), 16u);
    EXPECT_EQ(j["entries"][3][0].get<double>(), j["entries"][0][0].get<double>());  // row 0, col 3
    EXPECT_EQ(j["entries"][1][0].get<double>(), 0.0);
}

TEST(Serialize, density_parse_errors) {
    using nlohmann::json;
    EXPECT_THROW(tomo::json::to_density(json::object()), InputError);
    EXPECT_THROW(tomo::json::to_density(json{{"entries", {1, 0, 0}}}), InputError);
    EXPECT_THROW(tomo::json::to_density(json{{"entries", {1, 0, 0, 1}}}), InputError);  // trace 2
    EXPECT_THROW(tomo::json::to_density(json{{"entries", {"a", 0, 0, 1}}}), InputError);
    EXPECT_THROW(tomo::json::to_density(json{{"dim", 4}, {"entries", {0.5, 0, 0, 0.5}}}), InputError);
    EXPECT_NO_THROW(tomo::json::to_density(json{{"entries", {0.5, 0, 0, 0.5}}}));
}

TEST(Serialize, direction_tolerance) {
    using nlohmann::json;
    EXPECT_EQ(tomo::json::to_direction(json{0, 0, 1 + 5e-10}), Direction::z_axis());
    EXPECT_THROW(tomo::json::to_direction(json{0, 0, 1.01}), InputError);
    EXPECT_THROW(tomo::json::to_direction(json{0, 1}), InputError);
}

TEST(Serialize, tomogram_and_portrait_round_trip) {
    Rng rng(157);
    auto dirs = tomo::testing::random_directions(3, rng);
    TomogramVector t = tomogram_vector(tomo::testing::random_density(3, rng), dirs);
    auto j = json::from_tomogram(t);
    EXPECT_EQ(j["outcome_order"], kOutcomeOrder);
    EXPECT_EQ(j["outcomes"][1], "++-");
    TomogramVector back = json::to_tomogram(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.probs, t.probs);
    EXPECT_EQ(back.directions, t.directions);

    PortraitMatrix pi({0.25, 1, 0}, {0.75, 0, 1});
    EXPECT_EQ(json::to_portrait(nlohmann::json::parse(json::from_portrait(pi).dump())), pi);
    EXPECT_THROW(json::to_portrait(nlohmann::json{{"entries", {{0.5}, {0.6}}}}), InputError);
}

TEST(Serialize, settings_round_trip) {
    Rng rng(163);
    auto v = tomo::testing::random_directions(8, rng);
    ChshSettings s{{v[0]}, {v[1]}, {v[2], v[3], v[4]}, {v[5], v[6], v[7]}};
    EXPECT_EQ(json::to_settings(nlohmann::json::parse(json::from_settings(s).dump())), s);
}
