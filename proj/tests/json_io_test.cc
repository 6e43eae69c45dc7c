// Copyright 2026 The ldcoh Authors
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


#include "ldcoh/json_io.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace ldcoh;
using ldcoh::io::json;

TEST(json_io, parse_errors_carry_position) {
    try {
        io::parse("{\n  \"dim\": 2,\n  oops\n}", "basis.json");
        FAIL();
    } catch (const io::InputError &e) {
        EXPECT_NE(std::string(e.what()).find("basis.json:3:"), std::string::npos) << e.what();
    }
    EXPECT_THROW(io::read_file("/nonexistent/file.json"), io::InputError);
}

TEST(json_io, schema_errors_carry_pointer) {
    try {
        io::basis_from(json::parse(R"({"dim": 2, "states": [[[1, 0], [0, 0]], [[0, 0], "x"]]})"));
        FAIL();
    } catch (const io::InputError &e) {
        EXPECT_NE(std::string(e.what()).find("/states/1/1"), std::string::npos) << e.what();
    }
    EXPECT_THROW(io::basis_from(json::parse(R"({"dim": 3, "states": [[[1, 0], [0, 0]]]})")), io::InputError);
    EXPECT_THROW(io::state_from(json::parse(R"({"amplitudes": [[1, 0], [1, 0]]})")), io::InputError);
    EXPECT_THROW(io::config_from(json::parse(R"({"alpha": [1, 0]})")), io::InputError);
}

TEST(json_io, basis_round_trip) {
    auto b = bases::pauli_eigenstates();
    auto back = io::basis_from(io::basis_to_json(b));
    ASSERT_EQ(back.size(), b.size());
    for (int i = 0; i < b.size(); ++i) {
        EXPECT_EQ(back[i].amplitudes(), b[i].amplitudes());
    }
}

TEST(json_io, state_forms) {
    std::mt19937_64 rng(61);
    DensityMatrix rho(oracle::random_density(3, rng));
    auto back = io::state_from(io::state_to_json(rho));
    EXPECT_EQ(back.matrix(), rho.matrix());
    auto pure = io::state_from(json::parse(R"({"amplitudes": [[0.6, 0], [0, 0.8]]})"));
    EXPECT_NEAR(pure.matrix()(1, 0).imag(), 0.48, 1e-15);
    auto bare = io::state_from(json::parse(R"([[[0.5, 0], [0, 0]], [[0, 0], [0.5, 0]]])"));
    EXPECT_NEAR(bare.matrix()(1, 1).real(), 0.5, 1e-15);
}

TEST(json_io, kraus_and_circle) {
    auto list = io::kraus_from(json::parse(R"([[[[1, 0], [0, 0]], [[0, 0], [1, 0]]]])"));
    ASSERT_EQ(list.size(), 1u);
    EXPECT_EQ(list[0].matrix(), ComplexMatrix(ComplexMatrix::Identity(2, 2)));
    auto wrapped = io::kraus_from(io::kraus_to_json(list));
    EXPECT_EQ(wrapped[0].matrix(), list[0].matrix());
    auto circle = io::circle_from(json::parse(R"({"theta": 1.0, "phis": [0, 2, 4]})"));
    EXPECT_EQ(circle.theta(), 1.0);
    EXPECT_THROW(io::circle_from(json::parse(R"({"theta": 0, "phis": [0, 2, 4]})")), io::InputError);
}

TEST(json_io, config_round_trip) {
    DualityConfig cfg;
    cfg.alpha = Complex(0.6, 0);
    cfg.beta = Complex(0, 0.8);
    cfg.R = 0.25;
    auto back = io::config_from(io::config_to_json(cfg));
    EXPECT_EQ(back.alpha, cfg.alpha);
    EXPECT_EQ(back.beta, cfg.beta);
    EXPECT_EQ(back.R, cfg.R);
    auto r = io::result_to_json(run_duality(back));
    EXPECT_TRUE(r.contains("sum"));
}
