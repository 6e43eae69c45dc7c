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


#include "ldcoh/lp.h"

#include "gtest/gtest.h"

using namespace ldcoh;

TEST(lp, small_optimum) {
    // max x + y  s.t.  x + 2y + s1 = 4,  3x + y + s2 = 6.
    Eigen::MatrixXd a(2, 4);
    a << 1, 2, 1, 0, 3, 1, 0, 1;
    Eigen::VectorXd b(2), c(4);
    b << 4, 6;
    c << 1, 1, 0, 0;
    auto r = maximize_lp(c, a, b);
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    EXPECT_NEAR(r.objective, 2.8, 1e-12);
    EXPECT_NEAR(r.x(0), 1.6, 1e-12);
    EXPECT_NEAR(r.x(1), 1.2, 1e-12);
}

TEST(lp, infeasible) {
    Eigen::MatrixXd a(2, 2);
    a << 1, 1, 1, 1;
    Eigen::VectorXd b(2), c(2);
    b << 1, 2;
    c << 1, 0;
    EXPECT_EQ(maximize_lp(c, a, b).status, LpStatus::kInfeasible);
}

TEST(lp, unbounded) {
    Eigen::MatrixXd a(1, 2);
    a << 1, -1;
    Eigen::VectorXd b(1), c(2);
    b << 1;
    c << 1, 0;
    EXPECT_EQ(maximize_lp(c, a, b).status, LpStatus::kUnbounded);
}

TEST(lp, redundant_rows_and_negative_rhs) {
    Eigen::MatrixXd a(3, 3);
    a << 1, 1, 1, 2, 2, 2, -1, 0, 0;
    Eigen::VectorXd b(3), c(3);
    b << 1, 2, -0.25;
    c << 0, 1, 2;
    auto r = maximize_lp(c, a, b);
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    EXPECT_NEAR(r.objective, 1.5, 1e-12);
    EXPECT_NEAR(r.x(0), 0.25, 1e-12);
}

TEST(lp, degenerate_cycling_example) {
    // Beale's example, which cycles under the textbook pivot rule.
    Eigen::MatrixXd a(3, 7);
    a << 0.25, -60, -0.04, 9, 1, 0, 0, 0.5, -90, -0.02, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1;
    Eigen::VectorXd b(3), c(7);
    b << 0, 0, 1;
    c << 0.75, -150, 0.02, -6, 0, 0, 0;
    auto r = maximize_lp(c, a, b);
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    EXPECT_NEAR(r.objective, 0.05, 1e-12);
}
