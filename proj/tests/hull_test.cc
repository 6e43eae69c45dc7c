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


#include "ldcoh/hull.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace ldcoh;

TEST(hull, point_inside_has_zero_distance) {
    Eigen::MatrixXd pts(2, 3);
    pts << 0, 1, 0, 0, 0, 1;
    auto r = nearest_point_in_hull(pts, Eigen::Vector2d(0.2, 0.2));
    EXPECT_NEAR(r.distance, 0, 1e-14);
    EXPECT_NEAR(r.weights.sum(), 1, 1e-14);
    EXPECT_GE(r.weights.minCoeff(), 0);
}

TEST(hull, projection_onto_edge) {
    Eigen::MatrixXd pts(2, 3);
    pts << 0, 1, 0, 0, 0, 1;
    auto r = nearest_point_in_hull(pts, Eigen::Vector2d(1, 1));
    EXPECT_NEAR(r.distance, std::sqrt(0.5), 1e-14);
    EXPECT_NEAR(r.point(0), 0.5, 1e-14);
    EXPECT_NEAR(r.weights(0), 0, 1e-14);
}

TEST(hull, matches_support_enumeration) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> count(1, 7);
    for (int t = 0; t < 500; ++t) {
        int n = count(rng);
        std::vector<Eigen::Vector3d> pts;
        Eigen::MatrixXd cols(3, n);
        for (int i = 0; i < n; ++i) {
            pts.push_back(oracle::ball_point(rng));
            cols.col(i) = pts.back();
        }
        Eigen::Vector3d x = 1.5 * oracle::ball_point(rng);
        auto r = nearest_point_in_hull(cols, x);
        EXPECT_NEAR(r.distance, oracle::polytope_distance_exact(pts, x), 1e-12);
        EXPECT_LT((cols * r.weights - r.point).norm(), 1e-12);
    }
}

TEST(hull, duplicated_and_collinear_points) {
    Eigen::MatrixXd pts(3, 5);
    pts.col(0) << 1, 0, 0;
    pts.col(1) << 1, 0, 0;
    pts.col(2) << 2, 0, 0;
    pts.col(3) << 3, 0, 0;
    pts.col(4) << 3, 0, 0;
    auto r = nearest_point_in_hull(pts, Eigen::Vector3d(2.5, 1, 0));
    EXPECT_NEAR(r.distance, 1, 1e-14);
}

TEST(hull, project_onto_simplex) {
    Eigen::VectorXd v(3);
    v << 0.5, 0.5, 0.5;
    Eigen::VectorXd p = project_onto_simplex(v);
    EXPECT_NEAR(p(0), 1.0 / 3, 1e-15);
    v << 2, 0, -1;
    p = project_onto_simplex(v);
    EXPECT_NEAR(p(0), 1, 1e-15);
    EXPECT_EQ(p(2), 0);

    std::mt19937_64 rng(12);
    std::normal_distribution<double> g;
    for (int t = 0; t < 100; ++t) {
        Eigen::VectorXd w(5);
        for (int i = 0; i < 5; ++i) {
            w(i) = g(rng);
        }
        Eigen::VectorXd q = project_onto_simplex(w);
        EXPECT_NEAR(q.sum(), 1, 1e-12);
        EXPECT_GE(q.minCoeff(), 0);
        // Optimality: (w - q) . (s - q) <= 0 for every vertex s.
        for (int i = 0; i < 5; ++i) {
            Eigen::VectorXd s = Eigen::VectorXd::Unit(5, i);
            EXPECT_LE((w - q).dot(s - q), 1e-12);
        }
    }
}
