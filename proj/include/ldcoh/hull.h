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


#ifndef LDCOH_HULL_H
#define LDCOH_HULL_H

#include <Eigen/Dense>

namespace ldcoh {

/// Nearest point of conv{points.col(i)} to a target, in the Euclidean metric.
struct HullProjection {
    Eigen::VectorXd weights;  // convex weights over the columns
    Eigen::VectorXd point;    // points * weights
    double distance = 0;      // |point - target|
    int iterations = 0;
};

/// Wolfe's minimum-norm-point algorithm applied to the translated points
/// (points - target). Terminates at a corral whose optimality gap
/// |x|^2 - min_j <x, q_j> is below a relative threshold, so the returned
/// distance is exact up to rounding.
HullProjection nearest_point_in_hull(const Eigen::MatrixXd &points, const Eigen::VectorXd &target);

/// Euclidean projection onto the probability simplex.
Eigen::VectorXd project_onto_simplex(const Eigen::VectorXd &v);

}  // namespace ldcoh

#endif
