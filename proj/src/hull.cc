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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ldcoh/linalg.h"

namespace ldcoh {

namespace {

constexpr double kGapRel = 1e-13;
constexpr double kGapAbs = 1e-24;
constexpr double kWeightTol = 1e-14;

// Minimizes |Q a| subject to sum(a) = 1 over the columns of q (no sign
// constraint) via the bordered normal equations.
Eigen::VectorXd affine_min_norm(const Eigen::MatrixXd &q) {
    const Eigen::Index k = q.cols();
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
    kkt.topLeftCorner(k, k) = q.transpose() * q;
    kkt.block(0, k, k, 1).setOnes();
    kkt.block(k, 0, 1, k).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    rhs(k) = 1.0;
    Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    Eigen::VectorXd a = sol.head(k);
    double s = a.sum();
    if (std::abs(s) > 0) {
        a /= s;
    }
    return a;
}

}  // namespace

HullProjection nearest_point_in_hull(const Eigen::MatrixXd &points, const Eigen::VectorXd &target) {
    const Eigen::Index n = points.cols();
    if (n == 0) {
        throw ContractError("nearest_point_in_hull: no points");
    }
    if (points.rows() != target.size()) {
        throw ContractError("nearest_point_in_hull: dimension mismatch");
    }
    Eigen::MatrixXd q = points.colwise() - target;
    double max_norm = q.colwise().norm().maxCoeff();

    Eigen::Index start = 0;
    q.colwise().squaredNorm().minCoeff(&start);
    std::vector<Eigen::Index> corral{start};
    Eigen::VectorXd lambda = Eigen::VectorXd::Ones(1);
    Eigen::VectorXd x = q.col(start);

    auto gather = [&](const std::vector<Eigen::Index> &idx) {
        Eigen::MatrixXd sub(q.rows(), static_cast<Eigen::Index>(idx.size()));
        for (size_t i = 0; i < idx.size(); ++i) {
            sub.col(static_cast<Eigen::Index>(i)) = q.col(idx[i]);
        }
        return sub;
    };

    int iterations = 0;
    const int max_major = 50 * static_cast<int>(n) + 100;
    for (; iterations < max_major; ++iterations) {
        double xx = x.squaredNorm();
        if (xx <= kGapAbs) {
            break;
        }
        Eigen::VectorXd dots = q.transpose() * x;
        Eigen::Index j = 0;
        double min_dot = dots.minCoeff(&j);
        if (xx - min_dot <= kGapRel * std::sqrt(xx) * max_norm + kGapAbs) {
            break;
        }
        if (std::find(corral.begin(), corral.end(), j) != corral.end()) {
            break;
        }
        corral.push_back(j);
        lambda.conservativeResize(lambda.size() + 1);
        lambda(lambda.size() - 1) = 0.0;

        // Minor cycles: move toward the affine minimizer until it lies in the relative interior.
        while (true) {
            Eigen::VectorXd alpha = affine_min_norm(gather(corral));
            if ((alpha.array() > kWeightTol).all()) {
                lambda = alpha;
                break;
            }
            double theta = 1.0;
            for (Eigen::Index i = 0; i < alpha.size(); ++i) {
                if (alpha(i) <= kWeightTol) {
                    double denom = lambda(i) - alpha(i);
                    if (denom > 0) {
                        theta = std::min(theta, lambda(i) / denom);
                    }
                }
            }
            lambda = theta * alpha + (1.0 - theta) * lambda;
            std::vector<Eigen::Index> kept;
            std::vector<double> kept_w;
            for (Eigen::Index i = 0; i < lambda.size(); ++i) {
                if (lambda(i) > kWeightTol) {
                    kept.push_back(corral[static_cast<size_t>(i)]);
                    kept_w.push_back(lambda(i));
                }
            }
            if (kept.empty()) {
                // Rounding collapsed every weight; restart from the newest vertex.
                kept.push_back(j);
                kept_w.push_back(1.0);
            }
            corral = kept;
            lambda = Eigen::Map<Eigen::VectorXd>(kept_w.data(), static_cast<Eigen::Index>(kept_w.size()));
            lambda /= lambda.sum();
            if (corral.size() == 1) {
                break;
            }
        }
        x = gather(corral) * lambda;
    }

    HullProjection out;
    out.weights = Eigen::VectorXd::Zero(n);
    for (size_t i = 0; i < corral.size(); ++i) {
        out.weights(corral[i]) += lambda(static_cast<Eigen::Index>(i));
    }
    out.weights = out.weights.cwiseMax(0.0);
    out.weights /= out.weights.sum();
    out.point = points * out.weights;
    out.distance = (out.point - target).norm();
    out.iterations = iterations;
    return out;
}

Eigen::VectorXd project_onto_simplex(const Eigen::VectorXd &v) {
    const Eigen::Index n = v.size();
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumulative = 0;
    double tau = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
        cumulative += u[static_cast<size_t>(k)];
        double t = (cumulative - 1.0) / static_cast<double>(k + 1);
        if (u[static_cast<size_t>(k)] - t > 0) {
            tau = t;
        }
    }
    return (v.array() - tau).cwiseMax(0.0).matrix();
}

}  // namespace ldcoh
