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

#include <cmath>
#include <limits>
#include <vector>

#include "ldcoh/linalg.h"

namespace ldcoh {

namespace {

// Tableau layout: rows 0..m-1 are constraints, row m is the objective row
// holding reduced costs (we minimize -c, so entering columns have negative cost).
struct Tableau {
    Eigen::MatrixXd t;
    std::vector<Eigen::Index> basis;
    Eigen::Index m;
    Eigen::Index cols;  // structural + artificial columns (rhs excluded)

    double &rhs(Eigen::Index r) {
        return t(r, cols);
    }

    void pivot(Eigen::Index r, Eigen::Index c) {
        t.row(r) /= t(r, c);
        for (Eigen::Index i = 0; i <= m; ++i) {
            if (i != r && t(i, c) != 0.0) {
                t.row(i) -= t(i, c) * t.row(r);
            }
        }
        basis[static_cast<size_t>(r)] = c;
    }

    // Returns false when the objective is unbounded along an entering column.
    bool run(Eigen::Index allowed_cols, double tol) {
        const int max_iter = 5000;
        for (int it = 0; it < max_iter; ++it) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < allowed_cols; ++j) {
                if (t(m, j) < -tol) {
                    enter = j;  // Bland: lowest index
                    break;
                }
            }
            if (enter < 0) {
                return true;
            }
            Eigen::Index leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < m; ++i) {
                if (t(i, enter) > tol) {
                    double ratio = rhs(i) / t(i, enter);
                    if (ratio < best - tol ||
                        (std::abs(ratio - best) <= tol && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
                        best = ratio;
                        leave = i;
                    }
                }
            }
            if (leave < 0) {
                return false;
            }
            pivot(leave, enter);
        }
        throw DomainError("maximize_lp: iteration limit reached");
    }
};

}  // namespace

LpResult maximize_lp(const Eigen::VectorXd &c, const Eigen::MatrixXd &a, const Eigen::VectorXd &b, double tol) {
    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();
    if (c.size() != n || b.size() != m) {
        throw ContractError("maximize_lp: inconsistent dimensions");
    }

    Tableau tab;
    tab.m = m;
    tab.cols = n + m;
    tab.t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
    tab.basis.resize(static_cast<size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) {
        double sign = b(i) < 0 ? -1.0 : 1.0;
        tab.t.block(i, 0, 1, n) = sign * a.row(i);
        tab.t(i, n + i) = 1.0;
        tab.rhs(i) = sign * b(i);
        tab.basis[static_cast<size_t>(i)] = n + i;
    }

    // Phase 1: minimize the sum of artificials.
    for (Eigen::Index i = 0; i < m; ++i) {
        tab.t.row(m) -= tab.t.row(i);
    }
    for (Eigen::Index i = 0; i < m; ++i) {
        tab.t(m, n + i) = 0.0;
    }
    tab.run(n + m, tol);
    double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
    if (-tab.rhs(m) > 1e3 * tol * scale) {
        return {LpStatus::kInfeasible, {}, 0};
    }
    // Drive remaining artificials out of the basis where possible; rows where
    // that fails are redundant and stay pinned at zero.
    for (Eigen::Index i = 0; i < m; ++i) {
        if (tab.basis[static_cast<size_t>(i)] >= n) {
            Eigen::Index col = -1;
            tab.t.row(i).head(n).cwiseAbs().maxCoeff(&col);
            if (std::abs(tab.t(i, col)) > 1e3 * tol) {
                tab.pivot(i, col);
            }
        }
    }

    // Phase 2 on the original objective; artificial columns may not re-enter.
    tab.t.row(m).setZero();
    tab.t.block(m, 0, 1, n) = -c.transpose();
    for (Eigen::Index i = 0; i < m; ++i) {
        Eigen::Index bc = tab.basis[static_cast<size_t>(i)];
        if (tab.t(m, bc) != 0.0) {
            tab.t.row(m) -= tab.t(m, bc) * tab.t.row(i);
        }
    }
    if (!tab.run(n, tol)) {
        return {LpStatus::kUnbounded, {}, 0};
    }

    // Recompute the basic solution from the original data for accuracy.
    std::vector<Eigen::Index> structural;
    for (Eigen::Index i = 0; i < m; ++i) {
        if (tab.basis[static_cast<size_t>(i)] < n) {
            structural.push_back(tab.basis[static_cast<size_t>(i)]);
        }
    }
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    if (!structural.empty()) {
        Eigen::MatrixXd basis_cols(m, static_cast<Eigen::Index>(structural.size()));
        for (size_t k = 0; k < structural.size(); ++k) {
            basis_cols.col(static_cast<Eigen::Index>(k)) = a.col(structural[k]);
        }
        Eigen::VectorXd xb = basis_cols.colPivHouseholderQr().solve(b);
        for (size_t k = 0; k < structural.size(); ++k) {
            x(structural[k]) = std::max(0.0, xb(static_cast<Eigen::Index>(k)));
        }
    }
    return {LpStatus::kOptimal, x, c.dot(x)};
}

}  // namespace ldcoh
