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


#ifndef LDCOH_LP_H
#define LDCOH_LP_H

#include <Eigen/Dense>

namespace ldcoh {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
    LpStatus status = LpStatus::kInfeasible;
    Eigen::VectorXd x;
    double objective = 0;
};

/// Dense two-phase primal simplex with Bland's rule for
///   maximize c^T x  subject to  A x = b,  x >= 0.
/// Redundant equality rows are tolerated. Intended for the tens-of-variables
/// problems that arise here, not for large sparse programs.
LpResult maximize_lp(const Eigen::VectorXd &c, const Eigen::MatrixXd &a, const Eigen::VectorXd &b, double tol = 1e-11);

}  // namespace ldcoh

#endif
