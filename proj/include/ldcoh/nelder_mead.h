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


#ifndef LDCOH_NELDER_MEAD_H
#define LDCOH_NELDER_MEAD_H

#include <functional>

#include <Eigen/Dense>

namespace ldcoh {

struct NelderMeadOptions {
    int max_iterations = 200;
    double f_tol = 1e-14;  // stop when the simplex value spread falls below this
    double x_tol = 1e-12;  // ... and its diameter below this
    double initial_step = 0.1;
};

struct NelderMeadResult {
    Eigen::VectorXd x;
    double value = 0;
    int iterations = 0;
};

/// Derivative-free local minimization (standard reflection/expansion/
/// contraction/shrink coefficients 1, 2, 1/2, 1/2).
NelderMeadResult nelder_mead_minimize(const std::function<double(const Eigen::VectorXd &)> &f,
                                      const Eigen::VectorXd &x0, const NelderMeadOptions &options = {});

}  // namespace ldcoh

#endif
