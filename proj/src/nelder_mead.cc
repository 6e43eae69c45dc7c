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


#include "ldcoh/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace ldcoh {

NelderMeadResult nelder_mead_minimize(const std::function<double(const Eigen::VectorXd &)> &f,
                                      const Eigen::VectorXd &x0, const NelderMeadOptions &options) {
    const Eigen::Index n = x0.size();
    std::vector<Eigen::VectorXd> pts(static_cast<size_t>(n + 1), x0);
    for (Eigen::Index i = 0; i < n; ++i) {
        pts[static_cast<size_t>(i + 1)](i) += options.initial_step;
    }
    std::vector<double> vals(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        vals[i] = f(pts[i]);
    }
    std::vector<size_t> order(pts.size());

    int it = 0;
    for (; it < options.max_iterations; ++it) {
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
        const size_t best = order.front();
        const size_t worst = order.back();
        const size_t second = order[order.size() - 2];

        double diameter = 0;
        for (const auto &p : pts) {
            diameter = std::max(diameter, (p - pts[best]).cwiseAbs().maxCoeff());
        }
        if (std::abs(vals[worst] - vals[best]) <= options.f_tol && diameter <= options.x_tol) {
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i != worst) {
                centroid += pts[i];
            }
        }
        centroid /= static_cast<double>(n);

        Eigen::VectorXd reflected = centroid + (centroid - pts[worst]);
        double fr = f(reflected);
        if (fr < vals[best]) {
            Eigen::VectorXd expanded = centroid + 2.0 * (centroid - pts[worst]);
            double fe = f(expanded);
            if (fe < fr) {
                pts[worst] = expanded;
                vals[worst] = fe;
            } else {
                pts[worst] = reflected;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = reflected;
            vals[worst] = fr;
            continue;
        }
        // Outside contraction when the reflection beat the worst point, inside otherwise.
        bool outside = fr < vals[worst];
        Eigen::VectorXd contracted = outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                                             : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
        double fc = f(contracted);
        if (fc < (outside ? fr : vals[worst])) {
            pts[worst] = contracted;
            vals[worst] = fc;
            continue;
        }
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i != best) {
                pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
                vals[i] = f(pts[i]);
            }
        }
    }

    size_t best = static_cast<size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    return {pts[best], vals[best], it};
}

}  // namespace ldcoh
