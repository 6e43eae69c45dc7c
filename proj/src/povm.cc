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


#include "ldcoh/povm.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ldcoh/lp.h"

namespace ldcoh {

double Povm::completeness_residual() const {
    if (effects.empty()) {
        throw ContractError("Povm: no effects");
    }
    const Eigen::Index d = effects.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto &e : effects) {
        sum += e;
    }
    return (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

namespace {

struct MaxMinWeights {
    bool feasible = false;
    Eigen::VectorXd weights;
    double min_weight = 0;
};

// maximize t  s.t.  sum_i p_i coords(P_i) = coords(I/d),  p_i >= t,
// written with p_i = s_i + t+ - t- and s, t+, t- >= 0.
MaxMinWeights max_min_weights(const GeneralBasis &basis) {
    const Eigen::MatrixXd &v = basis.projector_coordinates();
    const Eigen::Index n = v.cols();
    const Eigen::Index rows = v.rows();
    Eigen::VectorXd row_sum = v.rowwise().sum();
    Eigen::MatrixXd a(rows, n + 2);
    a << v, row_sum, -row_sum;
    Eigen::VectorXd b = hermitian_coordinates(ComplexMatrix::Identity(basis.dim(), basis.dim()) / basis.dim());
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 2);
    c(n) = 1.0;
    c(n + 1) = -1.0;
    LpResult lp = maximize_lp(c, a, b);
    MaxMinWeights out;
    if (lp.status != LpStatus::kOptimal) {
        return out;
    }
    double t = lp.x(n) - lp.x(n + 1);
    out.feasible = true;
    out.weights = lp.x.head(n).array() + t;
    out.min_weight = out.weights.minCoeff();
    return out;
}

}  // namespace

PovmBuild build_povm(const GeneralBasis &basis) {
    if (!is_spanning(basis).spanning) {
        throw ContractError("build_povm: basis does not span the space");
    }
    const int d = basis.dim();
    ComplexMatrix centroid = ComplexMatrix::Zero(d, d);
    for (const auto &s : basis.states()) {
        centroid += s.projector();
    }
    centroid /= static_cast<double>(basis.size());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(centroid);

    // Adding the whole centroid eigenbasis always succeeds: I/d - eps*centroid
    // is diagonal in that basis with positive entries for small eps.
    GeneralBasis current = basis;
    PovmBuild out;
    MaxMinWeights w;
    for (int added = 0;; ++added) {
        w = max_min_weights(current);
        if (w.feasible && w.min_weight > kPositivityFloor) {
            break;
        }
        if (added == d) {
            throw DomainError("build_povm: could not place I/d strictly inside the extended hull");
        }
        PureState extra = PureState::normalized(es.eigenvectors().col(added));
        out.extension.push_back(extra);
        current = current.with(extra);
    }

    out.weights.assign(w.weights.data(), w.weights.data() + w.weights.size());
    out.min_weight = w.min_weight;
    for (int i = 0; i < current.size(); ++i) {
        ComplexMatrix p = current[i].projector();
        double dp = d * w.weights(i);
        out.povm.measurement_ops.push_back(std::sqrt(dp) * p);
        out.povm.effects.push_back(dp * p);
        if (i >= basis.size()) {
            out.povm.ignored.insert(i);
        }
    }
    return out;
}

GeneratedState generate_incoherent(const Povm &povm, const BlockingProfile &blocking, const DensityMatrix &input) {
    const int kept = povm.size() - static_cast<int>(povm.ignored.size());
    if (static_cast<int>(blocking.size()) != kept) {
        throw ContractError("generate_incoherent: blocking profile must cover exactly the non-ignored outcomes");
    }
    const Eigen::Index d = input.dim();
    ComplexMatrix acc = ComplexMatrix::Zero(d, d);
    double total = 0;
    bool renormalized = false;
    size_t k = 0;
    for (int i = 0; i < povm.size(); ++i) {
        if (povm.ignored.count(i)) {
            continue;
        }
        const double q = blocking[k++];
        const ComplexMatrix &a = povm.measurement_ops[static_cast<size_t>(i)];
        if (a.rows() != d) {
            throw ContractError("generate_incoherent: measurement and state dimensions differ");
        }
        ComplexMatrix out = a * input.matrix() * a.adjoint();
        double tr = out.trace().real();
        if (tr <= 1e-14) {
            renormalized = renormalized || q > 0;
            continue;
        }
        acc += (q / tr) * out;
        total += q;
    }
    if (total <= 0) {
        throw DomainError("generate_incoherent: every weighted outcome has zero probability");
    }
    return {DensityMatrix(acc / total, DensityTolerances{1e-12, 1e-10, kPsdTol}), renormalized};
}

namespace {

// min ||m r + f||^2 over the unit ball (trust-region subproblem, solved
// through the eigendecomposition of m^T m).
Eigen::Vector3d ball_least_squares(const Eigen::MatrixXd &m, const Eigen::VectorXd &f) {
    Eigen::Matrix3d h = m.transpose() * m;
    Eigen::Vector3d g = m.transpose() * f;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(h);
    const Eigen::Vector3d &ev = es.eigenvalues();
    const Eigen::Matrix3d &u = es.eigenvectors();
    Eigen::Vector3d gu = u.transpose() * g;
    auto step = [&](double lambda) {
        Eigen::Vector3d c;
        for (int k = 0; k < 3; ++k) {
            double den = ev(k) + lambda;
            c(k) = den > 1e-300 ? -gu(k) / den : 0.0;
        }
        return Eigen::Vector3d(u * c);
    };
    if (ev(0) > 1e-14) {
        Eigen::Vector3d r = step(0);
        if (r.norm() <= 1.0) {
            return r;
        }
    }
    double lo = std::max(0.0, -ev(0)) + 1e-15;
    Eigen::Vector3d r_lo = step(lo);
    if (r_lo.norm() < 1.0) {
        // Hard case: pad along the softest direction up to the boundary.
        double tau = std::sqrt(std::max(0.0, 1.0 - r_lo.squaredNorm()));
        return r_lo + tau * u.col(0);
    }
    double hi = lo + 1.0;
    while (step(hi).norm() > 1.0) {
        hi *= 2.0;
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (step(mid).norm() > 1.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return step(hi);
}

}  // namespace

PovmCounterexample povm_coherence_counterexample(double theta) {
    if (!(theta > std::numbers::pi / 2 && theta < std::numbers::pi)) {
        throw ContractError("povm_coherence_counterexample: theta must lie in (pi/2, pi)");
    }
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const double cot = c / s;

    PovmCounterexample out;
    ComplexVector chi0(2), chi1(2), chi2(2);
    chi0 << 1, 0;
    chi1 << c, s;
    chi2 << c, -s;
    out.chis = {PureState(chi0), PureState(chi1), PureState(chi2)};
    const double b0 = std::sqrt(1.0 - cot * cot);
    const double b12 = std::sqrt(0.5 / (s * s));
    out.measurement_ops = {b0 * out.chis[0].projector(), b12 * out.chis[1].projector(),
                           b12 * out.chis[2].projector()};
    ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
    for (const auto &b : out.measurement_ops) {
        sum += b.adjoint() * b;
    }
    out.completeness_residual = (sum - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff();

    // Real linear map (trace, x, y, z) -> (Re, Im) of the three overlaps, with rho = (t I + r.sigma)/2.
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
    const std::array<ComplexMatrix, 4> generators{ComplexMatrix::Identity(2, 2), pauli::X(), pauli::Y(), pauli::Z()};
    Eigen::MatrixXd lin(6, 4);
    for (int col = 0; col < 4; ++col) {
        for (size_t p = 0; p < pairs.size(); ++p) {
            const auto &bra = out.chis[static_cast<size_t>(pairs[p].first)].amplitudes();
            const auto &ket = out.chis[static_cast<size_t>(pairs[p].second)].amplitudes();
            Complex v = bra.dot(generators[static_cast<size_t>(col)] * ket) / 2.0;
            lin(static_cast<Eigen::Index>(2 * p), col) = v.real();
            lin(static_cast<Eigen::Index>(2 * p + 1), col) = v.imag();
        }
    }
    Eigen::Vector3d r = ball_least_squares(lin.rightCols(3), lin.col(0));
    out.minimizer = BlochVector::from(r);
    out.constraint_residual_min = (lin.rightCols(3) * r + lin.col(0)).norm();
    out.free_state_exists = out.constraint_residual_min <= 1e-10;
    return out;
}

}  // namespace ldcoh
