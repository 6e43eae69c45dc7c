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


#include "ldcoh/basis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ldcoh/hull.h"
#include "ldcoh/nelder_mead.h"

namespace ldcoh {

GeneralBasis::GeneralBasis(std::vector<PureState> states) : dim_(0), states_(std::move(states)) {
    if (states_.empty()) {
        throw ContractError("GeneralBasis: empty basis");
    }
    dim_ = states_.front().dim();
    coords_.resize(dim_ * dim_, size());
    for (int i = 0; i < size(); ++i) {
        if (states_[static_cast<size_t>(i)].dim() != dim_) {
            throw ContractError("GeneralBasis: states have different dimensions");
        }
        coords_.col(i) = hermitian_coordinates(states_[static_cast<size_t>(i)].projector());
    }
}

GeneralBasis GeneralBasis::with(const PureState &extra) const {
    auto s = states_;
    s.push_back(extra);
    return GeneralBasis(std::move(s));
}

namespace bases {
GeneralBasis computational(int dim) {
    std::vector<PureState> s;
    for (int k = 0; k < dim; ++k) {
        s.emplace_back(ComplexVector::Unit(dim, k));
    }
    return GeneralBasis(std::move(s));
}

GeneralBasis pauli_eigenstates() {
    return GeneralBasis({qubit::zero(), qubit::one(), qubit::plus_x(), qubit::minus_x(), qubit::plus_y(),
                         qubit::minus_y()});
}
}  // namespace bases

SpanInfo is_spanning(const GeneralBasis &basis, double rank_tol) {
    ComplexMatrix stacked(basis.dim(), basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        stacked.col(i) = basis[i].amplitudes();
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(stacked);
    const auto &sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > rank_tol * sv(0)) {
            ++rank;
        }
    }
    SpanInfo info;
    info.rank = rank;
    info.spanning = rank == basis.dim();
    info.independent = info.spanning && basis.size() == basis.dim();
    return info;
}

ProbabilityVector::ProbabilityVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw ContractError("ProbabilityVector: empty");
    }
    double total = 0;
    for (double &w : weights_) {
        if (!std::isfinite(w) || w < -1e-12) {
            throw ContractError("ProbabilityVector: negative or non-finite weight");
        }
        w = std::max(w, 0.0);
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw ContractError("ProbabilityVector: weights do not sum to 1");
    }
}

namespace {

void require_spanning(const GeneralBasis &basis, const char *what) {
    if (!is_spanning(basis).spanning) {
        throw ContractError(std::string(what) + ": basis does not span the space");
    }
}

void require_matching(const DensityMatrix &rho, const GeneralBasis &basis, const char *what) {
    if (rho.dim() != basis.dim()) {
        throw ContractError(std::string(what) + ": state and basis dimensions differ");
    }
}

std::vector<double> to_std(const Eigen::VectorXd &v) {
    return {v.data(), v.data() + v.size()};
}

ComplexMatrix mixture(const GeneralBasis &basis, const Eigen::VectorXd &p) {
    ComplexMatrix sigma = ComplexMatrix::Zero(basis.dim(), basis.dim());
    for (int i = 0; i < basis.size(); ++i) {
        if (p(i) != 0.0) {
            sigma += p(i) * basis[i].projector();
        }
    }
    return sigma;
}

// Value and gradient (w.r.t. p) of the smoothed trace norm
// sum_k sqrt(l_k^2 + mu^2) of X = rho - sigma(p), plus the dual matrix
// U = X (X^2 + mu^2)^(-1/2) with operator norm below 1.
struct Smoothed {
    double value;
    double exact;
    Eigen::VectorXd grad;
    ComplexMatrix dual;
};

Smoothed smoothed_trace_norm(const ComplexMatrix &rho, const GeneralBasis &basis, const Eigen::VectorXd &p,
                             double mu) {
    ComplexMatrix x = rho - mixture(basis, p);
    x = ((x + x.adjoint()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(x);
    const auto &l = es.eigenvalues();
    Eigen::VectorXd root = (l.array().square() + mu * mu).sqrt();
    Smoothed s;
    s.value = root.sum();
    s.exact = l.cwiseAbs().sum();
    Eigen::VectorXd ratio = l.array() / root.array();
    s.dual = es.eigenvectors() * ratio.asDiagonal() * es.eigenvectors().adjoint();
    s.grad.resize(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        const auto &psi = basis[i].amplitudes();
        s.grad(i) = -psi.dot(s.dual * psi).real();
    }
    return s;
}

double dual_bound(const ComplexMatrix &rho, const GeneralBasis &basis, const ComplexMatrix &u) {
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < basis.size(); ++i) {
        const auto &psi = basis[i].amplitudes();
        worst = std::max(worst, psi.dot(u * psi).real());
    }
    return (u * rho).trace().real() - worst;
}

TraceCoherence trace_coherence_general(const DensityMatrix &rho, const GeneralBasis &basis,
                                       const MembershipResult &frob, const TraceCoherenceOptions &opt) {
    const ComplexMatrix &r = rho.matrix();
    Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(frob.nearest_weights.data(), basis.size());

    TraceCoherence best;
    best.weights = frob.nearest_weights;
    best.value = trace_norm(r - mixture(basis, p), 1e-9);
    best.lower_bound = 0;

    double mu = std::max(1e-3, 0.1 * best.value);
    const double mu_floor = 1e-11;
    double step = 1.0;
    int it = 0;
    int stage_it = 0;
    double window_best = best.value;
    Eigen::VectorXd y = p;
    Eigen::VectorXd p_prev = p;
    double momentum = 1.0;

    while (it < opt.max_iterations) {
        ++it;
        ++stage_it;
        Smoothed sy = smoothed_trace_norm(r, basis, y, mu);
        // Backtracking on the smoothed objective.
        Eigen::VectorXd next;
        Smoothed sn;
        while (true) {
            next = project_onto_simplex(y - step * sy.grad);
            sn = smoothed_trace_norm(r, basis, next, mu);
            Eigen::VectorXd diff = next - y;
            if (sn.value <= sy.value + sy.grad.dot(diff) + diff.squaredNorm() / (2.0 * step) + 1e-15 ||
                step < 1e-16) {
                break;
            }
            step *= 0.5;
        }
        double next_momentum = (1.0 + std::sqrt(1.0 + 4.0 * momentum * momentum)) / 2.0;
        y = next + ((momentum - 1.0) / next_momentum) * (next - p_prev);
        p_prev = next;
        momentum = next_momentum;
        step *= 1.25;

        best.lower_bound = std::max(best.lower_bound, dual_bound(r, basis, sn.dual));
        if (sn.exact < best.value) {
            best.value = sn.exact;
            best.weights = to_std(next);
        }
        if (best.value - best.lower_bound <= opt.gap_tol * std::max(1.0, best.value)) {
            break;
        }
        // Tighten the smoothing once the current stage stalls.
        if (stage_it % 200 == 0) {
            bool stalled = window_best - best.value <= opt.relative_change * std::max(1.0, best.value);
            window_best = best.value;
            if (stalled) {
                if (mu <= mu_floor) {
                    break;
                }
                mu = std::max(mu_floor, mu / 10.0);
                momentum = 1.0;
                y = Eigen::Map<const Eigen::VectorXd>(best.weights.data(), basis.size());
                p_prev = y;
                stage_it = 0;
            }
        }
    }
    best.iterations = it;
    best.lower_bound = std::min(best.lower_bound, best.value);
    return best;
}

}  // namespace

MembershipResult membership(const DensityMatrix &rho, const GeneralBasis &basis, double tol) {
    require_matching(rho, basis, "membership");
    require_spanning(basis, "membership");
    HullProjection proj = nearest_point_in_hull(basis.projector_coordinates(), hermitian_coordinates(rho.matrix()));
    MembershipResult out;
    out.residual = proj.distance;
    out.nearest_weights = to_std(proj.weights);
    out.is_free = proj.distance <= tol;
    if (out.is_free) {
        out.weights = ProbabilityVector(out.nearest_weights);
    }
    return out;
}

TraceCoherence coherence_trace_detailed(const DensityMatrix &rho, const GeneralBasis &basis,
                                        const TraceCoherenceOptions &options) {
    require_matching(rho, basis, "coherence_trace");
    require_spanning(basis, "coherence_trace");
    TraceCoherence out;
    if (basis.dim() == 2) {
        // Trace distance between qubit states equals the Euclidean distance of their Bloch vectors.
        Eigen::MatrixXd pts(3, basis.size());
        for (int i = 0; i < basis.size(); ++i) {
            pts.col(i) = bloch_of(basis[i]).vec();
        }
        HullProjection proj = nearest_point_in_hull(pts, bloch_of(rho).vec());
        out.weights = to_std(proj.weights);
        // The Frobenius residual of a qubit difference is its Bloch distance / sqrt(2).
        out.value = proj.distance / std::numbers::sqrt2 <= options.membership_tol ? 0.0 : proj.distance;
        out.lower_bound = out.value;
        out.iterations = proj.iterations;
        return out;
    }
    MembershipResult frob = membership(rho, basis, options.membership_tol);
    if (frob.is_free) {
        out.weights = frob.nearest_weights;
        out.value = 0;
        out.lower_bound = 0;
        return out;
    }
    return trace_coherence_general(rho, basis, frob, options);
}

double coherence_trace(const DensityMatrix &rho, const GeneralBasis &basis, const TraceCoherenceOptions &options) {
    return coherence_trace_detailed(rho, basis, options).value;
}

Distance parse_distance(std::string_view name) {
    if (name == "trace" || name == "trace-norm") {
        return Distance::kTraceNorm;
    }
    if (name == "frobenius" || name == "hilbert-schmidt") {
        return Distance::kFrobenius;
    }
    throw ContractError("unknown distance selector '" + std::string(name) + "'");
}

std::string_view distance_name(Distance d) {
    return d == Distance::kTraceNorm ? "trace" : "frobenius";
}

double coherence_generic(const DensityMatrix &rho, const GeneralBasis &basis, Distance distance) {
    switch (distance) {
        case Distance::kTraceNorm:
            return coherence_trace(rho, basis);
        case Distance::kFrobenius: {
            MembershipResult m = membership(rho, basis);
            return m.is_free ? 0.0 : m.residual;
        }
    }
    throw ContractError("coherence_generic: unknown distance selector");
}

std::vector<Eigen::Vector3d> fibonacci_sphere(int n) {
    if (n <= 0) {
        throw ContractError("fibonacci_sphere: resolution must be positive");
    }
    std::vector<Eigen::Vector3d> out;
    out.reserve(static_cast<size_t>(n));
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        double z = 1.0 - (2.0 * i + 1.0) / n;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden_angle * i;
        out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return out;
}

namespace {

double pure_coherence(const Eigen::Vector3d &dir, const GeneralBasis &basis) {
    return coherence_trace(state_of(BlochVector::from(dir.normalized())), basis);
}

}  // namespace

std::vector<ScanPoint> coherence_grid(const GeneralBasis &basis, int resolution) {
    if (basis.dim() != 2) {
        throw UnsupportedDimension("coherence_grid: the Bloch-sphere scan needs a qubit basis");
    }
    require_spanning(basis, "coherence_grid");
    std::vector<ScanPoint> out;
    for (const auto &v : fibonacci_sphere(resolution)) {
        out.push_back({BlochVector::from(v), pure_coherence(v, basis)});
    }
    return out;
}

std::vector<ScanPoint> max_coherent_scan(const GeneralBasis &basis, const ScanOptions &options) {
    std::vector<ScanPoint> grid = coherence_grid(basis, options.resolution);
    double grid_max = 0;
    for (const auto &p : grid) {
        grid_max = std::max(grid_max, p.coherence);
    }

    std::vector<ScanPoint> candidates;
    for (const auto &p : grid) {
        if (options.refine_band > 0 && p.coherence >= grid_max - options.refine_band) {
            // Ascend in a tangent-plane chart centered on the grid point.
            Eigen::Vector3d r0 = p.point.vec();
            Eigen::Vector3d helper = std::abs(r0.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
            Eigen::Vector3d e1 = r0.cross(helper).normalized();
            Eigen::Vector3d e2 = r0.cross(e1);
            auto chart = [&](const Eigen::VectorXd &uv) { return Eigen::Vector3d(r0 + uv(0) * e1 + uv(1) * e2); };
            NelderMeadOptions nm;
            nm.max_iterations = options.refine_iterations;
            nm.initial_step = 0.02;
            nm.f_tol = 1e-15;
            nm.x_tol = 1e-10;
            auto res = nelder_mead_minimize(
                [&](const Eigen::VectorXd &uv) { return -pure_coherence(chart(uv), basis); }, Eigen::Vector2d::Zero(),
                nm);
            if (-res.value > p.coherence) {
                candidates.push_back({BlochVector::from(chart(res.x).normalized()), -res.value});
            } else {
                candidates.push_back(p);
            }
        } else if (options.refine_band <= 0 && p.coherence >= grid_max - options.max_tol) {
            candidates.push_back(p);
        }
    }

    double best = 0;
    for (const auto &c : candidates) {
        best = std::max(best, c.coherence);
    }
    std::vector<ScanPoint> out;
    for (const auto &c : candidates) {
        if (c.coherence >= best - options.max_tol) {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace ldcoh
