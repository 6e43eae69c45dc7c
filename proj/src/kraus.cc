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


#include "ldcoh/kraus.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ldcoh {

KrausOperator::KrausOperator(ComplexMatrix m) : m_(std::move(m)) {
    if (!is_square(m_)) {
        throw ContractError("KrausOperator: matrix must be square");
    }
    if (!m_.allFinite()) {
        throw ContractError("KrausOperator: non-finite entry");
    }
}

double KrausOperator::operator_norm() const {
    Eigen::JacobiSVD<ComplexMatrix> svd(m_);
    return svd.singularValues()(0);
}

QubitCircleBasis::QubitCircleBasis(double theta, std::array<double, 3> phis) : theta_(theta), phis_(phis) {
    if (!(theta > 0 && theta < std::numbers::pi)) {
        throw ContractError("QubitCircleBasis: theta must lie strictly between 0 and pi");
    }
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            double gap = std::remainder(phis_[static_cast<size_t>(a)] - phis_[static_cast<size_t>(b)],
                                        2 * std::numbers::pi);
            if (std::abs(gap) < 1e-12) {
                throw ContractError("QubitCircleBasis: azimuths must be pairwise distinct");
            }
        }
    }
}

PureState QubitCircleBasis::state(int k) const {
    ComplexVector v(2);
    v << std::cos(theta_ / 2), std::polar(std::sin(theta_ / 2), phis_[static_cast<size_t>(k)]);
    return PureState(v);
}

GeneralBasis QubitCircleBasis::basis() const {
    return GeneralBasis({state(0), state(1), state(2)});
}

Theorem1Report theorem1_check(const KrausOperator &k, const QubitCircleBasis &basis, double tol) {
    if (k.dim() != 2) {
        throw ContractError("theorem1_check: Kraus operator must be 2x2");
    }
    const ComplexMatrix &m = k.matrix();
    const Complex k11 = m(0, 0), k12 = m(0, 1), k21 = m(1, 0), k22 = m(1, 1);
    const double t = std::tan(basis.theta() / 2);
    const double ct = 1.0 / t;
    const auto &phi = basis.phis();
    const Complex e1 = std::polar(1.0, phi[0]), e2 = std::polar(1.0, phi[1]), e3 = std::polar(1.0, phi[2]);

    Theorem1Report r;
    r.delta = std::conj(k11) * k12 * t * t - std::conj(k21) * k22;
    r.abc[0] = std::norm(k11) - std::norm(k22) + std::norm(k12) * t * t - std::norm(k21) * ct * ct +
               2 * ct * (r.delta * e3).real();
    r.abc[1] = 2 * ct * (r.delta * (e1 - e3)).real();
    r.abc[2] = 2 * ct * (r.delta * (e2 - e3)).real();

    // Relative threshold keeps the verdict invariant under K -> lambda K.
    const double scale = m.squaredNorm();
    r.satisfied = std::all_of(r.abc.begin(), r.abc.end(), [&](double v) { return std::abs(v) <= tol * scale; });

    const Complex top = std::conj(k11) * k12;
    const Complex bottom = std::conj(k21) * k22;
    const double tiny = 1e-14 * std::max(scale, 1e-300);
    if (std::abs(top) > tiny && std::abs(bottom) > tiny) {
        const Complex kappa = top / bottom;
        r.kappa_form = std::norm(k11) - std::norm(k22) + std::norm(k12) / kappa - std::norm(k21) * kappa;
    }
    return r;
}

VertexImageReport vertex_image_check(const KrausOperator &k, const GeneralBasis &basis, double tol) {
    if (k.dim() != basis.dim()) {
        throw ContractError("vertex_image_check: Kraus operator and basis dimensions differ");
    }
    VertexImageReport r;
    r.residuals.assign(static_cast<size_t>(basis.size()), 0.0);
    const ComplexMatrix &m = k.matrix();
    if (m.cwiseAbs().maxCoeff() == 0.0) {
        r.zero_operator = true;
        return r;
    }
    const double trace_floor = 1e-12 * m.squaredNorm();
    for (int i = 0; i < basis.size(); ++i) {
        ComplexVector image = m * basis[i].amplitudes();
        double weight = image.squaredNorm();
        if (weight <= trace_floor) {
            continue;
        }
        DensityMatrix normalized(PureState::normalized(image));
        MembershipResult mr = membership(normalized, basis, tol);
        r.residuals[static_cast<size_t>(i)] = mr.residual;
        if (!mr.is_free && r.incoherent) {
            r.incoherent = false;
            r.failing_vertex = i;
        }
    }
    return r;
}

double completeness_residual(const std::vector<KrausOperator> &channel) {
    if (channel.empty()) {
        throw ContractError("completeness_residual: empty channel");
    }
    const int d = channel.front().dim();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto &k : channel) {
        if (k.dim() != d) {
            throw ContractError("completeness_residual: Kraus operators have different dimensions");
        }
        sum += k.matrix().adjoint() * k.matrix();
    }
    return (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

DensityMatrix channel_apply(const std::vector<KrausOperator> &channel, const DensityMatrix &rho, double tol) {
    if (completeness_residual(channel) > tol) {
        throw ContractError("channel_apply: Kraus operators are not trace preserving");
    }
    if (channel.front().dim() != rho.dim()) {
        throw ContractError("channel_apply: channel and state dimensions differ");
    }
    ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (const auto &k : channel) {
        out += k.matrix() * rho.matrix() * k.matrix().adjoint();
    }
    // The output trace deviates from 1 by at most the completeness residual.
    return DensityMatrix(out, DensityTolerances{1e-12, 10 * tol + 1e-12, kPsdTol});
}

KrausOperator sample_ginibre_kraus(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            double re = g(rng);
            double im = g(rng);
            m(i, j) = Complex(re, im);
        }
    }
    KrausOperator k(m);
    return KrausOperator(m / k.operator_norm());
}

KrausOperator circle_permutation_kraus(const QubitCircleBasis &basis, const std::array<int, 3> &perm, Complex scale) {
    std::array<int, 3> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2}) {
        throw ContractError("circle_permutation_kraus: perm is not a permutation of {0,1,2}");
    }
    auto vec = [&](int k) { return basis.state(k).amplitudes(); };
    // Coordinates of the third state in terms of the first two, before and after.
    auto coords = [&](const ComplexVector &a, const ComplexVector &b, const ComplexVector &c) {
        ComplexMatrix ab(2, 2);
        ab << a, b;
        return Eigen::Vector2cd(ab.partialPivLu().solve(c));
    };
    Eigen::Vector2cd src = coords(vec(0), vec(1), vec(2));
    Eigen::Vector2cd dst = coords(vec(perm[0]), vec(perm[1]), vec(perm[2]));
    ComplexMatrix from(2, 2), to(2, 2);
    from << vec(0), vec(1);
    to << (dst(0) / src(0)) * vec(perm[0]), (dst(1) / src(1)) * vec(perm[1]);
    ComplexMatrix m = to * from.inverse();
    KrausOperator k(m);
    return KrausOperator(scale * m / k.operator_norm());
}

std::vector<KrausOperator> sample_incoherent_channel(const GeneralBasis &basis, std::mt19937_64 &rng) {
    const int d = basis.dim();
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, basis.size() - 1);
    std::normal_distribution<double> g(0.0, 1.0);

    ComplexMatrix gin(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            double re = g(rng);
            double im = g(rng);
            gin(i, j) = Complex(re, im);
        }
    }
    ComplexMatrix frame = gin.householderQr().householderQ();

    std::vector<KrausOperator> channel;
    const double keep = u(rng);
    channel.emplace_back(std::sqrt(keep) * ComplexMatrix::Identity(d, d));
    for (int j = 0; j < d; ++j) {
        int a = pick(rng);
        int b = pick(rng);
        double q = u(rng);
        ComplexVector e = frame.col(j);
        channel.emplace_back(std::sqrt((1 - keep) * q) * basis[a].amplitudes() * e.adjoint());
        channel.emplace_back(std::sqrt((1 - keep) * (1 - q)) * basis[b].amplitudes() * e.adjoint());
    }
    return channel;
}

}  // namespace ldcoh
