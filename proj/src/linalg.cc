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

#include "ldcoh/linalg.h"

#include <algorithm>
#include <cmath>

namespace ldcoh {

namespace {

void require_hermitian(const ComplexMatrix &a, double tol, const char *what) {
    if (!is_square(a)) {
        throw ContractError(std::string(what) + ": matrix is not square");
    }
    if (!is_hermitian(a, tol)) {
        throw ContractError(std::string(what) + ": matrix is not Hermitian");
    }
}

Eigen::VectorXd eigenvalues_unchecked(const ComplexMatrix &a) {
    ComplexMatrix h = (a + a.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

}  // namespace

bool is_square(const ComplexMatrix &a) {
    return a.rows() == a.cols() && a.rows() > 0;
}

bool is_finite(const ComplexMatrix &a) {
    return a.allFinite();
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    if (!is_square(a) || !is_finite(a)) {
        return false;
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &a, double tol) {
    require_hermitian(a, tol, "hermitian_eigenvalues");
    return eigenvalues_unchecked(a);
}

double min_eigenvalue(const ComplexMatrix &a, double tol) {
    return hermitian_eigenvalues(a, tol)(0);
}

double max_eigenvalue(const ComplexMatrix &a, double tol) {
    auto ev = hermitian_eigenvalues(a, tol);
    return ev(ev.size() - 1);
}

double trace_norm(const ComplexMatrix &a, double tol) {
    require_hermitian(a, tol, "trace_norm");
    return eigenvalues_unchecked(a).cwiseAbs().sum();
}

bool is_psd(const ComplexMatrix &a, double tol) {
    require_hermitian(a, kHermitianTol, "is_psd");
    return eigenvalues_unchecked(a)(0) >= -tol;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &a) {
    require_hermitian(a, kHermitianTol, "psd_sqrt");
    ComplexMatrix h = (a + a.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    Eigen::VectorXd root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().adjoint();
}

ComplexMatrix outer(const ComplexVector &ket) {
    return ket * ket.adjoint();
}

Eigen::VectorXd hermitian_coordinates(const ComplexMatrix &a) {
    const Eigen::Index d = a.rows();
    Eigen::VectorXd v(d * d);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
        v(k++) = a(i, i).real();
    }
    const double root2 = std::sqrt(2.0);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) {
            v(k++) = root2 * a(i, j).real();
            v(k++) = root2 * a(i, j).imag();
        }
    }
    return v;
}

PureState::PureState(ComplexVector amplitudes, double tol) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw ContractError("PureState: empty amplitude vector");
    }
    if (!amplitudes_.allFinite()) {
        throw ContractError("PureState: non-finite amplitude");
    }
    if (std::abs(amplitudes_.norm() - 1.0) > tol) {
        throw ContractError("PureState: amplitudes are not unit norm");
    }
}

PureState PureState::normalized(const ComplexVector &v) {
    double n = v.norm();
    if (!(n > 0) || !std::isfinite(n)) {
        throw ContractError("PureState: cannot normalize a zero or non-finite vector");
    }
    return PureState(v / n);
}

DensityMatrix::DensityMatrix(const ComplexMatrix &m, DensityTolerances tol) {
    if (!is_square(m)) {
        throw ContractError("DensityMatrix: matrix is not square");
    }
    if (!is_hermitian(m, tol.hermitian)) {
        throw ContractError("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(m.trace() - Complex(1.0)) > tol.trace) {
        throw ContractError("DensityMatrix: trace is not 1");
    }
    matrix_ = (m + m.adjoint()) / 2.0;
    if (eigenvalues_unchecked(matrix_)(0) < -tol.psd) {
        throw ContractError("DensityMatrix: matrix has a negative eigenvalue");
    }
}

DensityMatrix::DensityMatrix(const PureState &psi) : matrix_(psi.projector()) {
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim <= 0) {
        throw ContractError("DensityMatrix: dimension must be positive");
    }
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

namespace pauli {
ComplexMatrix X() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
ComplexMatrix Y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}
ComplexMatrix Z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}
}  // namespace pauli

BlochVector bloch_of(const DensityMatrix &rho) {
    if (rho.dim() != 2) {
        throw UnsupportedDimension("bloch_of: Bloch coordinates exist only for qubits");
    }
    const auto &m = rho.matrix();
    return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

BlochVector bloch_of(const PureState &psi) {
    return bloch_of(DensityMatrix(psi));
}

DensityMatrix state_of(const BlochVector &b, double tol) {
    if (b.norm() > 1.0 + tol) {
        throw ContractError("state_of: Bloch vector lies outside the unit ball");
    }
    ComplexMatrix m = ComplexMatrix::Identity(2, 2) + b.x * pauli::X() + b.y * pauli::Y() + b.z * pauli::Z();
    return DensityMatrix(m / 2.0, DensityTolerances{kHermitianTol, kHermitianTol, tol});
}

PureState pure_state_of(const Eigen::Vector3d &direction) {
    Eigen::Vector3d r = direction.normalized();
    double theta = std::acos(std::clamp(r.z(), -1.0, 1.0));
    double phi = std::atan2(r.y(), r.x());
    ComplexVector v(2);
    v << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
    return PureState::normalized(v);
}

namespace qubit {
namespace {
PureState make(Complex a, Complex b) {
    ComplexVector v(2);
    v << a, b;
    return PureState::normalized(v);
}
}  // namespace
PureState zero() {
    return make(1, 0);
}
PureState one() {
    return make(0, 1);
}
PureState plus_x() {
    return make(1, 1);
}
PureState minus_x() {
    return make(1, -1);
}
PureState plus_y() {
    return make(1, Complex(0, 1));
}
PureState minus_y() {
    return make(1, Complex(0, -1));
}
}  // namespace qubit

}  // namespace ldcoh
