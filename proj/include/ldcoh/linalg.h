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

#ifndef LDCOH_LINALG_H
#define LDCOH_LINALG_H

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ldcoh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Default numerical tolerances. Every operation taking a tolerance accepts an override.
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kNormTol = 1e-12;

/// Raised when an argument violates an operation's precondition.
class ContractError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by qubit-only operations handed a state of another dimension.
class UnsupportedDimension : public ContractError {
   public:
    using ContractError::ContractError;
};

/// Raised when inputs are well-formed but the requested computation is degenerate.
class DomainError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

bool is_square(const ComplexMatrix &a);
bool is_finite(const ComplexMatrix &a);
bool is_hermitian(const ComplexMatrix &a, double tol = kHermitianTol);

/// Eigenvalues of a Hermitian matrix in ascending order.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &a, double tol = kHermitianTol);
double min_eigenvalue(const ComplexMatrix &a, double tol = kHermitianTol);
double max_eigenvalue(const ComplexMatrix &a, double tol = kHermitianTol);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix &a, double tol = kHermitianTol);

/// True iff the smallest eigenvalue of the Hermitian matrix is >= -tol.
bool is_psd(const ComplexMatrix &a, double tol = kPsdTol);

/// Positive semidefinite square root of a PSD matrix (negative rounding noise is clipped).
ComplexMatrix psd_sqrt(const ComplexMatrix &a);

ComplexMatrix outer(const ComplexVector &ket);

/// Real coordinates of a Hermitian matrix in an orthonormal basis of the
/// Hermitian operators: diagonal entries, then sqrt(2) Re and sqrt(2) Im of
/// each upper off-diagonal entry. Preserves the Frobenius inner product.
Eigen::VectorXd hermitian_coordinates(const ComplexMatrix &a);

/// Unit-norm vector in C^dim.
class PureState {
   public:
    explicit PureState(ComplexVector amplitudes, double tol = kNormTol);
    /// Rescales any nonzero vector to unit norm.
    static PureState normalized(const ComplexVector &v);

    int dim() const {
        return static_cast<int>(amplitudes_.size());
    }
    const ComplexVector &amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](int k) const {
        return amplitudes_[k];
    }
    ComplexMatrix projector() const {
        return outer(amplitudes_);
    }
    Complex inner(const PureState &other) const {
        return amplitudes_.dot(other.amplitudes_);
    }

   private:
    ComplexVector amplitudes_;
};

struct DensityTolerances {
    double hermitian = kHermitianTol;
    double trace = kHermitianTol;
    double psd = kPsdTol;
};

/// Unit-trace positive semidefinite Hermitian operator. The stored matrix is
/// exactly Hermitian (symmetrized after validation).
class DensityMatrix {
   public:
    explicit DensityMatrix(const ComplexMatrix &m, DensityTolerances tol = {});
    explicit DensityMatrix(const PureState &psi);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const {
        return static_cast<int>(matrix_.rows());
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }

   private:
    ComplexMatrix matrix_;
};

/// Qubit state in Bloch coordinates: rho = (I + x X + y Y + z Z) / 2.
struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;

    Eigen::Vector3d vec() const {
        return {x, y, z};
    }
    static BlochVector from(const Eigen::Vector3d &v) {
        return {v.x(), v.y(), v.z()};
    }
    double norm() const {
        return vec().norm();
    }
};

BlochVector bloch_of(const DensityMatrix &rho);
BlochVector bloch_of(const PureState &psi);
DensityMatrix state_of(const BlochVector &b, double tol = kPsdTol);
/// Pure qubit state with the given (unit) Bloch direction.
PureState pure_state_of(const Eigen::Vector3d &direction);

namespace pauli {
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
}  // namespace pauli

/// Common qubit states: |0>, |1>, |+>_x, |->_x, |+>_y, |->_y.
namespace qubit {
PureState zero();
PureState one();
PureState plus_x();
PureState minus_x();
PureState plus_y();
PureState minus_y();
}  // namespace qubit

}  // namespace ldcoh

#endif
