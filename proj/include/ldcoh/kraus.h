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


#ifndef LDCOH_KRAUS_H
#define LDCOH_KRAUS_H

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "ldcoh/basis.h"
#include "ldcoh/linalg.h"

namespace ldcoh {

class KrausOperator {
   public:
    explicit KrausOperator(ComplexMatrix m);
    int dim() const {
        return static_cast<int>(m_.rows());
    }
    const ComplexMatrix &matrix() const {
        return m_;
    }
    /// Largest singular value.
    double operator_norm() const;

   private:
    ComplexMatrix m_;
};

/// Three distinct pure qubit states on a common latitude of the Bloch sphere:
/// cos(theta/2)|0> + e^{i phi_k} sin(theta/2)|1>.
class QubitCircleBasis {
   public:
    QubitCircleBasis(double theta, std::array<double, 3> phis);
    double theta() const {
        return theta_;
    }
    const std::array<double, 3> &phis() const {
        return phis_;
    }
    PureState state(int k) const;
    GeneralBasis basis() const;

   private:
    double theta_;
    std::array<double, 3> phis_;
};

/// Outcome of the algebraic necessary condition for a single qubit Kraus
/// operator to keep the circle-basis free set invariant under post-selection.
/// Requiring diag(K rho K^dagger) to stay proportional to (cos^2, sin^2) for
/// every free rho gives A + B p1 + C p2 = 0 on the simplex, hence A = B = C = 0.
struct Theorem1Report {
    bool satisfied = false;
    Complex delta;                 // K11* K12 tan^2(theta/2) - K21* K22
    std::array<double, 3> abc{};   // A, B, C
    /// |K11|^2 - |K22|^2 + |K12|^2 / kappa - |K21|^2 kappa with
    /// kappa = K11* K12 / (K21* K22); absent when kappa is singular or zero.
    std::optional<Complex> kappa_form;
};

Theorem1Report theorem1_check(const KrausOperator &k, const QubitCircleBasis &basis, double tol = 1e-8);

struct VertexImageReport {
    bool incoherent = true;
    std::optional<int> failing_vertex;
    bool zero_operator = false;  // vacuously incoherent
    /// Frobenius residual of each normalized vertex image (0 for skipped vertices).
    std::vector<double> residuals;
};

/// Exact IO test for one Kraus operator: the normalized images of the free
/// set are the convex hull of the normalized vertex images, so it suffices
/// that every vertex with nonzero output trace maps to a free state.
VertexImageReport vertex_image_check(const KrausOperator &k, const GeneralBasis &basis, double tol = kMembershipTol);

/// Max-entry deviation of sum_i K_i^dagger K_i from the identity.
double completeness_residual(const std::vector<KrausOperator> &channel);

DensityMatrix channel_apply(const std::vector<KrausOperator> &channel, const DensityMatrix &rho,
                            double tol = 1e-10);

/// 2x2 (or dim x dim) complex Ginibre matrix rescaled to unit operator norm.
KrausOperator sample_ginibre_kraus(int dim, std::mt19937_64 &rng);

/// The Kraus operator (unique up to scale) mapping circle-basis state k to
/// state perm[k]; its normalized action permutes the free triangle.
KrausOperator circle_permutation_kraus(const QubitCircleBasis &basis, const std::array<int, 3> &perm, Complex scale);

/// Random trace-preserving channel whose Kraus operators are all incoherent
/// for any basis: a weighted identity branch plus measure-and-prepare branches
/// |psi_a><e_j| onto basis vertices.
std::vector<KrausOperator> sample_incoherent_channel(const GeneralBasis &basis, std::mt19937_64 &rng);

}  // namespace ldcoh

#endif
