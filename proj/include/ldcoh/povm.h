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


#ifndef LDCOH_POVM_H
#define LDCOH_POVM_H

#include <set>
#include <vector>

#include "ldcoh/basis.h"
#include "ldcoh/linalg.h"

namespace ldcoh {

/// Generalized measurement with effects E_i = A_i^dagger A_i. Outcomes listed
/// in `ignored` are discarded before the forgetting stage.
struct Povm {
    std::vector<ComplexMatrix> effects;
    std::vector<ComplexMatrix> measurement_ops;
    std::set<int> ignored;

    int size() const {
        return static_cast<int>(measurement_ops.size());
    }
    /// Max-entry deviation of the summed effects from the identity.
    double completeness_residual() const;
};

struct PovmBuild {
    Povm povm;
    std::vector<PureState> extension;   // states appended to make I/d strictly interior
    std::vector<double> weights;        // p~ over original + extension states
    double min_weight = 0;
};

/// Minimum weight an outcome must carry for it to count as occurring.
inline constexpr double kPositivityFloor = 1e-6;

/// Measurement whose normalized outcomes on I/d are the basis projectors:
/// A_i = sqrt(d p~_i) |psi_i><psi_i| with sum_i p~_i |psi_i><psi_i| = I/d and
/// every p~_i strictly positive. The weights maximize min_i p~_i (a linear
/// program). When that optimum is not above kPositivityFloor the set is
/// extended by eigenvectors of the basis centroid, smallest eigenvalue first,
/// and the extension outcomes are marked ignored.
PovmBuild build_povm(const GeneralBasis &basis);

/// Blocking profile over the non-ignored outcomes.
using BlockingProfile = ProbabilityVector;

struct GeneratedState {
    DensityMatrix state;
    /// True when some outcome had zero probability and the remaining weights were renormalized.
    bool renormalized = false;
};

/// sum_i q_i A_i rho A_i^dagger / tr(A_i rho A_i^dagger) over the non-ignored outcomes.
GeneratedState generate_incoherent(const Povm &povm, const BlockingProfile &blocking, const DensityMatrix &input);

struct PovmCounterexample {
    bool free_state_exists = false;
    /// min over the Bloch ball of the Euclidean norm of
    /// (<chi0|rho|chi1>, <chi1|rho|chi2>, <chi2|rho|chi0>).
    double constraint_residual_min = 0;
    BlochVector minimizer;
    std::vector<PureState> chis;
    std::vector<ComplexMatrix> measurement_ops;  // B0, B1, B2
    double completeness_residual = 0;
};

/// Three states |0>, cos|0> +- sin|1> (half-angle theta/2) and their rank-one
/// POVM. Incoherence in the measurement-based theory requires the pairwise
/// products B_i^dagger B_i rho B_j^dagger B_j to vanish, i.e. the three
/// off-diagonal overlaps to vanish, which no qubit state satisfies.
PovmCounterexample povm_coherence_counterexample(double theta);

}  // namespace ldcoh

#endif
