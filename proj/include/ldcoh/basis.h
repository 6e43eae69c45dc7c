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


#ifndef LDCOH_BASIS_H
#define LDCOH_BASIS_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ldcoh/linalg.h"

namespace ldcoh {

class KrausOperator;

/// Frobenius-residual threshold separating free from resourceful states.
inline constexpr double kMembershipTol = 1e-8;

/// An ordered spanning set of pure states, possibly linearly dependent and
/// possibly containing duplicates. The free set is the convex hull of the
/// projectors onto its members.
class GeneralBasis {
   public:
    explicit GeneralBasis(std::vector<PureState> states);

    int dim() const {
        return dim_;
    }
    int size() const {
        return static_cast<int>(states_.size());
    }
    const std::vector<PureState> &states() const {
        return states_;
    }
    const PureState &operator[](int i) const {
        return states_[static_cast<size_t>(i)];
    }
    /// Columns are the real coordinates of each projector.
    const Eigen::MatrixXd &projector_coordinates() const {
        return coords_;
    }
    GeneralBasis with(const PureState &extra) const;

   private:
    int dim_;
    std::vector<PureState> states_;
    Eigen::MatrixXd coords_;
};

namespace bases {
GeneralBasis computational(int dim);
/// The six eigenstates of X, Y and Z; its free set is the stabilizer octahedron.
GeneralBasis pauli_eigenstates();
}  // namespace bases

struct SpanInfo {
    bool spanning = false;
    bool independent = false;
    int rank = 0;
};

/// Rank of the stacked amplitude matrix, decided by singular values
/// relative to the largest one.
SpanInfo is_spanning(const GeneralBasis &basis, double rank_tol = 1e-10);

/// Nonnegative weights summing to one.
class ProbabilityVector {
   public:
    explicit ProbabilityVector(std::vector<double> weights);
    const std::vector<double> &weights() const {
        return weights_;
    }
    double operator[](size_t i) const {
        return weights_[i];
    }
    size_t size() const {
        return weights_.size();
    }

   private:
    std::vector<double> weights_;
};

struct MembershipResult {
    bool is_free = false;
    std::optional<ProbabilityVector> weights;  // present iff is_free
    double residual = 0;                       // min Frobenius distance to the free set
    /// Minimizing weights, reported whether or not the state is free.
    std::vector<double> nearest_weights;
};

/// Solves min over the simplex of |sum_i p_i |psi_i><psi_i| - rho|_F exactly
/// (Wolfe's min-norm-point method on the projector coordinates).
MembershipResult membership(const DensityMatrix &rho, const GeneralBasis &basis, double tol = kMembershipTol);

struct TraceCoherenceOptions {
    int max_iterations = 100000;
    double relative_change = 1e-9;
    double gap_tol = 1e-9;
    double membership_tol = kMembershipTol;
};

struct TraceCoherence {
    double value = 0;
    /// Certified lower bound from the dual pairing tr(U(rho - sigma)) with |U| <= 1.
    double lower_bound = 0;
    std::vector<double> weights;
    int iterations = 0;
};

/// Trace-norm distance to the free set. Qubits use the exact Bloch-ball
/// projection; higher dimensions run an accelerated projected gradient on a
/// smoothed trace norm with continuation, stopping when the primal-dual gap
/// drops below gap_tol, when the best value changes by less than
/// relative_change over a window, or after max_iterations.
TraceCoherence coherence_trace_detailed(const DensityMatrix &rho, const GeneralBasis &basis,
                                        const TraceCoherenceOptions &options = {});

double coherence_trace(const DensityMatrix &rho, const GeneralBasis &basis, const TraceCoherenceOptions &options = {});

enum class Distance { kTraceNorm, kFrobenius };
Distance parse_distance(std::string_view name);
std::string_view distance_name(Distance d);

/// Distance-to-free-set coherence for a contractive distance.
double coherence_generic(const DensityMatrix &rho, const GeneralBasis &basis, Distance distance);

struct ScanPoint {
    BlochVector point;
    double coherence = 0;
};

struct ScanOptions {
    int resolution = 10000;
    double max_tol = 1e-6;
    /// Grid points within this much of the grid maximum are polished by a
    /// local search before the maximizer set is extracted. Zero disables it.
    double refine_band = 1e-2;
    int refine_iterations = 400;
};

/// Unit vectors of a Fibonacci-sphere grid.
std::vector<Eigen::Vector3d> fibonacci_sphere(int n);

/// Coherence of every pure state on the grid.
std::vector<ScanPoint> coherence_grid(const GeneralBasis &basis, int resolution);

/// Pure qubit states maximizing the trace-norm coherence, to within max_tol of the maximum.
std::vector<ScanPoint> max_coherent_scan(const GeneralBasis &basis, const ScanOptions &options = {});

struct MonotonicityProbe {
    double before = 0;
    double after = 0;
};

/// Coherence before and after a trace-preserving channel whose every Kraus
/// operator is certified incoherent.
MonotonicityProbe monotonicity_probe(const DensityMatrix &rho, const GeneralBasis &basis,
                                     const std::vector<KrausOperator> &channel, double tol = kMembershipTol);

}  // namespace ldcoh

#endif
