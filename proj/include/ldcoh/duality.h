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


#ifndef LDCOH_DUALITY_H
#define LDCOH_DUALITY_H

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "ldcoh/basis.h"
#include "ldcoh/linalg.h"

namespace ldcoh {

/// Three-path double slit: the upper path |0> is kept with probability R and
/// otherwise leaks through a Hadamard into the middle path |+>; the lower
/// path is |1>. Detectors d0, d+, d1 in C^3 record the path.
struct DualityConfig {
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};
    double R = 1.0;
    std::array<PureState, 3> detectors{PureState(ComplexVector::Unit(3, 0)), PureState(ComplexVector::Unit(3, 1)),
                                       PureState(ComplexVector::Unit(3, 2))};  // |d0>, |d+>, |d1>
};

struct DualityResult {
    double coherence = 0;          // C~ of the path state w.r.t. {|0>, |1>, |+>}
    double uqsd_bound = 0;         // P
    double retain_prob = 0;        // 1 - tr(rho_D A_?)
    double distinguishability = 0; // D~ = retain_prob * P
    double sum = 0;                // C~ + D~
};

/// |det| of the detector Gram matrix.
double gram_determinant(const std::array<PureState, 3> &detectors);

/// Throws ContractError unless (alpha, beta) is normalized, R is in [0, 1]
/// and |det Gram| exceeds gram_det_min.
void validate(const DualityConfig &cfg, double gram_det_min = 1e-10);

/// The three paths of the quanton: |0>, |+>, |1>.
GeneralBasis path_basis();

/// Normalized joint state on C^2 (x) C^3, amplitude index = 3 * path + detector.
PureState joint_state(const DualityConfig &cfg);
DensityMatrix reduce_to_system(const PureState &joint);
DensityMatrix reduce_to_detector(const PureState &joint);

/// (b - a <a|b>) / N, the Gram-Schmidt partner of a within span{a, b}.
ComplexVector gram_schmidt_partner(const PureState &a, const PureState &b);

/// I - |a><a| - |a_perp><a_perp|: projector onto the complement of span{a, b}.
ComplexMatrix complement_projector(const PureState &a, const PureState &b);

struct DetectorPovm {
    /// Unit directions orthogonal to (d+, d1), (d1, d0), (d0, d+), in that order.
    std::array<ComplexVector, 3> directions;
    std::array<ComplexMatrix, 3> effects;  // A0, A+, A1 = c |dir><dir|
    ComplexMatrix inconclusive;            // A_? = I - c S
    double c = 0;                          // 1 / lambda_max(S)
    double inconclusive_min_eigenvalue = 0;
    double completeness_residual = 0;
};

/// Unambiguous-discrimination POVM for three linearly independent detector
/// states, scaled by the largest c that keeps A_? positive semidefinite.
DetectorPovm detector_povm(const std::array<PureState, 3> &detectors);

struct PhaseDamping {
    DensityMatrix damped;        // sum_i p_i |dir_i><dir_i|
    std::array<double, 3> p{};   // outcome probabilities conditioned on a conclusive result
    double retain_prob = 0;
};

/// Keeps the conclusive outcomes of the detector POVM and discards A_?.
PhaseDamping phase_damp(const DensityMatrix &rho_d, const DetectorPovm &povm);

/// 1 - (2/3)(sqrt(p0 p+)|<a|b>| + sqrt(p+ p1)|<b|c>| + sqrt(p1 p0)|<c|a>|), clamped to [0, 1].
double uqsd_bound(const std::array<double, 3> &p, const std::array<ComplexVector, 3> &directions);

DualityResult run_duality(const DualityConfig &cfg);

/// 12-real-parameter chart of configurations modulo global phase and a
/// common detector unitary (both leave DualityResult unchanged):
/// [a, phi, r, d+ (2 complex), d1 (2 complex + 1 real)] with alpha = cos a,
/// beta = e^{i phi} sin a, R = sin^2 r, d0 = e_0 and d+ in span{e_0, e_1}.
inline constexpr int kChartDim = 12;
Eigen::VectorXd encode_chart(const DualityConfig &cfg);
DualityConfig decode_chart(const Eigen::VectorXd &x);

enum class SweepOptimizer { kRandom, kNelderMeadRefine };
SweepOptimizer parse_optimizer(std::string_view name);

struct SweepOptions {
    long n_samples = 100000;
    std::uint64_t seed = 42;
    SweepOptimizer optimizer = SweepOptimizer::kNelderMeadRefine;
    std::optional<double> fixed_R;
    int workers = 1;
    int refine_top = 10;
    int refine_iterations = 200;
    double gram_det_min = 1e-6;
};

struct SweepSample {
    long id = 0;
    DualityConfig cfg;
    DualityResult result;
};

struct SweepResult {
    double max_sum = 0;
    DualityConfig argmax_cfg;
    DualityResult argmax_result;
    bool argmax_refined = false;
    double max_c_plus_p = 0;
    long max_c_plus_p_id = -1;
    /// First sample (by id) with C~ + P > 1, if any.
    std::optional<long> first_c_plus_p_above_one;
    std::vector<SweepSample> samples;
};

/// Deterministic per-sample seed (SplitMix64 of seed and index), so results
/// do not depend on the worker count.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// Haar (alpha, beta), uniform R (unless fixed) and Haar detector triples
/// resampled until |det Gram| > gram_det_min.
DualityConfig sample_config(std::mt19937_64 &rng, std::optional<double> fixed_R, double gram_det_min);

SweepResult complementarity_sweep(const SweepOptions &options);

}  // namespace ldcoh

#endif
