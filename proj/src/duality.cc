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


#include "ldcoh/duality.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "ldcoh/nelder_mead.h"

namespace ldcoh {

namespace {

ComplexMatrix gram(const std::array<PureState, 3> &d) {
    ComplexMatrix g(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            g(i, j) = d[static_cast<size_t>(i)].inner(d[static_cast<size_t>(j)]);
        }
    }
    return g;
}

// Unit vector orthogonal to both a and b in C^3.
ComplexVector orthogonal_direction(const ComplexVector &a, const ComplexVector &b) {
    // conj(a x b) written out, since Eigen's complex cross() conjugates on its own.
    ComplexVector w(3);
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        w(i) = std::conj(a(j) * b(k) - a(k) * b(j));
    }
    double n = w.norm();
    if (!(n > 1e-14)) {
        throw ContractError("detector_povm: detector states are linearly dependent");
    }
    return w / n;
}

ComplexVector ket(std::initializer_list<Complex> amps) {
    ComplexVector v(static_cast<Eigen::Index>(amps.size()));
    Eigen::Index i = 0;
    for (Complex a : amps) {
        v(i++) = a;
    }
    return v;
}

}  // namespace

double gram_determinant(const std::array<PureState, 3> &detectors) {
    for (const auto &d : detectors) {
        if (d.dim() != 3) {
            throw ContractError("detectors must live in C^3");
        }
    }
    return std::abs(gram(detectors).determinant());
}

void validate(const DualityConfig &cfg, double gram_det_min) {
    if (std::abs(std::norm(cfg.alpha) + std::norm(cfg.beta) - 1.0) > 1e-10) {
        throw ContractError("DualityConfig: |alpha|^2 + |beta|^2 must equal 1");
    }
    if (!(cfg.R >= 0.0 && cfg.R <= 1.0)) {
        throw ContractError("DualityConfig: R must lie in [0, 1]");
    }
    if (!(gram_determinant(cfg.detectors) > gram_det_min)) {
        throw ContractError("DualityConfig: detector states are (nearly) linearly dependent");
    }
}

GeneralBasis path_basis() {
    return GeneralBasis({qubit::zero(), qubit::one(), qubit::plus_x()});
}

PureState joint_state(const DualityConfig &cfg) {
    validate(cfg);
    const ComplexVector zero = ket({1, 0});
    const ComplexVector plus = ket({1, 1}) / std::sqrt(2.0);
    const ComplexVector one = ket({0, 1});
    auto kron = [](const ComplexVector &q, const ComplexVector &d) {
        ComplexVector out(6);
        for (int a = 0; a < 2; ++a) {
            out.segment(3 * a, 3) = q(a) * d;
        }
        return out;
    };
    ComplexVector psi = cfg.alpha * std::sqrt(cfg.R) * kron(zero, cfg.detectors[0].amplitudes()) +
                        cfg.alpha * std::sqrt(1.0 - cfg.R) * kron(plus, cfg.detectors[1].amplitudes()) +
                        cfg.beta * kron(one, cfg.detectors[2].amplitudes());
    double n = psi.norm();
    if (!(n > 1e-150)) {
        throw DomainError("joint_state: zero normalization");
    }
    return PureState(psi / n, 1e-10);
}

namespace {
ComplexMatrix as_path_by_detector(const PureState &joint) {
    if (joint.dim() != 6) {
        throw ContractError("joint state must live in C^2 (x) C^3");
    }
    ComplexMatrix m(2, 3);
    for (int q = 0; q < 2; ++q) {
        for (int k = 0; k < 3; ++k) {
            m(q, k) = joint[3 * q + k];
        }
    }
    return m;
}
}  // namespace

DensityMatrix reduce_to_system(const PureState &joint) {
    ComplexMatrix m = as_path_by_detector(joint);
    return DensityMatrix(m * m.adjoint(), DensityTolerances{1e-12, 1e-10, kPsdTol});
}

DensityMatrix reduce_to_detector(const PureState &joint) {
    ComplexMatrix m = as_path_by_detector(joint);
    return DensityMatrix(m.transpose() * m.conjugate(), DensityTolerances{1e-12, 1e-10, kPsdTol});
}

ComplexVector gram_schmidt_partner(const PureState &a, const PureState &b) {
    ComplexVector v = b.amplitudes() - a.amplitudes() * a.inner(b);
    double n = v.norm();
    if (!(n > 1e-14)) {
        throw ContractError("gram_schmidt_partner: states are parallel");
    }
    return v / n;
}

ComplexMatrix complement_projector(const PureState &a, const PureState &b) {
    const Eigen::Index d = a.dim();
    return ComplexMatrix::Identity(d, d) - a.projector() - outer(gram_schmidt_partner(a, b));
}

DetectorPovm detector_povm(const std::array<PureState, 3> &detectors) {
    if (!(gram_determinant(detectors) > 1e-14)) {
        throw ContractError("detector_povm: detector states are linearly dependent");
    }
    const auto &d0 = detectors[0].amplitudes();
    const auto &dp = detectors[1].amplitudes();
    const auto &d1 = detectors[2].amplitudes();
    DetectorPovm out;
    out.directions = {orthogonal_direction(dp, d1), orthogonal_direction(d1, d0), orthogonal_direction(d0, dp)};
    ComplexMatrix s = ComplexMatrix::Zero(3, 3);
    for (const auto &dir : out.directions) {
        s += outer(dir);
    }
    out.c = 1.0 / max_eigenvalue(s);
    for (size_t i = 0; i < 3; ++i) {
        out.effects[i] = out.c * outer(out.directions[i]);
    }
    out.inconclusive = ComplexMatrix::Identity(3, 3) - out.c * s;
    out.inconclusive = ((out.inconclusive + out.inconclusive.adjoint()) / 2.0).eval();
    out.inconclusive_min_eigenvalue = min_eigenvalue(out.inconclusive);
    ComplexMatrix total = out.inconclusive;
    for (const auto &e : out.effects) {
        total += e;
    }
    out.completeness_residual = (total - ComplexMatrix::Identity(3, 3)).norm();
    if (out.inconclusive_min_eigenvalue < -kPsdTol || out.completeness_residual > 1e-10) {
        throw DomainError("detector_povm: failed to build a valid POVM");
    }
    return out;
}

PhaseDamping phase_damp(const DensityMatrix &rho_d, const DetectorPovm &povm) {
    if (rho_d.dim() != 3) {
        throw ContractError("phase_damp: detector state must be 3-dimensional");
    }
    std::array<double, 3> weight{};
    for (size_t i = 0; i < 3; ++i) {
        weight[i] = std::max(0.0, (povm.effects[i] * rho_d.matrix()).trace().real());
    }
    double retain = 1.0 - (rho_d.matrix() * povm.inconclusive).trace().real();
    if (retain <= 1e-14) {
        throw DomainError("phase_damp: every outcome is inconclusive");
    }
    double conclusive = weight[0] + weight[1] + weight[2];
    ComplexMatrix damped = ComplexMatrix::Zero(3, 3);
    std::array<double, 3> p{};
    for (size_t i = 0; i < 3; ++i) {
        p[i] = weight[i] / conclusive;
        damped += p[i] * outer(povm.directions[i]);
    }
    return {DensityMatrix(damped, DensityTolerances{1e-12, 1e-10, kPsdTol}), p, retain};
}

double uqsd_bound(const std::array<double, 3> &p, const std::array<ComplexVector, 3> &directions) {
    auto overlap = [&](size_t i, size_t j) { return std::abs(directions[i].dot(directions[j])); };
    auto root = [](double a, double b) { return std::sqrt(std::max(0.0, a) * std::max(0.0, b)); };
    double cross = root(p[0], p[1]) * overlap(0, 1) + root(p[1], p[2]) * overlap(1, 2) + root(p[2], p[0]) * overlap(2, 0);
    return std::clamp(1.0 - 2.0 / 3.0 * cross, 0.0, 1.0);
}

DualityResult run_duality(const DualityConfig &cfg) {
    PureState joint = joint_state(cfg);
    DensityMatrix rho_q = reduce_to_system(joint);
    DensityMatrix rho_d = reduce_to_detector(joint);
    DetectorPovm povm = detector_povm(cfg.detectors);
    PhaseDamping damp = phase_damp(rho_d, povm);

    static const GeneralBasis paths = path_basis();
    DualityResult r;
    r.coherence = coherence_trace(rho_q, paths);
    r.uqsd_bound = uqsd_bound(damp.p, povm.directions);
    r.retain_prob = damp.retain_prob;
    r.distinguishability = r.retain_prob * r.uqsd_bound;
    r.sum = r.coherence + r.distinguishability;
    return r;
}

Eigen::VectorXd encode_chart(const DualityConfig &cfg) {
    validate(cfg);
    Eigen::VectorXd x(kChartDim);
    x(0) = std::atan2(std::abs(cfg.beta), std::abs(cfg.alpha));
    x(1) = std::arg(cfg.beta) - std::arg(cfg.alpha);
    x(2) = std::asin(std::sqrt(std::clamp(cfg.R, 0.0, 1.0)));
    const auto &d = cfg.detectors;
    ComplexVector e0 = d[0].amplitudes();
    ComplexVector e1 = gram_schmidt_partner(d[0], d[1]);
    ComplexVector rest = d[2].amplitudes() - e0 * e0.dot(d[2].amplitudes()) - e1 * e1.dot(d[2].amplitudes());
    ComplexVector e2 = rest / rest.norm();
    Complex p0 = e0.dot(d[1].amplitudes()), p1 = e1.dot(d[1].amplitudes());
    Complex q0 = e0.dot(d[2].amplitudes()), q1 = e1.dot(d[2].amplitudes()), q2 = e2.dot(d[2].amplitudes());
    x.segment(3, 4) << p0.real(), p0.imag(), p1.real(), p1.imag();
    x.segment(7, 5) << q0.real(), q0.imag(), q1.real(), q1.imag(), q2.real();
    return x;
}

DualityConfig decode_chart(const Eigen::VectorXd &x) {
    if (x.size() != kChartDim) {
        throw ContractError("decode_chart: expected 12 parameters");
    }
    DualityConfig cfg;
    cfg.alpha = std::cos(x(0));
    cfg.beta = std::polar(std::sin(x(0)), x(1));
    double sr = std::sin(x(2));
    cfg.R = std::clamp(sr * sr, 0.0, 1.0);
    cfg.detectors = {PureState(ket({1, 0, 0})),
                     PureState::normalized(ket({{x(3), x(4)}, {x(5), x(6)}, 0})),
                     PureState::normalized(ket({{x(7), x(8)}, {x(9), x(10)}, x(11)}))};
    return cfg;
}

SweepOptimizer parse_optimizer(std::string_view name) {
    if (name == "random") {
        return SweepOptimizer::kRandom;
    }
    if (name == "nelder-mead-refine") {
        return SweepOptimizer::kNelderMeadRefine;
    }
    throw ContractError("unknown optimizer '" + std::string(name) + "'");
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

DualityConfig sample_config(std::mt19937_64 &rng, std::optional<double> fixed_R, double gram_det_min) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto gaussian_ket = [&](int dim) {
        ComplexVector v(dim);
        for (int i = 0; i < dim; ++i) {
            double re = g(rng);
            double im = g(rng);
            v(i) = Complex(re, im);
        }
        return v;
    };
    DualityConfig cfg;
    ComplexVector ab = gaussian_ket(2).normalized();
    cfg.alpha = ab(0);
    cfg.beta = ab(1);
    cfg.R = fixed_R ? *fixed_R : u(rng);
    do {
        cfg.detectors = {PureState::normalized(gaussian_ket(3)), PureState::normalized(gaussian_ket(3)),
                         PureState::normalized(gaussian_ket(3))};
    } while (!(gram_determinant(cfg.detectors) > gram_det_min));
    return cfg;
}

SweepResult complementarity_sweep(const SweepOptions &options) {
    if (options.n_samples < 1) {
        throw ContractError("complementarity_sweep: n_samples must be at least 1");
    }
    const auto n = static_cast<size_t>(options.n_samples);
    SweepResult out;
    out.samples.resize(n);

    auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            std::mt19937_64 rng(sample_seed(options.seed, i));
            DualityConfig cfg = sample_config(rng, options.fixed_R, options.gram_det_min);
            out.samples[i] = {static_cast<long>(i), cfg, run_duality(cfg)};
        }
    };
    const size_t workers = static_cast<size_t>(std::clamp(options.workers, 1, 256));
    if (workers == 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        const size_t chunk = (n + workers - 1) / workers;
        for (size_t w = 0; w < workers; ++w) {
            size_t begin = w * chunk;
            size_t end = std::min(n, begin + chunk);
            if (begin < end) {
                pool.emplace_back(work, begin, end);
            }
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    size_t best = 0;
    for (size_t i = 0; i < n; ++i) {
        const auto &r = out.samples[i].result;
        if (r.sum > out.samples[best].result.sum) {
            best = i;
        }
        double cp = r.coherence + r.uqsd_bound;
        if (cp > out.max_c_plus_p) {
            out.max_c_plus_p = cp;
            out.max_c_plus_p_id = static_cast<long>(i);
        }
        if (cp > 1.0 && !out.first_c_plus_p_above_one) {
            out.first_c_plus_p_above_one = static_cast<long>(i);
        }
    }
    out.max_sum = out.samples[best].result.sum;
    out.argmax_cfg = out.samples[best].cfg;
    out.argmax_result = out.samples[best].result;

    if (options.optimizer == SweepOptimizer::kNelderMeadRefine) {
        std::vector<size_t> order(n);
        std::iota(order.begin(), order.end(), size_t{0});
        const size_t top = std::min(n, static_cast<size_t>(std::max(0, options.refine_top)));
        std::partial_sort(order.begin(), order.begin() + static_cast<long>(top), order.end(), [&](size_t a, size_t b) {
            if (out.samples[a].result.sum != out.samples[b].result.sum) {
                return out.samples[a].result.sum > out.samples[b].result.sum;
            }
            return a < b;
        });
        auto objective = [&](const Eigen::VectorXd &x) {
            try {
                DualityConfig cfg = decode_chart(x);
                if (options.fixed_R) {
                    cfg.R = *options.fixed_R;
                }
                if (!(gram_determinant(cfg.detectors) > 1e-10)) {
                    return 1.0;
                }
                return -run_duality(cfg).sum;
            } catch (const std::exception &) {
                return 1.0;
            }
        };
        NelderMeadOptions nm;
        nm.max_iterations = options.refine_iterations;
        nm.initial_step = 0.05;
        for (size_t k = 0; k < top; ++k) {
            const auto &start = out.samples[order[k]];
            NelderMeadResult res = nelder_mead_minimize(objective, encode_chart(start.cfg), nm);
            if (-res.value > out.max_sum) {
                DualityConfig cfg = decode_chart(res.x);
                if (options.fixed_R) {
                    cfg.R = *options.fixed_R;
                }
                out.max_sum = -res.value;
                out.argmax_cfg = cfg;
                out.argmax_result = run_duality(cfg);
                out.argmax_refined = true;
            }
        }
    }
    return out;
}

}  // namespace ldcoh
