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


// Independent reference implementations used only by the tests. None of them
// call into the library's numerical kernels.

#ifndef LDCOH_TESTS_ORACLES_H
#define LDCOH_TESTS_ORACLES_H

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Cyclic Jacobi sweeps on a real symmetric matrix. Returns ascending eigenvalues.
inline Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd a) {
    const Eigen::Index n = a.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                off += a(p, q) * a(p, q);
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) {
                    continue;
                }
                double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    Eigen::VectorXd ev = a.diagonal();
    std::sort(ev.data(), ev.data() + n);
    return ev;
}

/// Eigenvalues of a Hermitian matrix from its real embedding [[A, -B], [B, A]],
/// whose spectrum is that of H with every eigenvalue doubled.
inline Eigen::VectorXd hermitian_eigenvalues(const CMat &h) {
    const Eigen::Index n = h.rows();
    Eigen::MatrixXd big(2 * n, 2 * n);
    big << h.real(), -h.imag(), h.imag(), h.real();
    Eigen::VectorXd all = jacobi_eigenvalues(big);
    Eigen::VectorXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out(i) = all(2 * i);
    }
    return out;
}

inline double trace_norm(const CMat &h) {
    return hermitian_eigenvalues(h).cwiseAbs().sum();
}

inline Eigen::Vector3d bloch(const CVec &psi) {
    Complex a = psi(0), b = psi(1);
    Complex off = std::conj(a) * b;
    return {2 * off.real(), 2 * off.imag(), std::norm(a) - std::norm(b)};
}

inline Eigen::Vector3d bloch(const CMat &rho) {
    return {2 * rho(1, 0).real(), 2 * rho(1, 0).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

/// Exact Euclidean distance from x to conv(points) by enumerating every
/// candidate support of at most four points (Caratheodory in R^3): project
/// onto the affine hull of the support and keep solutions with nonnegative
/// barycentric weights.
inline double polytope_distance_exact(const std::vector<Eigen::Vector3d> &pts, const Eigen::Vector3d &x) {
    const int n = static_cast<int>(pts.size());
    double best = std::numeric_limits<double>::infinity();
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) {
                idx.push_back(i);
            }
        }
        if (idx.size() > 4) {
            continue;
        }
        const Eigen::Vector3d &p0 = pts[static_cast<size_t>(idx[0])];
        const auto k = static_cast<Eigen::Index>(idx.size()) - 1;
        Eigen::VectorXd lam = Eigen::VectorXd::Zero(k);
        if (k > 0) {
            Eigen::MatrixXd e(3, k);
            for (Eigen::Index j = 0; j < k; ++j) {
                e.col(j) = pts[static_cast<size_t>(idx[static_cast<size_t>(j + 1)])] - p0;
            }
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeThinU | Eigen::ComputeThinV);
            if (svd.singularValues()(k - 1) < 1e-9 * std::max(1.0, svd.singularValues()(0))) {
                continue;  // degenerate support; its faces are covered by smaller subsets
            }
            lam = svd.solve(x - p0);
        }
        double w0 = 1 - lam.sum();
        if (w0 < -1e-12 || (lam.array() < -1e-12).any()) {
            continue;
        }
        Eigen::Vector3d y = p0;
        for (Eigen::Index j = 0; j < k; ++j) {
            y += lam(j) * (pts[static_cast<size_t>(idx[static_cast<size_t>(j + 1)])] - p0);
        }
        best = std::min(best, (y - x).norm());
    }
    return best;
}

/// True iff x lies in conv(points), decided by testing every tetrahedron,
/// triangle, segment and vertex for barycentric containment.
inline bool in_polytope(const std::vector<Eigen::Vector3d> &pts, const Eigen::Vector3d &x, double tol = 1e-12) {
    return polytope_distance_exact(pts, x) <= tol;
}

/// Dense-grid brute force: the nearest point of a polytope to an exterior
/// point lies on a facet of dimension <= 2, so every triangle of vertices is
/// gridded in barycentric coordinates and the best sample is refined by
/// successively finer local grids. Uses at most ~1e5 samples for six points.
inline double polytope_distance_grid(const std::vector<Eigen::Vector3d> &pts, const Eigen::Vector3d &x) {
    if (in_polytope(pts, x)) {
        return 0.0;
    }
    const int n = static_cast<int>(pts.size());
    double best = std::numeric_limits<double>::infinity();
    auto eval = [&](const Eigen::Vector3d &a, const Eigen::Vector3d &b, const Eigen::Vector3d &c, double u, double v) {
        if (u < 0 || v < 0 || u + v > 1) {
            return std::numeric_limits<double>::infinity();
        }
        return (a + u * (b - a) + v * (c - a) - x).norm();
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                const auto &a = pts[static_cast<size_t>(i)], &b = pts[static_cast<size_t>(j)],
                           &c = pts[static_cast<size_t>(k)];
                const int m = 40;
                double bu = 0, bv = 0, bd = std::numeric_limits<double>::infinity();
                for (int s = 0; s <= m; ++s) {
                    for (int t = 0; s + t <= m; ++t) {
                        double d = eval(a, b, c, double(s) / m, double(t) / m);
                        if (d < bd) {
                            bd = d, bu = double(s) / m, bv = double(t) / m;
                        }
                    }
                }
                double step = 1.0 / m;
                for (int level = 0; level < 4; ++level) {
                    double cu = bu, cv = bv, sub = step / 5;
                    for (int s = -10; s <= 10; ++s) {
                        for (int t = -10; t <= 10; ++t) {
                            double d = eval(a, b, c, cu + s * sub, cv + t * sub);
                            if (d < bd) {
                                bd = d, bu = cu + s * sub, bv = cv + t * sub;
                            }
                        }
                    }
                    step = sub;
                }
                best = std::min(best, bd);
            }
        }
    }
    if (n < 3) {
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                for (int s = 0; s <= 100000 / (n * n); ++s) {
                    double u = double(s) / (100000 / (n * n));
                    auto p = (1 - u) * pts[static_cast<size_t>(i)] + u * pts[static_cast<size_t>(j)];
                    best = std::min(best, (p - x).norm());
                }
            }
        }
    }
    return best;
}

inline CVec haar_ket(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CVec v(dim);
    for (int i = 0; i < dim; ++i) {
        double re = g(rng);
        double im = g(rng);
        v(i) = Complex(re, im);
    }
    return v.normalized();
}

/// Random mixed state of the given dimension: a Ginibre matrix G G^dagger / tr.
inline CMat random_density(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CMat a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            double re = g(rng);
            double im = g(rng);
            a(i, j) = Complex(re, im);
        }
    }
    CMat rho = a * a.adjoint();
    return rho / rho.trace().real();
}

/// Uniformly distributed point of the unit ball.
inline Eigen::Vector3d ball_point(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0, 1);
    Eigen::Vector3d v;
    for (int i = 0; i < 3; ++i) {
        v(i) = g(rng);
    }
    return v.normalized() * std::cbrt(u(rng));
}

inline CMat density_of_bloch(const Eigen::Vector3d &r) {
    CMat m(2, 2);
    m << Complex(1 + r.z(), 0), Complex(r.x(), -r.y()), Complex(r.x(), r.y()), Complex(1 - r.z(), 0);
    return m / 2.0;
}

}  // namespace oracle

#endif
