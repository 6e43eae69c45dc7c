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

#include <random>

#include "gtest/gtest.h"
#include "ldcoh/kraus.h"
#include "oracles.h"

using namespace ldcoh;

namespace {

GeneralBasis zero_one_plus() {
    return GeneralBasis({qubit::zero(), qubit::one(), qubit::plus_x()});
}

GeneralBasis random_qubit_basis(int n, std::mt19937_64 &rng) {
    std::vector<PureState> states;
    for (int i = 0; i < n; ++i) {
        states.push_back(PureState::normalized(oracle::haar_ket(2, rng)));
    }
    return GeneralBasis(states);
}

std::vector<Eigen::Vector3d> bloch_points(const GeneralBasis &b) {
    std::vector<Eigen::Vector3d> out;
    for (const auto &s : b.states()) {
        out.push_back(oracle::bloch(s.amplitudes()));
    }
    return out;
}

}  // namespace

TEST(basis, spanning) {
    auto a = is_spanning(bases::computational(2));
    EXPECT_TRUE(a.spanning);
    EXPECT_TRUE(a.independent);
    auto b = is_spanning(zero_one_plus());
    EXPECT_TRUE(b.spanning);
    EXPECT_FALSE(b.independent);
    auto c = is_spanning(GeneralBasis({qubit::zero(), qubit::zero()}));
    EXPECT_FALSE(c.spanning);
    EXPECT_EQ(c.rank, 1);
    EXPECT_THROW(GeneralBasis(std::vector<PureState>{}), ContractError);
}

TEST(basis, probability_vector) {
    EXPECT_THROW(ProbabilityVector({0.5, 0.6}), ContractError);
    EXPECT_THROW(ProbabilityVector({1.1, -0.1}), ContractError);
    ProbabilityVector p({1.0 + 1e-13, -1e-13});
    EXPECT_EQ(p[1], 0.0);
}

TEST(basis, vertices_are_free) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 20; ++t) {
        auto basis = random_qubit_basis(3 + t % 4, rng);
        for (int i = 0; i < basis.size(); ++i) {
            auto m = membership(DensityMatrix(basis[i]), basis);
            EXPECT_TRUE(m.is_free);
            EXPECT_LT(m.residual, 1e-10);
            ASSERT_TRUE(m.weights.has_value());
        }
    }
    auto m = membership(DensityMatrix(qubit::plus_x()), zero_one_plus());
    ASSERT_TRUE(m.weights.has_value());
    EXPECT_NEAR((*m.weights)[2], 1.0, 1e-12);
}

TEST(basis, membership_rejects_bad_input) {
    EXPECT_THROW(membership(DensityMatrix(qubit::zero()), GeneralBasis({qubit::zero(), qubit::zero()})),
                 ContractError);
    EXPECT_THROW(membership(DensityMatrix::maximally_mixed(3), zero_one_plus()), ContractError);
}

TEST(basis, minus_y_is_not_free_for_zero_one_plus) {
    auto m = membership(DensityMatrix(qubit::minus_y()), zero_one_plus());
    EXPECT_FALSE(m.is_free);
    EXPECT_GT(m.residual, 0.1);
    // The Bloch hull is the xz-plane triangle, one unit from (0, -1, 0).
    EXPECT_NEAR(m.residual, 1 / std::sqrt(2.0), 1e-12);
}

TEST(basis, octahedron_rule) {
    std::mt19937_64 rng(22);
    auto basis = bases::pauli_eigenstates();
    int checked = 0;
    for (int t = 0; t < 2000; ++t) {
        Eigen::Vector3d r = oracle::ball_point(rng);
        double l1 = r.cwiseAbs().sum();
        if (std::abs(l1 - 1) < 1e-6) {
            continue;
        }
        ++checked;
        EXPECT_EQ(membership(DensityMatrix(oracle::density_of_bloch(r)), basis).is_free, l1 <= 1) << r.transpose();
    }
    EXPECT_GT(checked, 1900);
}

TEST(basis, convexity_of_free_set) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 100; ++t) {
        auto basis = random_qubit_basis(4, rng);
        auto mix = [&]() {
            Eigen::VectorXd w(4);
            for (int i = 0; i < 4; ++i) {
                w(i) = u(rng);
            }
            w /= w.sum();
            ComplexMatrix m = ComplexMatrix::Zero(2, 2);
            for (int i = 0; i < 4; ++i) {
                m += w(i) * basis[i].projector();
            }
            return m;
        };
        ComplexMatrix a = mix(), b = mix();
        double s = u(rng);
        EXPECT_TRUE(membership(DensityMatrix(s * a + (1 - s) * b), basis).is_free);
    }
}

TEST(basis, coherence_examples) {
    EXPECT_NEAR(coherence_trace(DensityMatrix(qubit::minus_x()), zero_one_plus()), 1.0, 1e-12);
    GeneralBasis five({qubit::zero(), qubit::one(), qubit::plus_x(), qubit::minus_x(), qubit::plus_y()});
    EXPECT_NEAR(coherence_trace(DensityMatrix(qubit::minus_y()), five), 1.0, 1e-12);
    EXPECT_EQ(coherence_trace(DensityMatrix(qubit::plus_x()), zero_one_plus()), 0.0);
    EXPECT_EQ(coherence_trace(DensityMatrix::maximally_mixed(2), zero_one_plus()), 0.0);
}

TEST(basis, qubit_coherence_matches_polytope_oracles) {
    std::mt19937_64 rng(24);
    for (int b = 0; b < 10; ++b) {
        auto basis = random_qubit_basis(3 + b % 4, rng);
        auto pts = bloch_points(basis);
        for (int t = 0; t < 20; ++t) {
            ComplexMatrix rho = oracle::random_density(2, rng);
            Eigen::Vector3d r = oracle::bloch(rho);
            double c = coherence_trace(DensityMatrix(rho), basis);
            double exact = oracle::polytope_distance_exact(pts, r);
            EXPECT_NEAR(c, exact, 1e-8);
            EXPECT_NEAR(c, coherence_generic(DensityMatrix(rho), basis, Distance::kTraceNorm), 1e-8);
        }
    }
}

TEST(basis, coherence_vanishes_exactly_on_free_states) {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 300; ++t) {
        auto basis = random_qubit_basis(3, rng);
        DensityMatrix rho(oracle::random_density(2, rng));
        bool free = membership(rho, basis).is_free;
        double c = coherence_trace(rho, basis);
        EXPECT_EQ(free, c == 0.0);
        double f = coherence_generic(rho, basis, Distance::kFrobenius);
        EXPECT_EQ(c == 0.0, f == 0.0);
    }
}

TEST(basis, adding_a_state_never_increases_coherence) {
    std::mt19937_64 rng(26);
    for (int t = 0; t < 100; ++t) {
        int d = t % 2 == 0 ? 2 : 3;
        std::vector<PureState> states;
        for (int i = 0; i < d + 1; ++i) {
            states.push_back(PureState::normalized(oracle::haar_ket(d, rng)));
        }
        GeneralBasis basis(states);
        GeneralBasis bigger = basis.with(PureState::normalized(oracle::haar_ket(d, rng)));
        DensityMatrix rho(oracle::random_density(d, rng));
        EXPECT_LE(coherence_trace(rho, bigger), coherence_trace(rho, basis) + 1e-9);
    }
}

TEST(basis, qutrit_coherence_matches_embedded_qubit_problem) {
    // A state supported on span{e0, e1} with the basis (qubit basis embedded) + e2:
    // moving weight onto |e2> only costs trace norm, so the optimum is the qubit one.
    std::mt19937_64 rng(27);
    for (int t = 0; t < 10; ++t) {
        auto qb = random_qubit_basis(3 + t % 3, rng);
        std::vector<PureState> lifted;
        for (const auto &s : qb.states()) {
            ComplexVector v = ComplexVector::Zero(3);
            v.head(2) = s.amplitudes();
            lifted.push_back(PureState(v));
        }
        lifted.push_back(PureState(ComplexVector::Unit(3, 2)));
        GeneralBasis basis(lifted);
        ComplexMatrix small = oracle::random_density(2, rng);
        ComplexMatrix big = ComplexMatrix::Zero(3, 3);
        big.topLeftCorner(2, 2) = small;
        auto detail = coherence_trace_detailed(DensityMatrix(big), basis);
        double expected = oracle::polytope_distance_exact(bloch_points(qb), oracle::bloch(small));
        EXPECT_NEAR(detail.value, expected, 1e-6);
        EXPECT_LE(detail.lower_bound, detail.value + 1e-12);
    }
}

TEST(basis, qutrit_coherence_certificate) {
    std::mt19937_64 rng(28);
    for (int t = 0; t < 10; ++t) {
        std::vector<PureState> states;
        for (int i = 0; i < 5; ++i) {
            states.push_back(PureState::normalized(oracle::haar_ket(3, rng)));
        }
        GeneralBasis basis(states);
        DensityMatrix rho(oracle::random_density(3, rng));
        auto detail = coherence_trace_detailed(rho, basis);
        // The reported weights achieve the reported value.
        ComplexMatrix sigma = ComplexMatrix::Zero(3, 3);
        for (int i = 0; i < basis.size(); ++i) {
            sigma += detail.weights[static_cast<size_t>(i)] * basis[i].projector();
        }
        EXPECT_NEAR(oracle::trace_norm(rho.matrix() - sigma), detail.value, 1e-9);
        // The dual certificate comes from the smoothed sign of rho - sigma, which is
        // loose when that difference is singular at the optimum.
        EXPECT_LE(detail.lower_bound, detail.value + 1e-12);
        EXPECT_LE(detail.value - detail.lower_bound, 1e-5 * std::max(1.0, detail.value));
        // No sampled mixture near the returned weights does better.
        for (int s = 0; s < 200; ++s) {
            Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(detail.weights.data(), basis.size());
            for (int i = 0; i < basis.size(); ++i) {
                w(i) = std::max(0.0, w(i) + 1e-3 * std::normal_distribution<double>()(rng));
            }
            w /= w.sum();
            ComplexMatrix other = ComplexMatrix::Zero(3, 3);
            for (int i = 0; i < basis.size(); ++i) {
                other += w(i) * basis[i].projector();
            }
            EXPECT_GE(oracle::trace_norm(rho.matrix() - other), detail.value - 1e-9);
        }
    }
}

TEST(basis, distance_names) {
    EXPECT_EQ(parse_distance("trace"), Distance::kTraceNorm);
    EXPECT_EQ(parse_distance("hilbert-schmidt"), Distance::kFrobenius);
    EXPECT_THROW(parse_distance("bures"), ContractError);
}

TEST(basis, fibonacci_sphere_is_unit_and_spread) {
    auto pts = fibonacci_sphere(1000);
    ASSERT_EQ(pts.size(), 1000u);
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (const auto &p : pts) {
        EXPECT_NEAR(p.norm(), 1, 1e-12);
        mean += p;
    }
    EXPECT_LT((mean / 1000).norm(), 1e-2);
}

TEST(basis, scan_orthogonal_basis_gives_equator) {
    ScanOptions opt;
    opt.resolution = 2000;
    auto maxima = max_coherent_scan(bases::computational(2), opt);
    ASSERT_FALSE(maxima.empty());
    for (const auto &p : maxima) {
        EXPECT_NEAR(p.coherence, 1, 1e-6);
        EXPECT_LT(std::abs(p.point.z), 1e-3);
    }
}

TEST(basis, scan_rejects_qutrits) {
    EXPECT_THROW(max_coherent_scan(bases::computational(3)), UnsupportedDimension);
}

TEST(basis, monotonicity_probe_examples) {
    auto basis = zero_one_plus();
    DensityMatrix rho(qubit::minus_y());
    auto id = monotonicity_probe(rho, basis, {KrausOperator(ComplexMatrix::Identity(2, 2))});
    EXPECT_EQ(id.before, id.after);
    // Replace every input by |0><0|.
    std::vector<KrausOperator> reset{KrausOperator(qubit::zero().amplitudes() * qubit::zero().amplitudes().adjoint()),
                                     KrausOperator(qubit::zero().amplitudes() * qubit::one().amplitudes().adjoint())};
    auto r = monotonicity_probe(rho, basis, reset);
    EXPECT_NEAR(r.before, 1, 1e-12);
    EXPECT_EQ(r.after, 0.0);
    // A Hadamard swaps |0> and |+> but sends |1> to |->, which is not free.
    ComplexMatrix h(2, 2);
    h << 1, 1, 1, -1;
    EXPECT_THROW(monotonicity_probe(rho, basis, {KrausOperator(h / std::sqrt(2.0))}), ContractError);
    EXPECT_THROW(monotonicity_probe(rho, basis, {KrausOperator(ComplexMatrix::Identity(2, 2) * 0.5)}),
                 ContractError);
}
