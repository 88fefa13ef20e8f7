#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lognet/errors.hpp"
#include "lognet/gradient_flow.hpp"
#include "lognet/hamiltonian_chart.hpp"
#include "lognet/verification.hpp"
#include "oracles.hpp"

using namespace lognet;

TEST(HamiltonianChart, ToPhaseExamples) {
    const PhaseCoords a = to_phase({1.0, -0.5});
    EXPECT_DOUBLE_EQ(a.P, -1.0);
    EXPECT_DOUBLE_EQ(a.Q, 2.0);
    const PhaseCoords b = to_phase({-1.0, -0.5});
    EXPECT_DOUBLE_EQ(b.P, 1.0);
    EXPECT_DOUBLE_EQ(b.Q, 2.0);
    const PhaseCoords c = to_phase({2.0, -1.0});
    EXPECT_DOUBLE_EQ(c.P, -1.0);
    EXPECT_DOUBLE_EQ(c.Q, 1.5);
}

TEST(HamiltonianChart, ToPhaseErrors) {
    EXPECT_THROW(to_phase({0.0, -0.5}), ChartSingularity);
    EXPECT_THROW(to_phase({1.0, 0.0}), DomainError);
}

TEST(HamiltonianChart, ImageConditionHoldsOnGrid) {
    for (const auto& t : standard_grid()) {
        const PhaseCoords c = to_phase(t);
        EXPECT_GT(c.Q, 0.0);
        EXPECT_GT(c.Q * c.P * c.P, 1.0);
    }
}

TEST(HamiltonianChart, FromPhaseExamples) {
    const NaturalParams a = from_phase({-1.0, 2.0});
    EXPECT_DOUBLE_EQ(a.theta1, 1.0);
    EXPECT_DOUBLE_EQ(a.theta2, -0.5);
    const NaturalParams b = from_phase({1.0, 2.0});
    EXPECT_DOUBLE_EQ(b.theta1, -1.0);
    EXPECT_DOUBLE_EQ(b.theta2, -0.5);
    EXPECT_THROW(from_phase({1.0, 0.5}), DomainError);  // Q P^2 = 0.5
    EXPECT_THROW(from_phase({2.0, 0.25}), DomainError); // Q P^2 = 1
    EXPECT_THROW(from_phase({0.0, 3.0}), ChartSingularity);
}

TEST(HamiltonianChart, ChartIsBijectiveOnGrid) {
    for (const auto& t : standard_grid()) {
        const NaturalParams back = from_phase(to_phase(t));
        EXPECT_LT(std::abs(back.theta1 - t.theta1) / std::abs(t.theta1), 1e-12);
        EXPECT_LT(std::abs(back.theta2 - t.theta2) / std::abs(t.theta2), 1e-12);
        const PhaseCoords c = to_phase(t);
        const PhaseCoords again = to_phase(from_phase(c));
        EXPECT_NEAR(again.P, c.P, 1e-12 * std::abs(c.P));
        EXPECT_NEAR(again.Q, c.Q, 1e-12 * c.Q);
    }
}

TEST(HamiltonianChart, HamiltonianExamples) {
    EXPECT_DOUBLE_EQ(hamiltonian({-1.0, 2.0}), 2.0);
    EXPECT_DOUBLE_EQ(hamiltonian({1.0, 1.0}), -1.0);
    EXPECT_NEAR(hamiltonian_angular({1.0, 1.0}), -1.0, 1e-15);
    for (double p : {-3.0, -0.1, 0.7, 5.0}) {
        EXPECT_EQ(hamiltonian({p, 0.0}), 0.0);
    }
    EXPECT_THROW(hamiltonian({0.0, 0.0}), DomainError);
}

TEST(HamiltonianChart, AngularFormAgreesRelatively) {
    for (const auto& t : standard_grid()) {
        const PhaseCoords c = to_phase(t);
        const double scale = c.P * c.P + c.Q * c.Q;
        EXPECT_LT(std::abs(-c.P * c.Q - hamiltonian_angular(c)), 1e-12 * scale);
    }
}

TEST(HamiltonianChart, VectorFieldExamples) {
    const Eigen::Vector2d a = hamiltonian_vector_field({-1.0, 2.0});
    EXPECT_EQ(a, Eigen::Vector2d(-1.0, -2.0));
    const Eigen::Vector2d b = hamiltonian_vector_field({1.0, 1.0});
    EXPECT_EQ(b, Eigen::Vector2d(1.0, -1.0));
}

TEST(HamiltonianChart, VectorFieldIsTangentToLevelSets) {
    for (const auto& t : standard_grid()) {
        const PhaseCoords c = to_phase(t);
        EXPECT_EQ(hamiltonian_gradient(c).dot(hamiltonian_vector_field(c)), 0.0);
    }
}

TEST(HamiltonianChart, PoissonBivectorIsAntisymmetric) {
    const Eigen::Matrix2d& l = poisson_bivector();
    EXPECT_EQ(l + l.transpose(), Eigen::Matrix2d::Zero());
    EXPECT_EQ(l(0, 1), -1.0);
    EXPECT_EQ(l(1, 0), 1.0);
}

TEST(HamiltonianChart, PushforwardExamples) {
    const Eigen::Vector2d a = pushforward_rhs({1.0, -0.5});
    EXPECT_LT((a - Eigen::Vector2d(-1.0, -2.0)).cwiseAbs().maxCoeff(), 1e-14);
    const Eigen::Vector2d b = pushforward_rhs({2.0, -1.0});
    EXPECT_LT((b - Eigen::Vector2d(-1.0, -1.5)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(HamiltonianChart, PushforwardEqualsHamiltonianFieldOnGrid) {
    for (const auto& t : standard_grid()) {
        const Eigen::Vector2d xh = hamiltonian_vector_field(to_phase(t));
        EXPECT_LT((pushforward_rhs(t) - xh).cwiseAbs().maxCoeff(), 1e-10);

        // Independent route: finite-difference Jacobian of the chart times the closed-form field.
        const Eigen::Matrix2d j = oracle::fd_jacobian(oracle::phase_map, t.vec(), 1e-6);
        const Eigen::Vector2d fd = j * gradient_rhs(t);
        EXPECT_LT((fd - xh).cwiseAbs().maxCoeff(), 1e-5 * std::max(1.0, xh.norm()));
        EXPECT_LT((phase_jacobian(t) - j).cwiseAbs().maxCoeff(), 1e-5 * std::max(1.0, j.norm()));
    }
}

TEST(HamiltonianChart, BivectorExpExamples) {
    EXPECT_EQ(bivector_exp(0.0), Eigen::Matrix2d::Identity());
    Eigen::Matrix2d quarter;
    quarter << 0.0, -1.0, 1.0, 0.0;
    EXPECT_LT((bivector_exp(std::numbers::pi / 2) - quarter).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((bivector_exp(std::numbers::pi / 2) - oracle::rotation_series(std::numbers::pi / 2)).cwiseAbs().maxCoeff(),
              1e-14);
    Eigen::Matrix2d at_beta;
    at_beta << oracle::frozen::cos_beta_11, -oracle::frozen::sin_beta_11, oracle::frozen::sin_beta_11,
        oracle::frozen::cos_beta_11;
    EXPECT_LT((bivector_exp(oracle::frozen::beta_11) - at_beta).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_THROW(bivector_exp(std::nan("")), ArgumentError);
    EXPECT_THROW(bivector_exp(INFINITY), ArgumentError);
}

TEST(HamiltonianChart, BivectorExpIsOneParameterGroup) {
    const double pi = std::numbers::pi;
    for (int i = 0; i <= 16; ++i) {
        const double a = -pi + 2.0 * pi * i / 16.0;
        const RotationMatrix ra = bivector_exp(a);
        EXPECT_LT((ra.transpose() * ra - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(ra.determinant(), 1.0, 1e-12);
        EXPECT_LT((ra - oracle::rotation_series(a)).cwiseAbs().maxCoeff(), 1e-12);
        for (int j = 0; j <= 16; ++j) {
            const double b = -pi + 2.0 * pi * j / 16.0;
            EXPECT_LT((ra * bivector_exp(b) - bivector_exp(a + b)).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}
