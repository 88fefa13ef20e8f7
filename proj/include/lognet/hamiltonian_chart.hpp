#pragma once

#include <Eigen/Core>
#include <Eigen/LU>

#include "lognet/exp_family.hpp"

namespace lognet {

/// Phase chart P = 2 theta2 / theta1, Q = (theta1^2 - 2 theta2) / (4 theta2^2).
/// The chart image is {P != 0, Q > 0, Q P^2 > 1}.
struct PhaseCoords {
    double P = 0.0;
    double Q = 0.0;

    Eigen::Vector2d vec() const { return {P, Q}; }
};

using RotationMatrix = Eigen::Matrix2d;

/// Constant Poisson bivector [[0, -1], [1, 0]].
const Eigen::Matrix2d& poisson_bivector();

PhaseCoords to_phase(NaturalParams t);
NaturalParams from_phase(PhaseCoords c);

/// Jacobian d(P, Q)/d(theta1, theta2).
Eigen::Matrix2d phase_jacobian(NaturalParams t);

/// H = -P Q. Cross-checked against the angular form on every call.
double hamiltonian(PhaseCoords c);

/// -(P^2 + Q^2) cos(beta) sin(beta) with beta the polar angle of (P, Q).
double hamiltonian_angular(PhaseCoords c);

Eigen::Vector2d hamiltonian_gradient(PhaseCoords c);

/// X_H = Lambda * grad H = (P, -Q).
Eigen::Vector2d hamiltonian_vector_field(PhaseCoords c);

/// Gradient-flow field pushed through the phase chart: J(theta) * theta_dot.
Eigen::Vector2d pushforward_rhs(NaturalParams t);

/// exp(beta * Lambda), the planar rotation by beta.
RotationMatrix bivector_exp(double beta);

}  // namespace lognet
