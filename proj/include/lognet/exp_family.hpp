#pragma once

#include <Eigen/Core>

namespace lognet {

/// Lognormal parameters: mean and scale of log(X).
struct SourceParams {
    double mu = 0.0;
    double sigma = 1.0;
};

/// Natural (canonical) parameters theta1 = mu/sigma^2, theta2 = -1/(2 sigma^2).
struct NaturalParams {
    double theta1 = 0.0;
    double theta2 = -0.5;

    Eigen::Vector2d vec() const { return {theta1, theta2}; }
};

/// Expectation parameters eta = grad Phi(theta) = (E[log X], E[(log X)^2]).
struct DualParams {
    double eta1 = 0.0;
    double eta2 = 1.0;

    Eigen::Vector2d vec() const { return {eta1, eta2}; }
};

using FisherMatrix = Eigen::Matrix2d;

enum class DensityForm { direct, family };

inline constexpr double kDefaultFdStep = 1e-5;

NaturalParams to_natural(SourceParams p);
SourceParams to_source(NaturalParams t);

/// Log-partition function Phi(theta) of the lognormal family.
double potential(NaturalParams t);

/// Gradient of the potential, eta_i = dPhi/dtheta_i.
DualParams dual_params(NaturalParams t);

/// Psi(eta(theta)) computed as theta.eta - Phi(theta).
double dual_potential(NaturalParams t);

/// Closed-form Legendre conjugate Psi(eta) = -(1 + log(2 pi (eta2 - eta1^2))) / 2.
/// Independent of the theta-side route; requires eta2 - eta1^2 > 0.
double dual_potential(DualParams e);

/// Inverse Legendre map theta = grad Psi(eta).
NaturalParams natural_from_dual(DualParams e);

/// Phi(theta) + Psi(eta(theta)) - theta.eta(theta), with Psi taken from the
/// closed form in eta so the residual is not zero by construction.
double legendre_residual(NaturalParams t);

/// Analytic Hessian of Phi.
FisherMatrix fisher(NaturalParams t);

/// Central-difference Hessian of Phi. Needs theta2 < -2h so every stencil
/// point stays inside the domain.
FisherMatrix fisher_fd(NaturalParams t, double h = kDefaultFdStep);

FisherMatrix fisher_inverse(NaturalParams t);

double log_pdf(double x, SourceParams p, DensityForm form);

}  // namespace lognet
