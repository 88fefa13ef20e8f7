#include "lognet/exp_family.hpp"

#include <cmath>
#include <numbers>

#include "checks.hpp"

namespace lognet {

namespace {

const double kHalfLogTwoPi = 0.5 * std::log(2.0 * std::numbers::pi);

template <class Real>
Real potential_closed_form(Real t1, Real t2) {
    const Real half_log_two_pi = Real(0.5) * std::log(Real(2) * std::numbers::pi_v<Real>);
    return -t1 * t1 / (Real(4) * t2) - Real(0.5) * std::log(Real(-2) * t2) + half_log_two_pi;
}

}  // namespace

NaturalParams to_natural(SourceParams p) {
    if (!std::isfinite(p.mu)) {
        throw DomainError(detail::describe("to_natural", "mu must be finite", p.mu));
    }
    if (!(p.sigma > 0.0) || !std::isfinite(p.sigma)) {
        throw DomainError(detail::describe("to_natural", "sigma must be positive", p.sigma));
    }
    const double var = p.sigma * p.sigma;
    return {p.mu / var, -1.0 / (2.0 * var)};
}

SourceParams to_source(NaturalParams t) {
    detail::require_natural(t, "to_source");
    return {-t.theta1 / (2.0 * t.theta2), std::sqrt(-1.0 / (2.0 * t.theta2))};
}

double potential(NaturalParams t) {
    detail::require_natural(t, "potential");
    return potential_closed_form(t.theta1, t.theta2);
}

DualParams dual_params(NaturalParams t) {
    detail::require_natural(t, "dual_params");
    const double eta1 = -t.theta1 / (2.0 * t.theta2);
    const double eta2 = t.theta1 * t.theta1 / (4.0 * t.theta2 * t.theta2) - 1.0 / (2.0 * t.theta2);
    return {eta1, eta2};
}

double dual_potential(NaturalParams t) {
    const DualParams e = dual_params(t);
    return t.theta1 * e.eta1 + t.theta2 * e.eta2 - potential(t);
}

double dual_potential(DualParams e) {
    const double var = e.eta2 - e.eta1 * e.eta1;
    if (!(var > 0.0)) {
        throw DomainError(detail::describe("dual_potential", "eta2 - eta1^2 must be positive", var));
    }
    return -0.5 * (1.0 + std::log(var)) - kHalfLogTwoPi;
}

NaturalParams natural_from_dual(DualParams e) {
    const double var = e.eta2 - e.eta1 * e.eta1;
    if (!(var > 0.0)) {
        throw DomainError(detail::describe("natural_from_dual", "eta2 - eta1^2 must be positive", var));
    }
    return {e.eta1 / var, -0.5 / var};
}

double legendre_residual(NaturalParams t) {
    const DualParams e = dual_params(t);
    return potential(t) + dual_potential(e) - (t.theta1 * e.eta1 + t.theta2 * e.eta2);
}

FisherMatrix fisher(NaturalParams t) {
    detail::require_natural(t, "fisher");
    const double t1 = t.theta1;
    const double t2 = t.theta2;
    const double off = t1 / (2.0 * t2 * t2);
    FisherMatrix m;
    m << -1.0 / (2.0 * t2), off,
         off, (t2 - t1 * t1) / (2.0 * t2 * t2 * t2);
    return m;
}

FisherMatrix fisher_fd(NaturalParams t, double h) {
    detail::require_natural(t, "fisher_fd");
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw ArgumentError(detail::describe("fisher_fd", "step must be positive", h));
    }
    if (!(t.theta2 < -2.0 * h)) {
        throw DomainError(detail::describe("fisher_fd", "step too large: stencil would cross theta2 = 0", h));
    }
    // Stencil values are evaluated in extended precision; in double the
    // cancellation error eps*|Phi|/h^2 is of the same order as the 1e-5 budget.
    using Ext = long double;
    auto phi = [](Ext a, Ext b) { return potential_closed_form(a, b); };
    const Ext a = t.theta1;
    const Ext b = t.theta2;
    const Ext step = h;
    const Ext f0 = phi(a, b);
    const Ext h2 = step * step;

    const Ext d11 = (phi(a + step, b) - 2 * f0 + phi(a - step, b)) / h2;
    const Ext d22 = (phi(a, b + step) - 2 * f0 + phi(a, b - step)) / h2;
    const Ext d12 = (phi(a + step, b + step) - phi(a + step, b - step) - phi(a - step, b + step) +
                     phi(a - step, b - step)) / (4 * h2);

    FisherMatrix m;
    m << static_cast<double>(d11), static_cast<double>(d12),
         static_cast<double>(d12), static_cast<double>(d22);
    return m;
}

FisherMatrix fisher_inverse(NaturalParams t) {
    detail::require_natural(t, "fisher_inverse");
    const double t1 = t.theta1;
    const double t2 = t.theta2;
    FisherMatrix m;
    m << 2.0 * t1 * t1 - 2.0 * t2, 2.0 * t2 * t1,
         2.0 * t2 * t1, 2.0 * t2 * t2;
    return m;
}

double log_pdf(double x, SourceParams p, DensityForm form) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(detail::describe("log_pdf", "x must be positive", x));
    }
    const NaturalParams t = to_natural(p);  // validates sigma
    const double lx = std::log(x);
    switch (form) {
        case DensityForm::direct: {
            const double u = (lx - p.mu) / p.sigma;
            return -0.5 * u * u - std::log(p.sigma) - lx - kHalfLogTwoPi;
        }
        case DensityForm::family:
            return -lx + t.theta1 * lx + t.theta2 * lx * lx - potential(t);
    }
    throw ArgumentError("log_pdf: unknown density form");
}

}  // namespace lognet
