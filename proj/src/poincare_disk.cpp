#include "lognet/poincare_disk.hpp"

#include <cmath>

#include "checks.hpp"

namespace lognet {

namespace {

void require_member(const SU11Element& g, const char* op) {
    const double defect = g.membership_defect();
    if (!std::isfinite(defect) || std::abs(defect) > kMembershipTolerance) {
        throw InvalidElement(detail::describe(op, "|alpha|^2 - |xi|^2 != 1", defect + 1.0));
    }
}

}  // namespace

DiskPoint::DiskPoint(Complex value) : value_(value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) || !(std::abs(value) < 1.0)) {
        throw DomainError(detail::describe("DiskPoint", "point must lie strictly inside the unit disk",
                                           std::abs(value)));
    }
}

Eigen::Matrix2cd SU11Element::matrix() const {
    Eigen::Matrix2cd m;
    m << alpha, xi,
         std::conj(xi), std::conj(alpha);
    return m;
}

SU11Element SU11Element::from_matrix(const Eigen::Matrix2cd& m) {
    return {m(0, 0), m(0, 1)};
}

double beta_angle(PhaseCoords c) {
    if (!std::isfinite(c.P) || !std::isfinite(c.Q) || (c.P == 0.0 && c.Q == 0.0)) {
        throw DomainError("beta_angle: (P, Q) must be finite and away from the origin");
    }
    return std::atan2(c.Q, c.P);
}

DiskPoint embed_angle(double beta) {
    detail::require_finite_angle(beta, "embed_angle");
    return DiskPoint(Complex(0.5 * std::cos(beta), 0.5 * std::sin(beta)));
}

DiskPoint embed(PhaseCoords c) {
    if (!std::isfinite(c.P) || !std::isfinite(c.Q) || (c.P == 0.0 && c.Q == 0.0)) {
        throw DomainError("embed: (P, Q) must be finite and away from the origin");
    }
    const double r = std::hypot(c.P, c.Q);
    return DiskPoint(Complex(0.5 * c.P / r, 0.5 * c.Q / r));
}

SU11Element generator(Generator which, double beta) {
    detail::require_finite_angle(beta, "generator");
    const double arg = which == Generator::g1 ? std::cos(beta) : std::sin(beta);
    return {Complex(std::cosh(arg), 0.0), Complex(std::sinh(arg), 0.0)};
}

SU11Element inverse(const SU11Element& g) {
    require_member(g, "inverse");
    // [[a, x], [x*, a*]]^-1 = [[a*, -x], [-x*, a]] for unit determinant.
    return {std::conj(g.alpha), -g.xi};
}

SU11Element compose(const SU11Element& g, const SU11Element& h) {
    require_member(g, "compose");
    require_member(h, "compose");
    return SU11Element::from_matrix(g.matrix() * h.matrix());
}

DiskPoint mobius(const SU11Element& g, const DiskPoint& z) {
    require_member(g, "mobius");
    const Complex w = z.value();
    const Complex den = std::conj(g.xi) * w + std::conj(g.alpha);
    if (std::abs(den) < 1e-15) {
        throw NumericalSingularity("mobius: vanishing denominator");
    }
    return DiskPoint((g.alpha * w + g.xi) / den);
}

}  // namespace lognet
