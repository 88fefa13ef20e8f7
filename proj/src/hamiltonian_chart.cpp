#include "lognet/hamiltonian_chart.hpp"

#include <cmath>
#include <stdexcept>

#include "checks.hpp"
#include "lognet/gradient_flow.hpp"

namespace lognet {

namespace {

void require_off_origin(PhaseCoords c, const char* op) {
    if (!std::isfinite(c.P) || !std::isfinite(c.Q)) {
        throw DomainError(detail::describe(op, "phase coordinates must be finite", c.P));
    }
    if (c.P == 0.0 && c.Q == 0.0) {
        throw DomainError(std::string(op) + ": (P, Q) = (0, 0) has no polar angle");
    }
}

}  // namespace

const Eigen::Matrix2d& poisson_bivector() {
    static const Eigen::Matrix2d lambda = (Eigen::Matrix2d() << 0.0, -1.0, 1.0, 0.0).finished();
    return lambda;
}

PhaseCoords to_phase(NaturalParams t) {
    detail::require_chart(t, "to_phase");
    const double t1 = t.theta1;
    const double t2 = t.theta2;
    return {2.0 * t2 / t1, (t1 * t1 - 2.0 * t2) / (4.0 * t2 * t2)};
}

NaturalParams from_phase(PhaseCoords c) {
    if (!std::isfinite(c.P) || !std::isfinite(c.Q)) {
        throw DomainError(detail::describe("from_phase", "phase coordinates must be finite", c.P));
    }
    if (c.P == 0.0) {
        throw ChartSingularity("from_phase: P = 0 is not in the chart image");
    }
    const double qp2 = c.Q * c.P * c.P;
    if (!(qp2 > 1.0)) {
        throw DomainError(detail::describe("from_phase", "outside chart image, need Q*P^2 > 1", qp2));
    }
    const double t2 = c.P * c.P / (2.0 * (1.0 - qp2));
    return {2.0 * t2 / c.P, t2};
}

Eigen::Matrix2d phase_jacobian(NaturalParams t) {
    detail::require_chart(t, "phase_jacobian");
    const double t1 = t.theta1;
    const double t2 = t.theta2;
    Eigen::Matrix2d j;
    // dP/dt1, dP/dt2
    // dQ/dt1, dQ/dt2 with Q = t1^2/(4 t2^2) - 1/(2 t2)
    j << -2.0 * t2 / (t1 * t1), 2.0 / t1,
         t1 / (2.0 * t2 * t2), -t1 * t1 / (2.0 * t2 * t2 * t2) + 1.0 / (2.0 * t2 * t2);
    return j;
}

double hamiltonian_angular(PhaseCoords c) {
    require_off_origin(c, "hamiltonian_angular");
    const double r = std::hypot(c.P, c.Q);
    const double cos_b = c.P / r;
    const double sin_b = c.Q / r;
    return -(c.P * c.P + c.Q * c.Q) * cos_b * sin_b;
}

double hamiltonian(PhaseCoords c) {
    require_off_origin(c, "hamiltonian");
    const double h = -c.P * c.Q;
    const double scale = c.P * c.P + c.Q * c.Q;
    if (std::abs(h - hamiltonian_angular(c)) > 1e-12 * scale) {
        throw std::logic_error("hamiltonian: product and angular forms disagree");
    }
    return h;
}

Eigen::Vector2d hamiltonian_gradient(PhaseCoords c) {
    return {-c.Q, -c.P};
}

Eigen::Vector2d hamiltonian_vector_field(PhaseCoords c) {
    require_off_origin(c, "hamiltonian_vector_field");
    return poisson_bivector() * hamiltonian_gradient(c);
}

Eigen::Vector2d pushforward_rhs(NaturalParams t) {
    return phase_jacobian(t) * gradient_rhs(t);
}

RotationMatrix bivector_exp(double beta) {
    detail::require_finite_angle(beta, "bivector_exp");
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    RotationMatrix r;
    r << c, -s,
         s, c;
    return r;
}

}  // namespace lognet
