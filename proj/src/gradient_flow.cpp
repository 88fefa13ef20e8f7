#include "lognet/gradient_flow.hpp"

#include <cmath>
#include <optional>

#include "checks.hpp"

namespace lognet {

namespace {

Eigen::Vector2d rhs(const Eigen::Vector2d& th) {
    const double t1 = th.x();
    const double t2 = th.y();
    return {t1 * t1 * t1 / (2.0 * t2), 0.5 * t1 * t1 + t2};
}

// Reason a state cannot be used, or nullopt when it is inside the chart domain.
std::optional<Termination> out_of_domain(const Eigen::Vector2d& th) {
    if (!th.allFinite()) {
        return Termination::non_finite;
    }
    if (th.y() >= -kDomainMargin) {
        return Termination::theta2_near_zero;
    }
    if (std::abs(th.x()) <= kDomainMargin) {
        return Termination::theta1_near_zero;
    }
    return std::nullopt;
}

TrajectorySample record(double time, const Eigen::Vector2d& th) {
    TrajectorySample s;
    s.time = time;
    s.theta = {th.x(), th.y()};
    s.phase = to_phase(s.theta);
    s.hamiltonian = hamiltonian(s.phase);
    return s;
}

}  // namespace

Eigen::Vector2d gradient_rhs(NaturalParams t) {
    detail::require_natural(t, "gradient_rhs");
    return rhs(t.vec());
}

std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::completed: return "completed";
        case Termination::theta1_near_zero: return "theta1 reached the chart singularity |theta1| <= 1e-9";
        case Termination::theta2_near_zero: return "theta2 reached the domain boundary theta2 >= -1e-9";
        case Termination::non_finite: return "state became non-finite";
    }
    return "unknown";
}

Trajectory integrate(NaturalParams t0, double step, double t_end) {
    detail::require_chart(t0, "integrate");
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw ArgumentError(detail::describe("integrate", "step must be positive", step));
    }
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
        throw ArgumentError(detail::describe("integrate", "t_end must be non-negative", t_end));
    }
    if (auto bad = out_of_domain(t0.vec())) {
        throw DomainError(detail::describe("integrate", "initial point too close to the chart boundary", t0.theta1));
    }

    const auto n_steps = static_cast<long long>(std::floor(t_end / step * (1.0 + 1e-9)));

    Trajectory traj;
    traj.step = step;
    traj.samples.reserve(static_cast<std::size_t>(n_steps) + 1);

    Eigen::Vector2d th = t0.vec();
    traj.samples.push_back(record(0.0, th));

    for (long long k = 0; k < n_steps; ++k) {
        const Eigen::Vector2d k1 = rhs(th);
        Eigen::Vector2d stage = th + 0.5 * step * k1;
        if (auto bad = out_of_domain(stage)) { traj.termination = *bad; break; }
        const Eigen::Vector2d k2 = rhs(stage);
        stage = th + 0.5 * step * k2;
        if (auto bad = out_of_domain(stage)) { traj.termination = *bad; break; }
        const Eigen::Vector2d k3 = rhs(stage);
        stage = th + step * k3;
        if (auto bad = out_of_domain(stage)) { traj.termination = *bad; break; }
        const Eigen::Vector2d k4 = rhs(stage);

        const Eigen::Vector2d next = th + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (auto bad = out_of_domain(next)) { traj.termination = *bad; break; }
        th = next;
        traj.samples.push_back(record(static_cast<double>(k + 1) * step, th));
    }
    return traj;
}

}  // namespace lognet
