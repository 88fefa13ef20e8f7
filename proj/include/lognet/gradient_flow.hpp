#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "lognet/exp_family.hpp"
#include "lognet/hamiltonian_chart.hpp"

namespace lognet {

/// Margin used to stop an integration before it reaches theta1 = 0 or theta2 = 0.
inline constexpr double kDomainMargin = 1e-9;

/// theta_dot = -I(theta)^{-1} grad Phi(theta) = (theta1^3 / (2 theta2), theta1^2 / 2 + theta2).
Eigen::Vector2d gradient_rhs(NaturalParams t);

struct TrajectorySample {
    double time = 0.0;
    NaturalParams theta;
    PhaseCoords phase;
    double hamiltonian = 0.0;
};

enum class Termination {
    completed,
    theta1_near_zero,
    theta2_near_zero,
    non_finite,
};

std::string_view to_string(Termination t);

struct Trajectory {
    std::vector<TrajectorySample> samples;
    double step = 0.0;
    Termination termination = Termination::completed;

    bool terminated_early() const { return termination != Termination::completed; }
};

/// Classical RK4 with fixed step from time 0 up to t_end. Sample k sits at
/// time k * step; the last sample is at floor(t_end / step) * step (within
/// a relative 1e-9 slack). Stops without emitting the offending state if a
/// stage or step leaves the chart domain.
Trajectory integrate(NaturalParams t0, double step, double t_end);

}  // namespace lognet
