#pragma once

#include <cmath>
#include <sstream>
#include <string_view>

#include "lognet/errors.hpp"
#include "lognet/exp_family.hpp"

namespace lognet::detail {

inline std::string describe(std::string_view op, std::string_view what, double value) {
    std::ostringstream os;
    os.precision(17);
    os << op << ": " << what << " (got " << value << ")";
    return os.str();
}

inline void require_natural(NaturalParams t, std::string_view op) {
    if (!std::isfinite(t.theta1) || !std::isfinite(t.theta2)) {
        throw DomainError(describe(op, "natural parameters must be finite", t.theta1));
    }
    if (!(t.theta2 < 0.0)) {
        throw DomainError(describe(op, "theta2 must be negative", t.theta2));
    }
}

inline void require_chart(NaturalParams t, std::string_view op) {
    require_natural(t, op);
    if (t.theta1 == 0.0) {
        throw ChartSingularity(describe(op, "chart singularity: theta1 = 0 (mu = 0) leaves P = 2*theta2/theta1 undefined",
                                        t.theta1));
    }
}

inline void require_finite_angle(double beta, std::string_view op) {
    if (!std::isfinite(beta)) {
        throw ArgumentError(describe(op, "angle must be finite", beta));
    }
}

}  // namespace lognet::detail
