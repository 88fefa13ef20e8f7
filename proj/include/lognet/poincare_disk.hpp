#pragma once

#include <complex>

#include <Eigen/Core>

#include "lognet/hamiltonian_chart.hpp"

namespace lognet {

using Complex = std::complex<double>;

/// Point of the open unit disk. Construction rejects |z| >= 1.
class DiskPoint {
public:
    explicit DiskPoint(Complex value);

    Complex value() const { return value_; }
    double modulus() const { return std::abs(value_); }

private:
    Complex value_;
};

/// SU(1,1) element [[alpha, xi], [conj(xi), conj(alpha)]] with |alpha|^2 - |xi|^2 = 1.
/// Stored as the pair (alpha, xi); validity is checked where it matters.
struct SU11Element {
    Complex alpha{1.0, 0.0};
    Complex xi{0.0, 0.0};

    /// |alpha|^2 - |xi|^2 - 1
    double membership_defect() const { return std::norm(alpha) - std::norm(xi) - 1.0; }

    Eigen::Matrix2cd matrix() const;

    static SU11Element identity() { return {}; }
    /// Reads (alpha, xi) from the first row; the second row is assumed to be its conjugate.
    static SU11Element from_matrix(const Eigen::Matrix2cd& m);
};

enum class Generator { g1, g2 };

inline constexpr double kMembershipTolerance = 1e-9;

/// beta = atan2(Q, P), so cos(beta) = P / |(P, Q)| and sin(beta) = Q / |(P, Q)|.
double beta_angle(PhaseCoords c);

/// z = (cos(beta) + i sin(beta)) / 2.
DiskPoint embed(PhaseCoords c);
DiskPoint embed_angle(double beta);

/// g1 = (cosh(cos beta), sinh(cos beta)), g2 = (cosh(sin beta), sinh(sin beta)).
SU11Element generator(Generator which, double beta);

SU11Element inverse(const SU11Element& g);

/// Group product g * h.
SU11Element compose(const SU11Element& g, const SU11Element& h);

/// g.z = (alpha z + xi) / (conj(xi) z + conj(alpha)).
DiskPoint mobius(const SU11Element& g, const DiskPoint& z);

}  // namespace lognet
