#include "lognet/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "lognet/gradient_flow.hpp"
#include "lognet/hamiltonian_chart.hpp"
#include "lognet/neural_layer.hpp"
#include "lognet/poincare_disk.hpp"

namespace lognet {

std::vector<NaturalParams> standard_grid() {
    std::vector<NaturalParams> grid;
    for (double t1 : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
        for (double t2 : {-0.25, -0.5, -1.0, -2.0}) {
            grid.push_back({t1, t2});
        }
    }
    return grid;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::render() const {
    std::string out;
    char line[160];
    for (const auto& c : checks) {
        std::snprintf(line, sizeof line, "%s %-26s residual=%.6e tol=%.1e\n", c.passed ? "PASS" : "FAIL",
                      c.name.c_str(), c.residual, c.tolerance);
        out += line;
    }
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; });
    std::snprintf(line, sizeof line, "%zu checks, %td failed\n", checks.size(), failed);
    out += line;
    return out;
}

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

double grid_max(const std::function<double(NaturalParams)>& f) {
    double worst = 0.0;
    for (const auto& t : standard_grid()) {
        worst = std::max(worst, f(t));
    }
    return worst;
}

struct GroupSample {
    SU11Element g;
    SU11Element h;
    DiskPoint z;
};

std::vector<GroupSample> group_samples(std::size_t n) {
    std::mt19937_64 rng(kVerificationSeed);
    std::uniform_real_distribution<double> rapidity(0.0, 2.0);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> radius(0.0, 0.95);
    auto element = [&] {
        const double r = rapidity(rng);
        return SU11Element{std::polar(std::cosh(r), angle(rng)), std::polar(std::sinh(r), angle(rng))};
    };
    std::vector<GroupSample> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        SU11Element g = element();
        SU11Element h = element();
        const double rho = radius(rng);
        out.push_back({g, h, DiskPoint(std::polar(rho, angle(rng)))});
    }
    return out;
}

}  // namespace

VerificationReport run_verification(std::optional<double> tolerance_override) {
    VerificationReport report;
    auto add = [&](std::string name, double residual, double tol) {
        const double effective = tolerance_override.value_or(tol);
        report.checks.push_back({std::move(name), residual, effective, std::isfinite(residual) && residual <= effective});
    };

    add("legendre_identity", grid_max([](NaturalParams t) { return std::abs(legendre_residual(t)); }), 1e-12);

    add("fisher_finite_difference",
        grid_max([](NaturalParams t) { return max_abs(fisher(t) - fisher_fd(t, kDefaultFdStep)); }), 1e-5);

    add("fisher_inverse_product", grid_max([](NaturalParams t) {
            return max_abs(fisher(t) * fisher_inverse(t) - Eigen::Matrix2d::Identity());
        }),
        1e-12);

    add("gradient_system_form", grid_max([](NaturalParams t) {
            const Eigen::Vector2d natural = -fisher_inverse(t) * dual_params(t).vec();
            return (gradient_rhs(t) - natural).cwiseAbs().maxCoeff();
        }),
        1e-12);

    add("hamiltonian_equivalence", grid_max([](NaturalParams t) {
            return (pushforward_rhs(t) - hamiltonian_vector_field(to_phase(t))).cwiseAbs().maxCoeff();
        }),
        1e-10);

    add("chart_roundtrip", grid_max([](NaturalParams t) {
            const NaturalParams back = from_phase(to_phase(t));
            return std::max(std::abs(back.theta1 - t.theta1) / std::abs(t.theta1),
                            std::abs(back.theta2 - t.theta2) / std::abs(t.theta2));
        }),
        1e-12);

    add("angular_hamiltonian", grid_max([](NaturalParams t) {
            const PhaseCoords c = to_phase(t);
            return std::abs(-c.P * c.Q - hamiltonian_angular(c)) / (c.P * c.P + c.Q * c.Q);
        }),
        1e-12);

    {
        double worst = 0.0;
        for (const auto& t : standard_grid()) {
            const Trajectory traj = integrate(t, 1e-3, 1.0);
            if (traj.terminated_early()) {
                continue;
            }
            const double h0 = traj.samples.front().hamiltonian;
            for (const auto& s : traj.samples) {
                worst = std::max(worst, std::abs(s.hamiltonian - h0));
            }
        }
        add("hamiltonian_conservation", worst, 1e-8);
    }

    {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double beta = -std::numbers::pi + 2.0 * std::numbers::pi * i / 100.0;
            for (Generator which : {Generator::g1, Generator::g2}) {
                worst = std::max(worst, std::abs(generator(which, beta).membership_defect()));
            }
        }
        add("su11_membership", worst, 1e-14);
    }

    {
        double axioms = 0.0;
        double radius = 0.0;
        for (const auto& s : group_samples(1000)) {
            const Complex z = s.z.value();
            const DiskPoint gz = mobius(s.g, s.z);
            radius = std::max(radius, gz.modulus());
            axioms = std::max(axioms, std::abs(mobius(SU11Element::identity(), s.z).value() - z));
            axioms = std::max(axioms, std::abs(mobius(inverse(s.g), gz).value() - z));
            axioms = std::max(axioms, std::abs(mobius(compose(s.g, s.h), s.z).value() -
                                               mobius(s.g, mobius(s.h, s.z)).value()));
        }
        add("group_action_axioms", axioms, 1e-12);
        // Disk preservation is a strict bound, not a tolerance.
        report.checks.push_back({"disk_preservation", radius, 1.0, radius < 1.0});
    }

    {
        double exact = 0.0;
        double closed_t = 0.0;
        double rotation = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double beta = std::numbers::pi * (i + 0.5) / 64.0;
            const LayerState s = build_layer(beta, ActivationMode::paper);
            const LayerOutput out = apply_layer(s.weight, {s.Z.x(), s.Z.y(), 1.0});
            exact = std::max({exact, std::abs(out.output.x() - s.Zprime.x()), std::abs(out.output.y() - s.Zprime.y()),
                              std::abs(out.output.z() - 1.0)});
            const double gain = std::exp(0.5 * std::cos(beta));
            const Eigen::Vector2d displayed(gain * std::cos(std::sin(beta)) - 0.5 * std::cos(2.0 * beta),
                                            gain * std::sin(std::sin(beta)) - std::cos(beta) * std::sin(beta));
            closed_t = std::max(closed_t, (s.weight.translation() - displayed).cwiseAbs().maxCoeff());
            const RotationMatrix omega = s.weight.rotation();
            rotation = std::max({rotation, max_abs(omega.transpose() * omega - Eigen::Matrix2d::Identity()),
                                 std::abs(omega.determinant() - 1.0)});
        }
        add("layer_exactness", exact, 1e-14);
        add("translation_closed_form", closed_t, 1e-13);
        add("rotation_block", rotation, 1e-12);
    }

    return report;
}

}  // namespace lognet
