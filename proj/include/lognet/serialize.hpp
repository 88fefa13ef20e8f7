#pragma once

#include <string>

#include <Eigen/Core>
#include <json.hpp>

#include "lognet/gradient_flow.hpp"
#include "lognet/neural_layer.hpp"
#include "lognet/poincare_disk.hpp"
#include "lognet/verification.hpp"

namespace lognet {

/// Shortest decimal string that parses back to exactly `value`; locale independent.
std::string format_double(double value);

nlohmann::json matrix_json(const Eigen::MatrixXd& m);
nlohmann::json complex_json(Complex z);

nlohmann::json network_json(const NetworkDescription& net);

/// build-layer payload: theta, P, Q, beta, z, Omega, t, Z, Zprime, W, mode, network.
nlohmann::json pipeline_json(const PipelineTrace& trace);

nlohmann::json trajectory_json(const Trajectory& traj);

/// Header `t,theta1,theta2,P,Q,H`, one row per sample, `# terminated: <reason>`
/// appended when the integration stopped early.
std::string trajectory_csv(const Trajectory& traj);

struct MobiusResult {
    std::string generator;
    double beta = 0.0;
    DiskPoint z{Complex(0.0, 0.0)};
    SU11Element g;
    DiskPoint gz{Complex(0.0, 0.0)};
};

nlohmann::json mobius_json(const MobiusResult& r);

nlohmann::json report_json(const VerificationReport& report);

/// Throws DomainError if any number in the document is NaN or infinite.
void require_finite(const nlohmann::json& doc);

/// Two-space indented dump with a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace lognet
