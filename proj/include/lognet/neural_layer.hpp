#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "lognet/exp_family.hpp"
#include "lognet/hamiltonian_chart.hpp"
#include "lognet/poincare_disk.hpp"

namespace lognet {

/// Two readings of the layer's signal function.
///   exp:   f(z) = e^z.
///   paper: f(z) = e^{Re z} (cos(2 Im z) + i sin(2 Im z)); at an embedded
///          point this is e^{cos(beta)/2} (cos(sin beta), sin(sin beta)),
///          the output used by the constructed layer.
enum class ActivationMode { paper, exp };

std::string_view to_string(ActivationMode mode);
ActivationMode parse_activation_mode(std::string_view name);

/// Homogeneous 3x3 matrix [[Omega, t], [0 0 1]] with Omega a rotation.
class SE2Weight {
public:
    SE2Weight();
    SE2Weight(const RotationMatrix& rotation, const Eigen::Vector2d& translation);

    /// Rejects matrices whose bottom row is not exactly (0, 0, 1) or whose
    /// upper-left block is not a proper rotation to 1e-12.
    static SE2Weight from_matrix(const Eigen::Matrix3d& m);

    const Eigen::Matrix3d& matrix() const { return m_; }
    RotationMatrix rotation() const { return m_.topLeftCorner<2, 2>(); }
    Eigen::Vector2d translation() const { return m_.topRightCorner<2, 1>(); }

    SE2Weight operator*(const SE2Weight& rhs) const;

private:
    Eigen::Matrix3d m_;
};

struct LayerState {
    Eigen::Vector2d Z = Eigen::Vector2d::Zero();
    Eigen::Vector2d Zprime = Eigen::Vector2d::Zero();
    double beta = 0.0;
    ActivationMode mode = ActivationMode::paper;
    SE2Weight weight;
};

struct LayerOutput {
    Eigen::Vector3d output;
    /// S_k = sum_i w_{k,i} z_i, one per output neuron.
    std::array<double, 3> sums{};
};

Complex activation(const DiskPoint& z, ActivationMode mode);

LayerState build_layer(double beta, ActivationMode mode);

LayerOutput apply_layer(const SE2Weight& w, const Eigen::Vector3d& input);

/// Everything the eight construction steps produce on the way to the layer.
struct PipelineTrace {
    SourceParams source;
    NaturalParams theta;
    DualParams eta;
    double potential = 0.0;
    FisherMatrix fisher_inv;
    Eigen::Vector2d flow = Eigen::Vector2d::Zero();
    PhaseCoords phase;
    double hamiltonian = 0.0;
    double equivalence_residual = 0.0;
    DiskPoint z{Complex(0.0, 0.0)};
    LayerState layer;
    LayerOutput output;
};

/// Bound on |pushforward_rhs - X_H| the pipeline enforces before building the layer.
inline constexpr double kEquivalenceTolerance = 1e-10;

PipelineTrace run_pipeline(SourceParams p, ActivationMode mode);
PipelineTrace run_pipeline(NaturalParams t, ActivationMode mode);

LayerState pipeline(SourceParams p, ActivationMode mode);

struct NetworkNode {
    std::string name;
    double value = 0.0;
};

struct NetworkEdge {
    int from = 0;  // input index i, 1-based
    int to = 0;    // output index k, 1-based
    double weight = 0.0;
};

/// Fully connected 3 -> 3 layer: inputs (z1, z2, z3 = 1), outputs (z'1, z'2, z'3 = 1),
/// nine edges w_{k,i} in row-major order and the summing values S_k.
struct NetworkDescription {
    std::array<NetworkNode, 3> inputs;
    std::array<NetworkNode, 3> outputs;
    std::vector<NetworkEdge> edges;
    std::array<double, 3> sums{};
};

NetworkDescription export_network(const LayerState& s);

}  // namespace lognet
