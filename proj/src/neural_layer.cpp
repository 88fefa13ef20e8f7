#include "lognet/neural_layer.hpp"

#include <cmath>
#include <stdexcept>

#include "checks.hpp"
#include "lognet/gradient_flow.hpp"

namespace lognet {

std::string_view to_string(ActivationMode mode) {
    return mode == ActivationMode::paper ? "paper" : "exp";
}

ActivationMode parse_activation_mode(std::string_view name) {
    if (name == "paper") return ActivationMode::paper;
    if (name == "exp") return ActivationMode::exp;
    throw ArgumentError("unknown activation mode '" + std::string(name) + "' (expected paper or exp)");
}

SE2Weight::SE2Weight() : m_(Eigen::Matrix3d::Identity()) {}

SE2Weight::SE2Weight(const RotationMatrix& rotation, const Eigen::Vector2d& translation)
    : m_(Eigen::Matrix3d::Identity()) {
    if (!rotation.allFinite() || !translation.allFinite()) {
        throw ArgumentError("SE2Weight: non-finite entries");
    }
    const double orth = (rotation.transpose() * rotation - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff();
    if (orth > 1e-12 || std::abs(rotation.determinant() - 1.0) > 1e-12) {
        throw ArgumentError(detail::describe("SE2Weight", "upper-left block is not a rotation", orth));
    }
    m_.topLeftCorner<2, 2>() = rotation;
    m_.topRightCorner<2, 1>() = translation;
}

SE2Weight SE2Weight::from_matrix(const Eigen::Matrix3d& m) {
    if (m(2, 0) != 0.0 || m(2, 1) != 0.0 || m(2, 2) != 1.0) {
        throw ArgumentError("SE2Weight: bottom row must be (0, 0, 1)");
    }
    return SE2Weight(m.topLeftCorner<2, 2>(), m.topRightCorner<2, 1>());
}

SE2Weight SE2Weight::operator*(const SE2Weight& rhs) const {
    SE2Weight out;
    out.m_.topLeftCorner<2, 2>() = rotation() * rhs.rotation();
    out.m_.topRightCorner<2, 1>() = rotation() * rhs.translation() + translation();
    return out;
}

Complex activation(const DiskPoint& z, ActivationMode mode) {
    const Complex w = z.value();
    const double gain = std::exp(w.real());
    const double phase = mode == ActivationMode::paper ? 2.0 * w.imag() : w.imag();
    return {gain * std::cos(phase), gain * std::sin(phase)};
}

LayerState build_layer(double beta, ActivationMode mode) {
    detail::require_finite_angle(beta, "build_layer");
    const DiskPoint z = embed_angle(beta);
    const Complex out = activation(z, mode);

    LayerState s;
    s.beta = beta;
    s.mode = mode;
    s.Z = {z.value().real(), z.value().imag()};
    s.Zprime = {out.real(), out.imag()};
    const RotationMatrix omega = bivector_exp(beta);
    s.weight = SE2Weight(omega, s.Zprime - omega * s.Z);
    return s;
}

LayerOutput apply_layer(const SE2Weight& w, const Eigen::Vector3d& input) {
    if (input.z() != 1.0) {
        throw ArgumentError(detail::describe("apply_layer", "homogeneous input needs third component 1", input.z()));
    }
    LayerOutput r;
    const Eigen::Matrix3d& m = w.matrix();
    for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i) {
            s += m(k, i) * input(i);
        }
        r.sums[static_cast<std::size_t>(k)] = s;
        r.output(k) = s;
    }
    return r;
}

PipelineTrace run_pipeline(NaturalParams t, ActivationMode mode) {
    PipelineTrace tr;
    // 1-2: potential and dual coordinates.
    tr.theta = t;
    tr.source = to_source(t);
    tr.potential = potential(t);
    tr.eta = dual_params(t);
    // 3: inverse metric.
    tr.fisher_inv = fisher_inverse(t);
    // 4: gradient system.
    tr.flow = -tr.fisher_inv * tr.eta.vec();
    // 5: Hamiltonian form, checked through the chart.
    tr.phase = to_phase(t);
    tr.hamiltonian = hamiltonian(tr.phase);
    const Eigen::Vector2d pushed = phase_jacobian(t) * tr.flow;
    tr.equivalence_residual = (pushed - hamiltonian_vector_field(tr.phase)).cwiseAbs().maxCoeff();
    if (!(tr.equivalence_residual < kEquivalenceTolerance)) {
        throw std::logic_error(detail::describe("pipeline", "gradient flow is not Hamiltonian in the (P, Q) chart",
                                                tr.equivalence_residual));
    }
    // 6: disk input.
    tr.z = embed(tr.phase);
    // 7: rotation and translation.
    tr.layer = build_layer(beta_angle(tr.phase), mode);
    // 8: output.
    tr.output = apply_layer(tr.layer.weight, {tr.layer.Z.x(), tr.layer.Z.y(), 1.0});
    return tr;
}

PipelineTrace run_pipeline(SourceParams p, ActivationMode mode) {
    const NaturalParams t = to_natural(p);
    if (p.mu == 0.0) {
        throw ChartSingularity("pipeline: mu = 0 gives theta1 = 0, where the chart P = 2*theta2/theta1 is undefined");
    }
    return run_pipeline(t, mode);
}

LayerState pipeline(SourceParams p, ActivationMode mode) {
    return run_pipeline(p, mode).layer;
}

NetworkDescription export_network(const LayerState& s) {
    NetworkDescription d;
    const Eigen::Matrix3d& w = s.weight.matrix();
    const Eigen::Vector3d in(s.Z.x(), s.Z.y(), 1.0);
    const LayerOutput out = apply_layer(s.weight, in);
    for (int i = 0; i < 3; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        d.inputs[idx] = {"z" + std::to_string(i + 1), in(i)};
        d.outputs[idx] = {"z'" + std::to_string(i + 1), out.output(i)};
    }
    d.edges.reserve(9);
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 3; ++i) {
            d.edges.push_back({i + 1, k + 1, w(k, i)});
        }
    }
    d.sums = out.sums;
    return d;
}

}  // namespace lognet
