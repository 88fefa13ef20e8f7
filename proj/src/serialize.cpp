#include "lognet/serialize.hpp"

#include <charconv>
#include <cmath>

#include "lognet/errors.hpp"

namespace lognet {

using nlohmann::json;

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

json matrix_json(const Eigen::MatrixXd& m) {
    json data = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            data.push_back(m(r, c));
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

json complex_json(Complex z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

namespace {

json vec2(const Eigen::Vector2d& v) { return json::array({v.x(), v.y()}); }

}  // namespace

json network_json(const NetworkDescription& net) {
    json inputs = json::array();
    json outputs = json::array();
    for (const auto& n : net.inputs) inputs.push_back({{"name", n.name}, {"value", n.value}});
    for (const auto& n : net.outputs) outputs.push_back({{"name", n.name}, {"value", n.value}});
    json edges = json::array();
    for (const auto& e : net.edges) {
        edges.push_back({{"from", e.from},
                         {"to", e.to},
                         {"label", "w_" + std::to_string(e.to) + std::to_string(e.from)},
                         {"weight", e.weight}});
    }
    return {{"inputs", inputs},
            {"outputs", outputs},
            {"edges", edges},
            {"sums", json::array({net.sums[0], net.sums[1], net.sums[2]})}};
}

json pipeline_json(const PipelineTrace& tr) {
    const LayerState& s = tr.layer;
    json doc = {
        {"mu", tr.source.mu},
        {"sigma", tr.source.sigma},
        {"theta", {{"theta1", tr.theta.theta1}, {"theta2", tr.theta.theta2}}},
        {"P", tr.phase.P},
        {"Q", tr.phase.Q},
        {"H", tr.hamiltonian},
        {"beta", s.beta},
        {"z", complex_json(tr.z.value())},
        {"Omega", matrix_json(s.weight.rotation())},
        {"t", vec2(s.weight.translation())},
        {"Z", vec2(s.Z)},
        {"Zprime", vec2(s.Zprime)},
        {"W", matrix_json(s.weight.matrix())},
        {"mode", std::string(to_string(s.mode))},
        {"network", network_json(export_network(s))},
    };
    require_finite(doc);
    return doc;
}

json trajectory_json(const Trajectory& traj) {
    json samples = json::array();
    for (const auto& s : traj.samples) {
        samples.push_back({{"t", s.time},
                           {"theta1", s.theta.theta1},
                           {"theta2", s.theta.theta2},
                           {"P", s.phase.P},
                           {"Q", s.phase.Q},
                           {"H", s.hamiltonian}});
    }
    json doc = {{"step", traj.step}, {"samples", std::move(samples)}, {"terminated_early", traj.terminated_early()}};
    if (traj.terminated_early()) {
        doc["terminated"] = std::string(to_string(traj.termination));
    }
    require_finite(doc);
    return doc;
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string out = "t,theta1,theta2,P,Q,H\n";
    for (const auto& s : traj.samples) {
        for (double v : {s.time, s.theta.theta1, s.theta.theta2, s.phase.P, s.phase.Q}) {
            if (!std::isfinite(v)) throw DomainError("trajectory_csv: non-finite sample");
            out += format_double(v);
            out += ',';
        }
        out += format_double(s.hamiltonian);
        out += '\n';
    }
    if (traj.terminated_early()) {
        out += "# terminated: ";
        out += to_string(traj.termination);
        out += '\n';
    }
    return out;
}

json mobius_json(const MobiusResult& r) {
    json doc = {
        {"generator", r.generator},
        {"beta", r.beta},
        {"z", complex_json(r.z.value())},
        {"g", {{"alpha", complex_json(r.g.alpha)}, {"xi", complex_json(r.g.xi)}}},
        {"gz", complex_json(r.gz.value())},
        {"gz_modulus", r.gz.modulus()},
    };
    require_finite(doc);
    return doc;
}

json report_json(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed}});
    }
    return {{"checks", checks}, {"all_passed", report.all_passed()}};
}

void require_finite(const json& doc) {
    if (doc.is_number_float() && !std::isfinite(doc.get<double>())) {
        throw DomainError("refusing to serialize a non-finite value");
    }
    if (doc.is_structured()) {
        for (const auto& child : doc) {
            require_finite(child);
        }
    }
}

std::string dump(const json& doc) {
    return doc.dump(2) + "\n";
}

}  // namespace lognet
