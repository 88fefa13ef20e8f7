#include "lognet/cli.hpp"

#include <fstream>
#include <map>

#include <CLI11.hpp>

#include "lognet/errors.hpp"
#include "lognet/gradient_flow.hpp"
#include "lognet/serialize.hpp"
#include "lognet/verification.hpp"

namespace lognet::cli {

namespace {

NaturalParams resolve_point(const RunConfig& cfg) {
    if (cfg.theta1 || cfg.theta2) {
        if (!cfg.theta1 || !cfg.theta2) {
            throw ArgumentError("--theta1 and --theta2 must be given together");
        }
        return {*cfg.theta1, *cfg.theta2};
    }
    if (!cfg.mu || !cfg.sigma) {
        throw ArgumentError("either --mu/--sigma or --theta1/--theta2 is required");
    }
    const SourceParams p{*cfg.mu, *cfg.sigma};
    const NaturalParams t = to_natural(p);
    if (p.mu == 0.0) {
        throw ChartSingularity("chart singularity: mu = 0 gives theta1 = 0, where P = 2*theta2/theta1 is undefined");
    }
    return t;
}

OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback) {
    return cfg.format.value_or(fallback);
}

void require_json(const RunConfig& cfg, const char* command) {
    if (format_or(cfg, OutputFormat::json) != OutputFormat::json) {
        throw ArgumentError(std::string(command) + " only supports --format json");
    }
}

std::string cmd_build_layer(const RunConfig& cfg) {
    require_json(cfg, "build-layer");
    const PipelineTrace trace = run_pipeline(resolve_point(cfg), cfg.mode);
    return dump(pipeline_json(trace));
}

std::string cmd_flow(const RunConfig& cfg) {
    if (!(cfg.step > 0.0)) {
        throw ArgumentError("--step must be positive");
    }
    if (!(cfg.t_end >= 0.0)) {
        throw ArgumentError("--t-end must be non-negative");
    }
    const Trajectory traj = integrate(resolve_point(cfg), cfg.step, cfg.t_end);
    if (format_or(cfg, OutputFormat::csv) == OutputFormat::csv) {
        return trajectory_csv(traj);
    }
    return dump(trajectory_json(traj));
}

std::string cmd_mobius(const RunConfig& cfg) {
    require_json(cfg, "mobius");
    static const std::map<std::string, std::pair<Generator, bool>> generators = {
        {"g1", {Generator::g1, false}},
        {"g2", {Generator::g2, false}},
        {"g1inv", {Generator::g1, true}},
        {"g2inv", {Generator::g2, true}},
    };
    const auto it = generators.find(cfg.generator);
    if (it == generators.end()) {
        throw ArgumentError("--generator must be one of g1, g2, g1inv, g2inv");
    }
    const PhaseCoords c = to_phase(resolve_point(cfg));
    const double beta = beta_angle(c);
    SU11Element g = generator(it->second.first, beta);
    if (it->second.second) {
        g = inverse(g);
    }
    const DiskPoint z = embed(c);
    return dump(mobius_json({cfg.generator, beta, z, g, mobius(g, z)}));
}

std::string cmd_verify(const RunConfig& cfg, bool& failed) {
    if (cfg.tol && !(*cfg.tol > 0.0)) {
        throw ArgumentError("--tol must be positive");
    }
    const VerificationReport report = run_verification(cfg.tol);
    failed = !report.all_passed();
    if (format_or(cfg, OutputFormat::csv) == OutputFormat::json) {
        return dump(report_json(report));
    }
    return report.render();
}

void add_common(CLI::App& sub, RunConfig& cfg, std::string& mode, std::string& format) {
    sub.add_option("--mu", cfg.mu, "mean of log(X)");
    sub.add_option("--sigma", cfg.sigma, "scale of log(X)");
    sub.add_option("--theta1", cfg.theta1, "natural parameter theta1 (overrides --mu/--sigma)");
    sub.add_option("--theta2", cfg.theta2, "natural parameter theta2");
    sub.add_option("--mode", mode, "activation mode")->check(CLI::IsMember({"paper", "exp"}));
    sub.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub.add_option("--output", cfg.output_path, "write output to this path instead of stdout");
}

}  // namespace

std::string execute(const RunConfig& cfg, bool& failed) {
    failed = false;
    switch (cfg.command) {
        case Command::build_layer: return cmd_build_layer(cfg);
        case Command::flow: return cmd_flow(cfg);
        case Command::mobius: return cmd_mobius(cfg);
        case Command::verify: return cmd_verify(cfg, failed);
    }
    throw ArgumentError("unknown command");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Neural layer construction on the lognormal statistical manifold", "lognet"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string mode = "paper";
    std::string format;

    auto* build = app.add_subcommand("build-layer", "run the construction pipeline and print the layer");
    add_common(*build, cfg, mode, format);

    auto* flow = app.add_subcommand("flow", "integrate the Fisher-gradient flow");
    add_common(*flow, cfg, mode, format);
    flow->add_option("--step", cfg.step, "fixed RK4 step");
    flow->add_option("--t-end", cfg.t_end, "final time");

    auto* mob = app.add_subcommand("mobius", "apply an SU(1,1) generator to the embedded disk point");
    add_common(*mob, cfg, mode, format);
    mob->add_option("--generator", cfg.generator, "g1, g2, g1inv or g2inv")->required();

    auto* ver = app.add_subcommand("verify", "run the invariant suite");
    add_common(*ver, cfg, mode, format);
    ver->add_option("--tol", cfg.tol, "override every check tolerance");

    // CLI11 wants argv-style input in reverse order.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return static_cast<int>(ExitCode::ok);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage_error);
    }

    if (build->parsed()) cfg.command = Command::build_layer;
    if (flow->parsed()) cfg.command = Command::flow;
    if (mob->parsed()) cfg.command = Command::mobius;
    if (ver->parsed()) cfg.command = Command::verify;
    cfg.mode = parse_activation_mode(mode);
    if (!format.empty()) {
        cfg.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
    }

    std::string doc;
    bool failed = false;
    try {
        doc = execute(cfg, failed);
    } catch (const ChartSingularity& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage_error);
    } catch (const DomainError& e) {
        err << "error: domain error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage_error);
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage_error);
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return static_cast<int>(ExitCode::verification_failed);
    }

    if (cfg.output_path) {
        std::ofstream file(*cfg.output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << *cfg.output_path << " for writing\n";
            return static_cast<int>(ExitCode::usage_error);
        }
        file << doc;
    } else {
        out << doc;
    }
    return static_cast<int>(failed ? ExitCode::verification_failed : ExitCode::ok);
}

}  // namespace lognet::cli
