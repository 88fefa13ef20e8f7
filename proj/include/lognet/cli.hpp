#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lognet/neural_layer.hpp"

namespace lognet::cli {

enum class ExitCode : int {
    ok = 0,
    verification_failed = 1,
    usage_error = 2,
};

enum class Command { build_layer, flow, mobius, verify };
enum class OutputFormat { json, csv };

struct RunConfig {
    Command command = Command::verify;
    std::optional<double> mu;
    std::optional<double> sigma;
    std::optional<double> theta1;
    std::optional<double> theta2;
    ActivationMode mode = ActivationMode::paper;
    double step = 1e-3;
    double t_end = 1.0;
    std::string generator;  // g1, g2, g1inv, g2inv
    std::optional<double> tol;
    std::optional<std::string> output_path;
    std::optional<OutputFormat> format;
};

/// Parses argv and runs the selected command. Output goes to `out` unless
/// --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a parsed configuration and returns the rendered document.
/// Throws the library's error types on invalid input; `failed` is set when
/// a verification check fails.
std::string execute(const RunConfig& cfg, bool& failed);

}  // namespace lognet::cli
