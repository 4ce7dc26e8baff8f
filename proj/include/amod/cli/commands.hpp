#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "amod/cli/config.hpp"
#include "amod/report.hpp"

namespace amod::cli {

// Subcommand names as typed on the command line.
inline const std::vector<std::string> kCommands{"partition verify", "norm compute", "multiplier apply",
                                                "symbol class",     "theorem check", "counterexample"};

Report cmd_partition_verify(const RunConfig& config);
// Norm of the AMSF1 function named by config.input.
Report cmd_norm(const RunConfig& config);
// Applies e^{iμ(D)} to config.input and writes output.amsf to the output dir.
Report cmd_multiplier_apply(const RunConfig& config);
// Weighted 𝓕L¹ class profile of ∂²μ with weight w, plus the pointwise
// Mikhlin functional for comparison.
Report cmd_symbol_class(const RunConfig& config);
// Runs the probe named by config.probe.name.
Report cmd_theorem(const RunConfig& config);
Report cmd_counterexample(const RunConfig& config);

// Dispatches on one of kCommands. Throws amod::Error on bad input.
Report run_command(const std::string& command, const RunConfig& config);

// Full command-line entry point; returns the process exit code
// (0 pass, 1 fail, 2 configuration/precondition error, 3 flagged).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amod::cli
