#pragma once

#include <filesystem>
#include <string>

#include "amod/cli/config.hpp"
#include "amod/report.hpp"

namespace amod::cli {

inline constexpr int kSchemaVersion = 1;

// Exit code of a finished run: 0 pass, 1 fail, 3 flagged.
int exit_code(Verdict verdict);

// Report document: schema_version, command, kind, verdict, config_hash,
// scalars, checks, flags, notes, table references (or inline rows when CSV
// output is off), timing and the embedded resolved config. Non-finite
// numbers are written as the strings "inf", "-inf", "nan".
Json report_json(const Report& report, const RunConfig& config, const std::string& command,
                 double seconds);

// Diagnostic document for runs that stopped with an error (exit code 2).
Json error_json(const std::string& command, const std::string& message, const Json* resolved);

// Writes report.json, config.resolved.json and one <table>.csv per table
// into config.output_dir, honouring config.formats.
void write_report(const Report& report, const RunConfig& config, const std::string& command,
                  double seconds);

void write_json(const std::filesystem::path& path, const Json& doc);

}  // namespace amod::cli
