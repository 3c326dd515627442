#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "nulldecomp/cli/verify.hpp"

namespace nulldecomp::cli {

struct AnalyzeOptions {
  std::string format = "edges";  // edges | g6
  bool verify = false;
  std::string dot;   // output path, empty for none
  std::string path;  // empty or "-" reads stdin
};

/// JSON report on `out`, diagnostics on `err`; returns an ExitCode.
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

int cmd_fixtures(const std::filesystem::path& dir, std::ostream& out, std::ostream& err);

struct GenerateOptions {
  VerifyOptions corpus;
  std::string format = "g6";  // g6 | edges
};

/// Writes the instances `verify` would check, one graph6 line each or edge
/// lists separated by blank lines.
int cmd_generate(const GenerateOptions& opts, std::ostream& out);

}  // namespace nulldecomp::cli
