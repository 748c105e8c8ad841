#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"

namespace orbsym::cli {

// Exit codes:
//   0  success / stabilizer matches where it must
//   1  a Certified sample whose stabilizer differs from the group
//      (only reachable through an internal inconsistency)
//   2  input error (files, schema, non-unitary generators, degenerate input)
//   3  tolerance ambiguity (Borderline certificate, AmbiguousIdentification)
struct CommandResult {
  int exit_code = 0;
  RunReport report;
  ReportFormat format = ReportFormat::Text;
  bool has_report = false;
  std::string error_kind;  // set when a command failed
  std::string error_detail;
};

CommandResult run_command(const std::vector<std::string>& args);

// Runs a command and prints its report (stdout) or error line (stderr).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace orbsym::cli
