#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbsym/genericity.hpp"
#include "orbsym/stabilizer.hpp"

namespace orbsym::cli {

enum class ReportFormat { Text, JsonLines };

struct OrbitSummary {
  std::vector<CVector> points;
  std::vector<std::size_t> multiplicities;
  bool spanning = false;
};

// Everything a command run reports. The json-lines serialization contains
// only fields that are a pure function of the inputs and the seed, so
// re-running a command reproduces it byte for byte; wall_ms shows up in the
// text format only.
struct RunReport {
  std::string command;
  std::vector<std::string> argv;  // full invocation echo
  std::string input;   // file path or builtin:<name>
  std::string digest;  // fnv1a64:<hex> of the input file, or "builtin"
  std::size_t dimension = 0;
  std::size_t group_order = 0;
  ToleranceConfig tolerance;
  std::optional<std::uint64_t> seed;
  std::string generator;  // PRNG scheme, set when sampling

  std::optional<CVector> input_vector;
  std::optional<OrbitSummary> orbit;
  std::optional<GenericityCertificate> certificate;
  std::optional<std::size_t> stabilizer_order;
  std::optional<std::size_t> reference_order;
  std::optional<CompareVerdict> compare_verdict;
  std::optional<SampleReport> samples;

  double wall_ms = 0.0;
  int exit_code = 0;
};

std::string emit_report(const RunReport& report, ReportFormat format);

// Inverse of emit_report(..., JsonLines): emit(parse(s)) == s.
RunReport parse_report(const std::string& json_lines);

}  // namespace orbsym::cli
