#pragma once

#include <cstdint>
#include <string>

#include "orbsym/group.hpp"
#include "orbsym/tolerance.hpp"

namespace orbsym::cli {

// Parsed form of a group file: JSON with a positive "dimension", a
// "generators" array of dimension x dimension matrices (rows of [re, im]
// pairs) and an optional "tolerance" object overriding eps_entry, eps_rank
// and sep_factor.
struct GroupFile {
  Eigen::Index dimension = 0;
  std::vector<CMatrix> generators;
  ToleranceConfig tolerance;
};

// Throws SchemaError (with line/field path) or NonSquareMatrix. Generator
// unitarity is deferred to close(). `base` carries tolerance defaults, e.g.
// after environment overrides; file fields win over it.
GroupFile parse_group_file(const std::string& text,
                           const ToleranceConfig& base = {});

std::string read_file(const std::string& path);  // BadInput on failure

// Defaults overridden by ORBSYM_EPS_ENTRY, ORBSYM_EPS_RANK and
// ORBSYM_SEP_FACTOR when set; BadInput on unparsable values.
ToleranceConfig tolerance_from_env(ToleranceConfig base = {});

// CLI vector syntax: whitespace-separated coordinates, each "re,im".
CVector parse_vector(const std::string& text);
std::string format_vector(const CVector& x);  // parse(format(x)) == x exactly

std::string fnv1a64_hex(const std::string& bytes);

}  // namespace orbsym::cli
