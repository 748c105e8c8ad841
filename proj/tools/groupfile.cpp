#include "groupfile.hpp"

#include <charconv>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "orbsym/error.hpp"

namespace orbsym::cli {

using nlohmann::json;

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

double require_number(const json& j, const std::string& path) {
  if (!j.is_number())
    fail(ErrorKind::SchemaError, path + " must be a number");
  return j.get<double>();
}

Cplx parse_entry(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2)
    fail(ErrorKind::SchemaError, path + " must be a [re, im] pair");
  return {require_number(j[0], path + "/0"), require_number(j[1], path + "/1")};
}

double env_double(const char* name, double fallback) {
  const char* raw = std::getenv(name);
  if (!raw) return fallback;
  const std::string s(raw);
  double value = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    fail(ErrorKind::BadInput,
         std::string(name) + " is not a valid number: " + s);
  return value;
}

}  // namespace

ToleranceConfig tolerance_from_env(ToleranceConfig base) {
  base.eps_entry = env_double("ORBSYM_EPS_ENTRY", base.eps_entry);
  base.eps_rank = env_double("ORBSYM_EPS_RANK", base.eps_rank);
  base.sep_factor = env_double("ORBSYM_SEP_FACTOR", base.sep_factor);
  base.validate();
  return base;
}

GroupFile parse_group_file(const std::string& text,
                           const ToleranceConfig& base) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::SchemaError,
         "JSON syntax error near line " + std::to_string(line_of(text, e.byte)) +
             ": " + e.what());
  }
  if (!doc.is_object())
    fail(ErrorKind::SchemaError, "top level must be an object");
  if (!doc.contains("dimension"))
    fail(ErrorKind::SchemaError, "missing field: dimension");
  if (!doc["dimension"].is_number_integer() || doc["dimension"].get<long>() < 1)
    fail(ErrorKind::SchemaError, "/dimension must be a positive integer");
  if (!doc.contains("generators"))
    fail(ErrorKind::SchemaError, "missing field: generators");
  if (!doc["generators"].is_array() || doc["generators"].empty())
    fail(ErrorKind::SchemaError, "/generators must be a non-empty array");

  GroupFile file;
  file.dimension = doc["dimension"].get<Eigen::Index>();
  const Eigen::Index n = file.dimension;

  std::size_t gi = 0;
  for (const auto& jm : doc["generators"]) {
    const std::string mpath = "/generators/" + std::to_string(gi);
    if (!jm.is_array())
      fail(ErrorKind::SchemaError, mpath + " must be an array of rows");
    if (static_cast<Eigen::Index>(jm.size()) != n)
      fail(ErrorKind::NonSquareMatrix,
           mpath + " has " + std::to_string(jm.size()) + " rows, expected " +
               std::to_string(n));
    CMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto& row = jm[static_cast<std::size_t>(r)];
      const std::string rpath = mpath + "/" + std::to_string(r);
      if (!row.is_array())
        fail(ErrorKind::SchemaError, rpath + " must be an array of entries");
      if (static_cast<Eigen::Index>(row.size()) != n)
        fail(ErrorKind::NonSquareMatrix,
             rpath + " has " + std::to_string(row.size()) +
                 " entries, expected " + std::to_string(n));
      for (Eigen::Index c = 0; c < n; ++c)
        m(r, c) = parse_entry(row[static_cast<std::size_t>(c)],
                              rpath + "/" + std::to_string(c));
    }
    file.generators.push_back(std::move(m));
    ++gi;
  }

  file.tolerance = base;
  if (doc.contains("tolerance")) {
    const auto& jt = doc["tolerance"];
    if (!jt.is_object())
      fail(ErrorKind::SchemaError, "/tolerance must be an object");
    if (jt.contains("eps_entry"))
      file.tolerance.eps_entry = require_number(jt["eps_entry"], "/tolerance/eps_entry");
    if (jt.contains("eps_rank"))
      file.tolerance.eps_rank = require_number(jt["eps_rank"], "/tolerance/eps_rank");
    if (jt.contains("sep_factor"))
      file.tolerance.sep_factor = require_number(jt["sep_factor"], "/tolerance/sep_factor");
    try {
      file.tolerance.validate();
    } catch (const Error& e) {
      fail(ErrorKind::SchemaError, std::string("/tolerance: ") + e.what());
    }
  }
  return file;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::BadInput, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CVector parse_vector(const std::string& text) {
  std::vector<Cplx> coords;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto comma = token.find(',');
    if (comma == std::string::npos)
      fail(ErrorKind::BadInput,
           "vector coordinate '" + token + "' is not of the form re,im");
    double re = 0.0, im = 0.0;
    const char* b1 = token.data();
    const char* e1 = token.data() + comma;
    const char* b2 = token.data() + comma + 1;
    const char* e2 = token.data() + token.size();
    const auto r1 = std::from_chars(b1, e1, re);
    const auto r2 = std::from_chars(b2, e2, im);
    if (r1.ec != std::errc{} || r1.ptr != e1 || r2.ec != std::errc{} ||
        r2.ptr != e2)
      fail(ErrorKind::BadInput,
           "vector coordinate '" + token + "' is not of the form re,im");
    coords.emplace_back(re, im);
  }
  if (coords.empty()) fail(ErrorKind::BadInput, "empty vector");
  CVector x(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    x(static_cast<Eigen::Index>(i)) = coords[i];
  return x;
}

namespace {

std::string shortest(double d) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return {buf, res.ptr};
}

}  // namespace

std::string format_vector(const CVector& x) {
  std::string out;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (i > 0) out += ' ';
    out += shortest(x(i).real());
    out += ',';
    out += shortest(x(i).imag());
  }
  return out;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace orbsym::cli
