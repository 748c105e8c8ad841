#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "orbsym/error.hpp"

namespace orbsym::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json to_json(const CVector& x) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i)
    a.push_back({x(i).real(), x(i).imag()});
  return a;
}

CVector vector_from_json(const ordered_json& a) {
  CVector x(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    x(static_cast<Eigen::Index>(i)) =
        Cplx(a[i][0].get<double>(), a[i][1].get<double>());
  return x;
}

ordered_json gap_to_json(double gap) {
  if (std::isinf(gap)) return "inf";
  return gap;
}

double gap_from_json(const ordered_json& j) {
  if (j.is_string()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

Verdict verdict_from_string(const std::string& s) {
  for (int v = 0; v < static_cast<int>(kVerdictCount); ++v)
    if (s == to_string(static_cast<Verdict>(v))) return static_cast<Verdict>(v);
  fail(ErrorKind::SchemaError, "unknown verdict: " + s);
}

CompareVerdict compare_from_string(const std::string& s) {
  for (auto v : {CompareVerdict::Equal, CompareVerdict::ProperSupergroup,
                 CompareVerdict::ProperSubgroup, CompareVerdict::Incomparable})
    if (s == to_string(v)) return v;
  fail(ErrorKind::SchemaError, "unknown compare verdict: " + s);
}

void emit_certificate_fields(ordered_json& line, const GenericityCertificate& c) {
  line["spanning"] = c.spanning;
  line["min_gap"] = gap_to_json(c.min_gap);
  line["x_norm"] = c.x_norm;
  line["verdict"] = to_string(c.verdict);
}

GenericityCertificate certificate_from_json(const ordered_json& line) {
  GenericityCertificate c;
  c.spanning = line["spanning"].get<bool>();
  c.min_gap = gap_from_json(line["min_gap"]);
  c.x_norm = line["x_norm"].get<double>();
  c.verdict = verdict_from_string(line["verdict"].get<std::string>());
  return c;
}

std::string emit_json_lines(const RunReport& r) {
  std::ostringstream out;
  ordered_json header;
  header["type"] = "header";
  header["command"] = r.command;
  header["argv"] = r.argv;
  header["input"] = r.input;
  header["digest"] = r.digest;
  header["dimension"] = r.dimension;
  header["group_order"] = r.group_order;
  header["tolerance"] = {{"eps_entry", r.tolerance.eps_entry},
                         {"eps_rank", r.tolerance.eps_rank},
                         {"sep_factor", r.tolerance.sep_factor}};
  if (r.seed) header["seed"] = *r.seed;
  if (!r.generator.empty()) header["generator"] = r.generator;
  out << header.dump() << '\n';

  if (r.input_vector) {
    ordered_json line;
    line["type"] = "input_vector";
    line["x"] = to_json(*r.input_vector);
    out << line.dump() << '\n';
  }
  if (r.orbit) {
    ordered_json line;
    line["type"] = "orbit";
    line["points"] = ordered_json::array();
    for (const auto& p : r.orbit->points) line["points"].push_back(to_json(p));
    line["multiplicities"] = r.orbit->multiplicities;
    line["spanning"] = r.orbit->spanning;
    out << line.dump() << '\n';
  }
  if (r.certificate) {
    ordered_json line;
    line["type"] = "certificate";
    emit_certificate_fields(line, *r.certificate);
    out << line.dump() << '\n';
  }
  if (r.stabilizer_order) {
    ordered_json line;
    line["type"] = "stabilizer";
    line["order"] = *r.stabilizer_order;
    if (r.reference_order) line["reference_order"] = *r.reference_order;
    if (r.compare_verdict) line["compare"] = to_string(*r.compare_verdict);
    out << line.dump() << '\n';
  }
  if (r.samples) {
    for (std::size_t k = 0; k < r.samples->per_sample.size(); ++k) {
      const auto& rec = r.samples->per_sample[k];
      ordered_json line;
      line["type"] = "sample";
      line["index"] = k;
      line["x"] = to_json(rec.x);
      emit_certificate_fields(line, rec.certificate);
      if (rec.stabilizer_order) line["stabilizer_order"] = *rec.stabilizer_order;
      if (rec.compare_verdict) line["compare"] = to_string(*rec.compare_verdict);
      out << line.dump() << '\n';
    }
    ordered_json summary;
    summary["type"] = "summary";
    ordered_json counts;
    for (int v = 0; v < static_cast<int>(kVerdictCount); ++v)
      counts[to_string(static_cast<Verdict>(v))] = r.samples->verdict_counts[v];
    summary["verdict_counts"] = counts;
    out << summary.dump() << '\n';
  }

  ordered_json tail;
  tail["type"] = "exit";
  tail["code"] = r.exit_code;
  out << tail.dump() << '\n';
  return out.str();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt(const Cplx& z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

std::string fmt_vector(const CVector& x) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (i > 0) s += ", ";
    s += fmt(x(i));
  }
  return s + ")";
}

std::string emit_text(const RunReport& r) {
  std::ostringstream out;
  out << "$ orbsym";
  for (const auto& a : r.argv) out << ' ' << a;
  out << '\n';
  out << r.command << " " << r.input << "  [digest " << r.digest << "]\n";
  out << "  dimension " << r.dimension << ", group order " << r.group_order
      << " (" << r.group_order << " elements)\n";
  out << "  tolerance: eps_entry=" << fmt(r.tolerance.eps_entry)
      << " eps_rank=" << fmt(r.tolerance.eps_rank)
      << " sep_factor=" << fmt(r.tolerance.sep_factor) << "\n";
  if (r.seed) {
    out << "  seed " << *r.seed;
    if (!r.generator.empty()) out << " (" << r.generator << ")";
    out << "\n";
  }
  if (r.input_vector) out << "  x = " << fmt_vector(*r.input_vector) << "\n";
  if (r.orbit) {
    out << "  orbit: " << r.orbit->points.size() << " points, "
        << (r.orbit->spanning ? "spanning" : "NOT spanning") << "\n";
    for (std::size_t i = 0; i < r.orbit->points.size(); ++i)
      out << "    " << fmt_vector(r.orbit->points[i]) << " x"
          << r.orbit->multiplicities[i] << "\n";
  }
  if (r.certificate) {
    out << "  certificate: " << to_string(r.certificate->verdict)
        << " (spanning=" << (r.certificate->spanning ? "yes" : "no")
        << ", min_gap=" << fmt(r.certificate->min_gap)
        << ", |x|=" << fmt(r.certificate->x_norm) << ")\n";
  }
  if (r.stabilizer_order) {
    out << "  stabilizer order " << *r.stabilizer_order;
    if (r.reference_order) out << ", reference order " << *r.reference_order;
    if (r.compare_verdict) out << ", compare " << to_string(*r.compare_verdict);
    out << "\n";
  }
  if (r.samples) {
    out << "  samples: " << r.samples->sample_count << "\n";
    out << "  verdicts:";
    for (int v = 0; v < static_cast<int>(kVerdictCount); ++v)
      out << " " << to_string(static_cast<Verdict>(v)) << "="
          << r.samples->verdict_counts[v];
    out << "\n";
    std::size_t equal = 0, checked = 0;
    for (const auto& rec : r.samples->per_sample)
      if (rec.compare_verdict) {
        ++checked;
        if (*rec.compare_verdict == CompareVerdict::Equal) ++equal;
      }
    if (checked > 0)
      out << "  stabilizer equals group on " << equal << "/" << checked
          << " certified samples\n";
  }
  out << "  wall " << fmt(r.wall_ms) << " ms, exit " << r.exit_code << "\n";
  return out.str();
}

}  // namespace

std::string emit_report(const RunReport& report, ReportFormat format) {
  return format == ReportFormat::JsonLines ? emit_json_lines(report)
                                           : emit_text(report);
}

RunReport parse_report(const std::string& json_lines) {
  RunReport r;
  std::istringstream in(json_lines);
  std::string raw;
  bool saw_samples = false;
  while (std::getline(in, raw)) {
    if (raw.empty()) continue;
    ordered_json line;
    try {
      line = ordered_json::parse(raw);
    } catch (const ordered_json::parse_error& e) {
      fail(ErrorKind::SchemaError, std::string("bad report line: ") + e.what());
    }
    const std::string type = line.value("type", "");
    if (type == "header") {
      r.command = line["command"].get<std::string>();
      r.argv = line["argv"].get<std::vector<std::string>>();
      r.input = line["input"].get<std::string>();
      r.digest = line["digest"].get<std::string>();
      r.dimension = line["dimension"].get<std::size_t>();
      r.group_order = line["group_order"].get<std::size_t>();
      r.tolerance.eps_entry = line["tolerance"]["eps_entry"].get<double>();
      r.tolerance.eps_rank = line["tolerance"]["eps_rank"].get<double>();
      r.tolerance.sep_factor = line["tolerance"]["sep_factor"].get<double>();
      if (line.contains("seed")) r.seed = line["seed"].get<std::uint64_t>();
      if (line.contains("generator"))
        r.generator = line["generator"].get<std::string>();
    } else if (type == "input_vector") {
      r.input_vector = vector_from_json(line["x"]);
    } else if (type == "orbit") {
      OrbitSummary o;
      for (const auto& p : line["points"]) o.points.push_back(vector_from_json(p));
      o.multiplicities = line["multiplicities"].get<std::vector<std::size_t>>();
      o.spanning = line["spanning"].get<bool>();
      r.orbit = std::move(o);
    } else if (type == "certificate") {
      r.certificate = certificate_from_json(line);
    } else if (type == "stabilizer") {
      r.stabilizer_order = line["order"].get<std::size_t>();
      if (line.contains("reference_order"))
        r.reference_order = line["reference_order"].get<std::size_t>();
      if (line.contains("compare"))
        r.compare_verdict = compare_from_string(line["compare"].get<std::string>());
    } else if (type == "sample") {
      saw_samples = true;
      if (!r.samples) r.samples = SampleReport{};
      SampleRecord rec;
      rec.x = vector_from_json(line["x"]);
      rec.certificate = certificate_from_json(line);
      if (line.contains("stabilizer_order"))
        rec.stabilizer_order = line["stabilizer_order"].get<std::size_t>();
      if (line.contains("compare"))
        rec.compare_verdict = compare_from_string(line["compare"].get<std::string>());
      r.samples->per_sample.push_back(std::move(rec));
    } else if (type == "summary") {
      saw_samples = true;
      if (!r.samples) r.samples = SampleReport{};
      for (int v = 0; v < static_cast<int>(kVerdictCount); ++v)
        r.samples->verdict_counts[v] =
            line["verdict_counts"][to_string(static_cast<Verdict>(v))]
                .get<std::size_t>();
    } else if (type == "exit") {
      r.exit_code = line["code"].get<int>();
    } else {
      fail(ErrorKind::SchemaError, "unknown report line type: " + type);
    }
  }
  if (saw_samples && r.samples) {
    r.samples->sample_count = r.samples->per_sample.size();
    r.samples->group_order = r.group_order;
    if (r.seed) r.samples->seed = *r.seed;
    r.samples->generator = r.generator;
  }
  return r;
}

}  // namespace orbsym::cli
