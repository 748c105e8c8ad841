#include "commands.hpp"

#include <chrono>
#include <ostream>

#include "CLI11.hpp"
#include "groupfile.hpp"
#include "orbsym/catalog.hpp"
#include "orbsym/error.hpp"
#include "orbsym/rng.hpp"

namespace orbsym::cli {

namespace {

int exit_for(ErrorKind kind) {
  return kind == ErrorKind::AmbiguousIdentification ? 3 : 2;
}

struct LoadedGroup {
  FiniteMatrixGroup group;
  ToleranceConfig tol;
  std::string input;
  std::string digest;
};

LoadedGroup load_group(const std::string& path, std::size_t max_order) {
  const std::string text = read_file(path);
  const GroupFile file = parse_group_file(text, tolerance_from_env());
  LoadedGroup loaded;
  loaded.tol = file.tolerance;
  loaded.group = close(file.generators, loaded.tol, max_order);
  loaded.input = path;
  loaded.digest = "fnv1a64:" + fnv1a64_hex(text);
  return loaded;
}

RunReport base_report(const std::string& command, const LoadedGroup& g) {
  RunReport r;
  r.command = command;
  r.input = g.input;
  r.digest = g.digest;
  r.dimension = static_cast<std::size_t>(g.group.n);
  r.group_order = g.group.order();
  r.tolerance = g.tol;
  return r;
}

OrbitSummary summarize(const PointConfiguration& orb, bool spanning) {
  OrbitSummary s;
  s.points = orb.points;
  s.multiplicities = orb.multiplicities;
  s.spanning = spanning;
  return s;
}

// orbit -> certificate -> stabilizer -> compare, shared by stabilize and demo
void stabilize_into(RunReport& r, const LoadedGroup& g, const CVector& x) {
  r.input_vector = x;
  const PointConfiguration orb = orbit(g.group, x, g.tol);
  const GenericityCertificate cert = certify(g.group, x, g.tol);
  r.orbit = summarize(orb, cert.spanning);
  r.certificate = cert;
  StabilizerResult st = setwise_stabilizer(orb, g.tol);
  const CompareVerdict verdict = compare(g.group, st, g.tol);
  st.verdict_vs_reference = verdict;
  r.stabilizer_order = st.order;
  r.reference_order = g.group.order();
  r.compare_verdict = verdict;
  if (cert.verdict == Verdict::Certified && verdict != CompareVerdict::Equal)
    r.exit_code = 1;  // certified orbit with a foreign stabilizer: engine bug
  else if (cert.verdict == Verdict::Borderline)
    r.exit_code = 3;
}

void verify_into(RunReport& r, const LoadedGroup& g, std::size_t samples,
                 std::uint64_t seed) {
  r.seed = seed;
  r.generator = kGeneratorName;
  r.samples = sample(g.group, samples, seed, g.tol, /*check_stabilizer=*/true);
  bool violation = false, borderline = false;
  for (const auto& rec : r.samples->per_sample) {
    if (rec.certificate.verdict == Verdict::Certified &&
        rec.compare_verdict != CompareVerdict::Equal)
      violation = true;
    if (rec.certificate.verdict == Verdict::Borderline) borderline = true;
  }
  r.exit_code = violation ? 1 : (borderline ? 3 : 0);
}

LoadedGroup builtin_group(const std::string& which) {
  LoadedGroup g;
  g.tol = tolerance_from_env();
  g.input = "builtin:" + which;
  g.digest = "builtin";
  if (which == "square")
    g.group = close({catalog::rotation90()}, g.tol);
  else if (which == "q8")
    g.group = close(catalog::quaternion8(), g.tol);
  else
    fail(ErrorKind::BadInput, "unknown demo: " + which + " (square|q8)");
  return g;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;

  std::string file, xtext, format_name = "text", demo_which;
  std::size_t samples = 100, max_order = kDefaultMaxOrder;
  std::uint64_t seed = 0;
  bool do_validate = false;

  CLI::App app{"finite unitary groups: orbits, genericity certificates and "
               "setwise stabilizers"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool needs_x) {
    cmd->add_option("file", file, "group file (JSON)")->required();
    if (needs_x)
      cmd->add_option("--x", xtext, "vector, coordinates as re,im separated by spaces")
          ->required();
    cmd->add_option("--format", format_name, "text or jsonl");
    cmd->add_option("--max-order", max_order, "closure size limit");
  };

  auto* cmd_close = app.add_subcommand("close", "close the generators and print the group order");
  add_common(cmd_close, false);
  cmd_close->add_flag("--validate", do_validate, "run the full group-axiom check");

  auto* cmd_orbit = app.add_subcommand("orbit", "print the orbit of --x and its spanning verdict");
  add_common(cmd_orbit, true);

  auto* cmd_certify = app.add_subcommand("certify", "print the genericity certificate of --x");
  add_common(cmd_certify, true);

  auto* cmd_stabilize = app.add_subcommand("stabilize", "compute the setwise stabilizer of the orbit of --x");
  add_common(cmd_stabilize, true);

  auto* cmd_verify = app.add_subcommand("verify", "sample vectors, certify them and cross-check their stabilizers");
  add_common(cmd_verify, false);
  cmd_verify->add_option("--samples", samples, "number of sampled vectors");
  cmd_verify->add_option("--seed", seed, "PRNG seed (default 0)");

  auto* cmd_demo = app.add_subcommand("demo", "built-in showcases");
  cmd_demo->add_option("which", demo_which, "square or q8")->required();
  cmd_demo->add_option("--format", format_name, "text or jsonl");
  cmd_demo->add_option("--seed", seed, "PRNG seed for the q8 showcase");

  std::vector<const char*> argv = {"orbsym"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.error_detail = app.help();
    result.exit_code = 0;
    return result;
  } catch (const CLI::ParseError& e) {
    result.error_kind = kind_name(ErrorKind::BadInput);
    result.error_detail = e.what();
    result.exit_code = 2;
    return result;
  }

  if (format_name == "jsonl")
    result.format = ReportFormat::JsonLines;
  else if (format_name != "text") {
    result.error_kind = kind_name(ErrorKind::BadInput);
    result.error_detail = "unknown format: " + format_name;
    result.exit_code = 2;
    return result;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (cmd_close->parsed()) {
      const LoadedGroup g = load_group(file, max_order);
      if (do_validate) validate_group(g.group, g.tol);
      result.report = base_report("close", g);
    } else if (cmd_orbit->parsed()) {
      const LoadedGroup g = load_group(file, max_order);
      result.report = base_report("orbit", g);
      const CVector x = parse_vector(xtext);
      const PointConfiguration orb = orbit(g.group, x, g.tol);
      result.report.input_vector = x;
      result.report.orbit = summarize(orb, spans(orb.points, g.group.n, g.tol));
    } else if (cmd_certify->parsed()) {
      const LoadedGroup g = load_group(file, max_order);
      result.report = base_report("certify", g);
      const CVector x = parse_vector(xtext);
      result.report.input_vector = x;
      result.report.certificate = certify(g.group, x, g.tol);
      if (result.report.certificate->verdict == Verdict::Borderline)
        result.report.exit_code = 3;
    } else if (cmd_stabilize->parsed()) {
      const LoadedGroup g = load_group(file, max_order);
      result.report = base_report("stabilize", g);
      stabilize_into(result.report, g, parse_vector(xtext));
    } else if (cmd_verify->parsed()) {
      const LoadedGroup g = load_group(file, max_order);
      result.report = base_report("verify", g);
      verify_into(result.report, g, samples, seed);
    } else if (cmd_demo->parsed()) {
      const LoadedGroup g = builtin_group(demo_which);
      result.report = base_report("demo", g);
      if (demo_which == "square") {
        // the square counterexample: extra reflections stabilize the orbit
        CVector x(2);
        x << Cplx(1, 0), Cplx(0, 0);
        stabilize_into(result.report, g, x);
      } else {
        result.report.seed = seed;
        result.report.generator = kGeneratorName;
        stabilize_into(result.report, g,
                       random_unit_vector(2, substream_seed(seed, 0)));
      }
    }
  } catch (const Error& e) {
    result.error_kind = kind_name(e.kind());
    result.error_detail = e.what();
    result.exit_code = exit_for(e.kind());
    return result;
  }
  const auto t1 = std::chrono::steady_clock::now();
  result.report.argv = args;
  result.report.wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  result.has_report = true;
  result.exit_code = result.report.exit_code;
  return result;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  const CommandResult result = run_command(args);
  if (result.has_report) {
    out << emit_report(result.report, result.format);
  } else if (result.error_kind.empty()) {
    out << result.error_detail;  // help text
  } else {
    err << "error kind=" << result.error_kind << " detail=\""
        << result.error_detail << "\"\n";
  }
  return result.exit_code;
}

}  // namespace orbsym::cli
