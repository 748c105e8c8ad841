// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: orbsym_acceptance [path-to-orbsym-binary]
// The optional binary path enables the subprocess determinism check; the
// in-process one runs either way.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "groupfile.hpp"
#include "orbsym/catalog.hpp"
#include "orbsym/error.hpp"
#include "orbsym/genericity.hpp"
#include "orbsym/polarize.hpp"
#include "orbsym/rng.hpp"
#include "test_support.hpp"

using namespace orbsym;
using test::make_vector;

namespace {

const ToleranceConfig kTol{};
int failures = 0;

void report(int index, const std::string& label, bool pass, double ms,
            const std::string& detail = "") {
  std::printf("[%s] %d. %s (%.1f ms)%s%s\n", pass ? "PASS" : "FAIL", index,
              label.c_str(), ms, detail.empty() ? "" : ": ", detail.c_str());
  if (!pass) ++failures;
}

void criterion(int index, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool pass = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  report(index, label, pass, ms, detail);
}

std::string run_cli_capture(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = cli::run_cli(args, out, err);
  return out.str();
}

bool run_binary(const std::string& binary, const std::string& args,
                std::string* output) {
  const std::string cmd = binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return false;
  char buf[4096];
  std::string collected;
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
    collected.append(buf, got);
  const int status = pclose(pipe);
  *output = collected;
  return status == 0;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";

  criterion(1, "square counterexample: stabilizer order 8, proper supergroup",
            [](std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const FiniteMatrixGroup g = close({catalog::rotation90()}, kTol);
    const PointConfiguration orb = orbit(g, make_vector({1, 0}), kTol);
    const StabilizerResult st = setwise_stabilizer(orb, kTol);
    const CompareVerdict v = compare(g, st, kTol);
    const double sec = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    detail = "order " + std::to_string(st.order) + ", " + to_string(v);
    return st.order == 8 && v == CompareVerdict::ProperSupergroup && sec < 1.0;
  });

  criterion(2, "generic vector (1,1+i): certified, stabilizer equals the group",
            [](std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const FiniteMatrixGroup g = close({catalog::rotation90()}, kTol);
    const CVector x = make_vector({1, Cplx(1, 1)});
    const GenericityCertificate cert = certify(g, x, kTol);
    const PointConfiguration orb = orbit(g, x, kTol);
    const StabilizerResult st = setwise_stabilizer(orb, kTol);
    const StabilizerResult oracle = brute_stabilizer(orb, kTol);
    const CompareVerdict v = compare(g, st, kTol);
    const double sec = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    detail = std::string(to_string(cert.verdict)) + ", order " +
             std::to_string(st.order) + ", " + to_string(v);
    return cert.verdict == Verdict::Certified && st.order == 4 &&
           v == CompareVerdict::Equal &&
           st.permutations == oracle.permutations && sec < 1.0;
  });

  criterion(3, "density: verify --samples 100 all certified+equal, c4/q8/d8 x 3 seeds",
            [](std::string& detail) {
    const std::vector<std::pair<std::string, std::string>> groups = {
        {"c4", R"({"dimension":2,"generators":[[[[0,0],[-1,0]],[[1,0],[0,0]]]]})"},
        {"q8", R"({"dimension":2,"generators":[)"
               R"([[[0,1],[0,0]],[[0,0],[0,-1]]],)"
               R"([[[0,0],[1,0]],[[-1,0],[0,0]]]]})"},
        {"d8", R"({"dimension":2,"generators":[)"
               R"([[[0,0],[-1,0]],[[1,0],[0,0]]],)"
               R"([[[1,0],[0,0]],[[0,0],[-1,0]]]]})"}};
    for (const auto& [name, json] : groups) {
      const auto path = std::filesystem::temp_directory_path() /
                        ("orbsym_acceptance_" + name + ".json");
      std::ofstream(path) << json;
      const auto t0 = std::chrono::steady_clock::now();
      for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        int code = -1;
        const std::string out = run_cli_capture(
            {"verify", path.string(), "--samples", "100", "--seed",
             std::to_string(seed), "--format", "jsonl"},
            &code);
        if (code != 0) {
          detail = name + " seed " + std::to_string(seed) + ": exit " +
                   std::to_string(code);
          return false;
        }
        const cli::RunReport rep = cli::parse_report(out);
        if (!rep.samples || rep.samples->per_sample.size() != 100) {
          detail = name + ": report lacks 100 samples";
          return false;
        }
        for (const auto& rec : rep.samples->per_sample) {
          if (rec.certificate.verdict != Verdict::Certified) {
            detail = name + " seed " + std::to_string(seed) + ": verdict " +
                     to_string(rec.certificate.verdict);
            return false;
          }
          if (rec.compare_verdict != CompareVerdict::Equal) {
            detail = name + " seed " + std::to_string(seed) + ": compare " +
                     to_string(*rec.compare_verdict);
            return false;
          }
        }
      }
      const double sec = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
      if (sec >= 10.0) {
        detail = name + " took " + std::to_string(sec) + " s";
        return false;
      }
    }
    detail = "900 samples across 3 groups, all certified and equal, exit 0";
    return true;
  });

  criterion(4, "scalar c4: stabilizer order exactly 4 for 100 random vectors",
            [](std::string& detail) {
    const FiniteMatrixGroup g = close(catalog::cyclic_u1(4), kTol);
    for (std::uint64_t s = 0; s < 100; ++s) {
      const CVector x = random_unit_vector(1, substream_seed(404, s));
      const GenericityCertificate cert = certify(g, x, kTol);
      if (cert.verdict == Verdict::Borderline) {
        detail = "borderline at sample " + std::to_string(s);
        return false;
      }
      const StabilizerResult st = setwise_stabilizer(orbit(g, x, kTol), kTol);
      if (st.order != 4) {
        detail = "order " + std::to_string(st.order) + " at sample " +
                 std::to_string(s);
        return false;
      }
    }
    return true;
  });

  criterion(5, "polarization recovers 100 random matrices within 1e-9",
            [](std::string& detail) {
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 100; ++s) {
      const Eigen::Index n = 1 + static_cast<Eigen::Index>(s % 6);
      const CMatrix m = test::random_matrix(n, 860 + s);
      const CMatrix rec = polarize(quadratic_form(m), n, kTol);
      worst = std::max(worst, matrix_dist(rec, m));
    }
    detail = "max entry error " + std::to_string(worst);
    return worst <= 1e-9;
  });

  criterion(6, "search equals brute force on all corpus orbits with <= 8 points",
            [](std::string& detail) {
    std::size_t checked = 0;
    for (const auto& named : test::corpus()) {
      std::vector<CVector> xs;
      if (named.group.n == 2) {
        xs.push_back(make_vector({1, 0}));
        xs.push_back(make_vector({1, Cplx(1, 1)}));
      }
      for (std::uint64_t s = 0; s < 3; ++s)
        xs.push_back(random_unit_vector(named.group.n,
                                        substream_seed(606, 10 * s + named.group.n)));
      for (const auto& x : xs) {
        const PointConfiguration orb = orbit(named.group, x, kTol);
        if (orb.size() > kDefaultBruteMaxPoints) continue;
        if (!spans(orb.points, named.group.n, kTol)) continue;
        const StabilizerResult fast = setwise_stabilizer(orb, kTol);
        const StabilizerResult slow = brute_stabilizer(orb, kTol);
        if (fast.permutations != slow.permutations) {
          detail = named.name + ": permutation sets differ";
          return false;
        }
        ++checked;
      }
    }
    detail = std::to_string(checked) + " configurations";
    return checked > 0;
  });

  criterion(7, "degenerate (1,i): certify says not spanning, stabilizer refuses",
            [](std::string& detail) {
    const FiniteMatrixGroup g = close({catalog::rotation90()}, kTol);
    const CVector x = make_vector({1, Cplx(0, 1)});
    const GenericityCertificate cert = certify(g, x, kTol);
    if (cert.verdict != Verdict::NotSpanning) {
      detail = std::string("certify said ") + to_string(cert.verdict);
      return false;
    }
    try {
      setwise_stabilizer(orbit(g, x, kTol), kTol);
      detail = "setwise_stabilizer returned a finite group";
      return false;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotSpanning) {
        detail = std::string("wrong error: ") + e.what();
        return false;
      }
    }
    return true;
  });

  criterion(8, "fingerprint test matches literal enumeration for |G| <= 5",
            [](std::string& detail) {
    std::size_t checked = 0;
    for (const auto& named : test::corpus()) {
      if (named.group.order() > 5) continue;
      for (std::uint64_t s = 0; s < 20; ++s) {
        const CVector x = random_unit_vector(
            named.group.n, substream_seed(808, 100 * named.group.order() + s));
        const bool direct = test::in_generic_set_direct(named.group, x, kTol);
        const bool via_gap =
            certify(named.group, x, kTol).verdict == Verdict::Certified;
        if (direct != via_gap) {
          detail = named.name + " sample " + std::to_string(s) + ": direct " +
                   (direct ? "in" : "out") + ", fingerprint " +
                   (via_gap ? "in" : "out");
          return false;
        }
        ++checked;
      }
    }
    detail = std::to_string(checked) + " vectors across " + "order<=5 groups";
    return checked > 0;
  });

  criterion(9, "verify reruns are byte-identical (in-process and subprocess)",
            [binary](std::string& detail) {
    const auto path = std::filesystem::temp_directory_path() / "orbsym_acceptance_c4.json";
    {
      std::ofstream out(path);
      out << R"({"dimension": 2, "generators": [[[[0,0],[-1,0]],[[1,0],[0,0]]]]})";
    }
    const std::vector<std::string> args = {
        "verify", path.string(), "--samples", "50",
        "--seed", "9",           "--format",  "jsonl"};
    int code1 = -1, code2 = -1;
    const std::string a = run_cli_capture(args, &code1);
    const std::string b = run_cli_capture(args, &code2);
    if (code1 != 0 || code2 != 0 || a != b || a.empty()) {
      detail = "in-process reruns differ";
      return false;
    }
    if (!binary.empty()) {
      const std::string cmdline =
          "verify " + path.string() + " --samples 50 --seed 9 --format jsonl";
      std::string c, d;
      if (!run_binary(binary, cmdline, &c) || !run_binary(binary, cmdline, &d) ||
          c != d || c != a) {
        detail = "subprocess reruns differ";
        return false;
      }
      detail = "in-process and subprocess outputs identical";
    } else {
      detail = "in-process outputs identical (no binary path given)";
    }
    return true;
  });

  if (failures == 0)
    std::printf("acceptance: all 9 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures;
}
