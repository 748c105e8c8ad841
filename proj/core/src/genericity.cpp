#include "orbsym/genericity.hpp"

#include <cmath>
#include <limits>

#include "orbsym/error.hpp"
#include "orbsym/rng.hpp"

namespace orbsym {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::NotSpanning: return "not_spanning";
    case Verdict::FingerprintCollision: return "fingerprint_collision";
    case Verdict::Borderline: return "borderline";
  }
  return "unknown";
}

Fingerprint fingerprint(const FiniteMatrixGroup& g, const CVector& x) {
  if (x.size() != g.n)
    fail(ErrorKind::DimensionMismatch, "fingerprint: dimension mismatch");
  Fingerprint fp;
  fp.values.reserve(g.order());
  for (const auto& a : g.elements) fp.values.push_back(inner(a * x, x));
  return fp;
}

GenericityCertificate certify(const FiniteMatrixGroup& g, const CVector& x,
                              const ToleranceConfig& tol) {
  if (x.size() != g.n)
    fail(ErrorKind::DimensionMismatch, "certify: dimension mismatch");
  if (x.norm() <= tol.eps_entry)
    fail(ErrorKind::ZeroVector, "certify of the zero vector");

  GenericityCertificate cert;
  cert.x_norm = x.norm();
  const PointConfiguration orb = orbit(g, x, tol);
  cert.spanning = spans(orb.points, g.n, tol);

  // minimum modulus gap between fingerprint values at distinct non-identity
  // indices; +inf when the group has fewer than three elements
  const Fingerprint fp = fingerprint(g, x);
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < fp.values.size(); ++i)
    for (std::size_t j = i + 1; j < fp.values.size(); ++j)
      min_gap = std::min(min_gap, std::abs(fp.values[i] - fp.values[j]));
  cert.min_gap = min_gap;

  if (!cert.spanning)
    cert.verdict = Verdict::NotSpanning;
  else if (min_gap <= tol.eps_entry)
    cert.verdict = Verdict::FingerprintCollision;
  else if (min_gap <= tol.margin())
    cert.verdict = Verdict::Borderline;
  else
    cert.verdict = Verdict::Certified;
  return cert;
}

SampleReport sample(const FiniteMatrixGroup& g, std::size_t count,
                    std::uint64_t seed, const ToleranceConfig& tol,
                    bool check_stabilizer) {
  SampleReport report;
  report.group_order = g.order();
  report.sample_count = count;
  report.seed = seed;
  report.generator = kGeneratorName;
  report.per_sample.reserve(count);

  for (std::size_t k = 0; k < count; ++k) {
    SampleRecord rec;
    rec.x = random_unit_vector(g.n, substream_seed(seed, k));
    rec.certificate = certify(g, rec.x, tol);
    ++report.verdict_counts[static_cast<int>(rec.certificate.verdict)];
    if (check_stabilizer && rec.certificate.verdict == Verdict::Certified) {
      const StabilizerResult st = setwise_stabilizer(orbit(g, rec.x, tol), tol);
      rec.stabilizer_order = st.order;
      rec.compare_verdict = compare(g, st, tol);
    }
    report.per_sample.push_back(std::move(rec));
  }
  return report;
}

}  // namespace orbsym
