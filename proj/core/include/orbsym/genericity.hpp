#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbsym/group.hpp"
#include "orbsym/stabilizer.hpp"

namespace orbsym {

// values[k] = <elements[k]*x, x>, indexed like the group's element list.
// The value at the identity index is |x|^2; the value at the index of
// adjoint(A) is the conjugate of the value at A's index.
struct Fingerprint {
  std::vector<Cplx> values;
};

Fingerprint fingerprint(const FiniteMatrixGroup& g, const CVector& x);

enum class Verdict : int {
  Certified = 0,
  NotSpanning = 1,
  FingerprintCollision = 2,
  Borderline = 3,
};
inline constexpr std::size_t kVerdictCount = 4;
const char* to_string(Verdict v);

// Genericity certificate for a vector x:
//   spanning:  the orbit of x spans C^n;
//   min_gap:   minimum modulus distance between fingerprint values at
//              distinct non-identity indices (+inf when there is no pair);
//   verdict:   Certified requires spanning and min_gap above the margin;
//              NotSpanning takes precedence over the fingerprint verdicts;
//              Borderline flags a min_gap inside the ambiguity band.
// min_gap scales with |lambda|^2 under x -> lambda*x, so Certified and
// NotSpanning are scale-invariant but the Borderline band is not.
struct GenericityCertificate {
  bool spanning = false;
  double min_gap = 0.0;
  Verdict verdict = Verdict::NotSpanning;
  double x_norm = 0.0;
};

GenericityCertificate certify(const FiniteMatrixGroup& g, const CVector& x,
                              const ToleranceConfig& tol);

struct SampleRecord {
  CVector x;
  GenericityCertificate certificate;
  std::optional<std::size_t> stabilizer_order;
  std::optional<CompareVerdict> compare_verdict;
};

struct SampleReport {
  std::size_t group_order = 0;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  std::string generator;  // PRNG scheme name, see rng.hpp
  std::array<std::size_t, kVerdictCount> verdict_counts{};
  std::vector<SampleRecord> per_sample;
};

// Draws `count` unit vectors (substream (seed, index), so the report is a
// pure function of the seed), certifies each, and when check_stabilizer is
// set also computes the setwise stabilizer of every Certified sample's orbit
// and compares it against g.
SampleReport sample(const FiniteMatrixGroup& g, std::size_t count,
                    std::uint64_t seed, const ToleranceConfig& tol,
                    bool check_stabilizer);

}  // namespace orbsym
