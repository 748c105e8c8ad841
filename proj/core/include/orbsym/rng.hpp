#pragma once

#include <cstdint>

#include "orbsym/linalg.hpp"

namespace orbsym {

// Name of the sampling scheme, recorded in reports so runs are reproducible.
inline constexpr const char* kGeneratorName = "splitmix64/box-muller";

// splitmix64: tiny deterministic 64-bit generator, identical on every
// platform. Gaussians come from Box-Muller on (0,1] uniforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double next_unit();      // uniform in (0, 1]
  double next_gaussian();  // standard normal

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Seed of the independent substream for sample `index` of a run seeded with
// `seed`; samples can be generated in any order (or concurrently) and still
// match a sequential run.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

// Unit-norm vector whose coordinates are iid complex gaussians before
// normalization; the resulting direction distribution is unitarily invariant.
CVector random_unit_vector(Eigen::Index n, std::uint64_t seed);

}  // namespace orbsym
