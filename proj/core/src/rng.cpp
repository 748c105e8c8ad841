#include "orbsym/rng.hpp"

#include <cmath>

namespace orbsym {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
  // 53 high bits, shifted into (0, 1]
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

double SplitMix64::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return mix(mix(seed) + index);
}

CVector random_unit_vector(Eigen::Index n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  CVector x(n);
  double norm = 0.0;
  do {
    for (Eigen::Index j = 0; j < n; ++j)
      x(j) = Cplx(rng.next_gaussian(), rng.next_gaussian());
    norm = x.norm();
  } while (norm < 1e-6);  // astronomically unlikely, but deterministic anyway
  return x / norm;
}

}  // namespace orbsym
