#pragma once

namespace orbsym {

// Absolute tolerances for every floating-point decision in the library.
// Complex values are compared componentwise (real and imaginary part) against
// eps_entry. Distances inside (eps_entry, sep_factor*eps_entry] fall into an
// ambiguity band and raise AmbiguousIdentification instead of being resolved
// silently either way.
struct ToleranceConfig {
  double eps_entry = 1e-9;   // entrywise comparison tolerance
  double eps_rank = 1e-8;    // singular values below this count as zero
  double sep_factor = 10.0;  // width multiplier of the ambiguity band, >= 2

  double margin() const { return sep_factor * eps_entry; }

  // All fields strictly positive, sep_factor >= 2; throws BadInput otherwise.
  void validate() const;
};

}  // namespace orbsym
