#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbsym/linalg.hpp"

namespace orbsym {

// Closed element list of a finite unitary group acting on C^n.
// elements[0] is the identity; all elements are pairwise separated by more
// than sep_factor*eps_entry, so entrywise lookup is unambiguous.
struct FiniteMatrixGroup {
  Eigen::Index n = 0;
  std::vector<CMatrix> elements;
  std::vector<std::size_t> generator_indices;

  std::size_t order() const { return elements.size(); }
  const CMatrix& identity() const { return elements.front(); }
};

inline constexpr std::size_t kDefaultMaxOrder = 20000;

// Closure of the generators under multiplication, Dimino style: the cyclic
// group of the first generator, then for each further generator the new
// right cosets of the previous subgroup, completed coset by coset. Element
// order is deterministic given generator order, identity first.
// Errors: NonUnitaryGenerator, OrderExceeded (likely an infinite group, e.g.
// an irrational rotation), AmbiguousIdentification when a product lands in
// the band (eps_entry, sep_factor*eps_entry] around an existing element.
FiniteMatrixGroup close(const std::vector<CMatrix>& generators,
                        const ToleranceConfig& tol,
                        std::size_t max_order = kDefaultMaxOrder);

// Index of the unique element within eps_entry of m, or nullopt. Raises
// AmbiguousIdentification when the nearest element is inside the margin band.
std::optional<std::size_t> member_index(const FiniteMatrixGroup& g,
                                        const CMatrix& m,
                                        const ToleranceConfig& tol);

// Full group-axiom check: identity first, unitarity, pairwise separation,
// closure, inverses. O(|G|^2) products; intended for tests and small groups.
void validate_group(const FiniteMatrixGroup& g, const ToleranceConfig& tol);

// A finite list of pairwise-distinct points of C^n with multiplicities.
// When built as an orbit, source_map[k] is the point index that group
// element k sends the base vector to, and all multiplicities are equal.
struct PointConfiguration {
  Eigen::Index n = 0;
  std::vector<CVector> points;
  std::vector<std::size_t> multiplicities;
  std::vector<std::size_t> source_map;

  std::size_t size() const { return points.size(); }
};

// Orbit {A*x : A in g}, deduplicated with multiplicities, in first-visit
// order of the group's element list. Errors: ZeroVector, and
// AmbiguousIdentification if two orbit points fall into the margin band or
// the orbit-stabilizer count comes out inconsistent.
PointConfiguration orbit(const FiniteMatrixGroup& g, const CVector& x,
                         const ToleranceConfig& tol);

}  // namespace orbsym
