#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbsym/group.hpp"

namespace orbsym {

// Point permutation: sigma[i] is the image index of point i.
using Permutation = std::vector<std::size_t>;

// Matrix of pairwise inner products, entry (i,j) = <p_i, p_j>. Self-adjoint
// with real nonnegative diagonal; invariant under a unitary change of all
// points, which is what makes set stabilization decidable from it.
CMatrix gram(const PointConfiguration& p);

// All permutations sigma with <p_sigma(i), p_sigma(j)> = <p_i, p_j> for all
// i, j (entrywise within eps_entry), in lexicographic order. Found by
// partition refinement over quantized Gram entries followed by backtracking;
// deterministic. Raises AmbiguousIdentification if any two Gram entries
// differ by an amount inside the margin band, since quantization would then
// be unstable.
std::vector<Permutation> gram_automorphisms(const PointConfiguration& p,
                                            const ToleranceConfig& tol);

// The unique matrix C with C*p_i = p_sigma(i) for all i, solved on a
// spanning subset of the points and then verified on every point; unitarity
// is verified too, never assumed. Errors: NotSpanning, NotIsometric.
CMatrix lift(const PointConfiguration& p, const Permutation& sigma,
             const ToleranceConfig& tol);

enum class CompareVerdict { Equal, ProperSupergroup, ProperSubgroup, Incomparable };
const char* to_string(CompareVerdict v);

// The setwise stabilizer of a configuration as concrete unitary matrices,
// with the point permutation each one induces.
struct StabilizerResult {
  std::vector<CMatrix> elements;
  std::vector<Permutation> permutations;
  std::size_t order = 0;
  std::optional<CompareVerdict> verdict_vs_reference;
};

inline constexpr std::size_t kDefaultStabilizerCap = 10000;

// All unitary matrices mapping the point set onto itself. Requires a
// spanning configuration; a non-spanning one has a positive-dimensional
// stabilizer and is rejected (NotSpanning) rather than truncated to a finite
// lie. OrderExceeded beyond max_order.
StabilizerResult setwise_stabilizer(const PointConfiguration& p,
                                    const ToleranceConfig& tol,
                                    std::size_t max_order = kDefaultStabilizerCap);

// How the stabilizer h relates to the reference group g: Equal,
// ProperSupergroup (h strictly contains g), ProperSubgroup, or Incomparable.
CompareVerdict compare(const FiniteMatrixGroup& g, const StabilizerResult& h,
                       const ToleranceConfig& tol);

inline constexpr std::size_t kDefaultBruteMaxPoints = 8;

// Test oracle: enumerates all permutations of the points in lexicographic
// order, keeps the Gram-preserving ones by direct entry comparison (no
// quantization, no pruning), lifts the survivors. Same result contract as
// setwise_stabilizer. Errors: TooManyPoints, NotSpanning.
StabilizerResult brute_stabilizer(const PointConfiguration& p,
                                  const ToleranceConfig& tol,
                                  std::size_t max_points = kDefaultBruteMaxPoints);

}  // namespace orbsym
