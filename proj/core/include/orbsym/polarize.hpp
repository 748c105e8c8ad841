#pragma once

#include <functional>
#include <vector>

#include "orbsym/linalg.hpp"

namespace orbsym {

// A quadratic form v -> <Mv, v> of some unknown matrix M. Values are complex
// in general; real for all v only when M is self-adjoint.
using QuadraticForm = std::function<Cplx(const CVector&)>;

// The fixed evaluation order used by polarize(): e_0..e_{n-1}, then e_j + e_k
// for j < k in lexicographic (j,k) order, then e_j + i*e_k for j < k, then n
// consistency probes (e_j - e_{(j+1) mod n}; for n = 1 the single probe is
// 2*e_0). Total n^2 + n evaluations, so reconstructions are reproducible.
std::vector<CVector> polarization_samples(Eigen::Index n);

// Recover M from its quadratic form via the polarization identity
//   B(x, y) = (1/4) * sum_{k=0..3} i^k q(x + i^k y),   M_jk = B(e_k, e_j),
// evaluated only on the sample set above. Each off-diagonal pair comes out of
// the two mixed samples:
//   s1 = q(e_j+e_k) - q(e_j) - q(e_k)     = M_jk + M_kj
//   s2 = q(e_j+i*e_k) - q(e_j) - q(e_k)   = i*(M_jk - M_kj)
//   M_jk = (s1 - i*s2)/2,   M_kj = (s1 + i*s2)/2.
// The first n^2 samples determine M exactly, so after reconstruction every
// sampled value (probes included) is re-evaluated against the recovered
// matrix; a deviation beyond sep_factor*eps_entry means q was not the
// quadratic form of any matrix and raises InconsistentForm.
CMatrix polarize(const QuadraticForm& q, Eigen::Index n,
                 const ToleranceConfig& tol);

// The quadratic form of a known matrix, for round trips and tests.
QuadraticForm quadratic_form(const CMatrix& m);

}  // namespace orbsym
