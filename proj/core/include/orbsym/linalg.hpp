#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "orbsym/tolerance.hpp"

namespace orbsym {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Componentwise distance: max of |Re a - Re b| and |Im a - Im b|.
double entry_dist(const Cplx& a, const Cplx& b);

// Max entry_dist over all entries. Operands must have the same shape.
double matrix_dist(const CMatrix& a, const CMatrix& b);
double vector_dist(const CVector& a, const CVector& b);

bool all_finite(const CMatrix& m);
bool all_finite(const CVector& v);

// <x,y> = y^* x: linear in x, conjugate-linear in y; <x,x> = |x|^2 >= 0.
Cplx inner(const CVector& x, const CVector& y);

// True iff adjoint(m)*m is entrywise within eps_entry of the identity.
bool is_unitary(const CMatrix& m, const ToleranceConfig& tol);

// Number of singular values >= eps_rank.
Eigen::Index numeric_rank(const CMatrix& m, double eps_rank);

// True iff the vectors span C^n, decided by singular values >= eps_rank
// (equivalent to some n-subset having nonvanishing determinant, but with a
// quantified margin). An empty list spans nothing: false, not an error.
bool spans(const std::vector<CVector>& vectors, Eigen::Index n,
           const ToleranceConfig& tol);

}  // namespace orbsym
