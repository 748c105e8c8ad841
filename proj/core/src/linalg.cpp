#include "orbsym/linalg.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

#include "orbsym/error.hpp"

namespace orbsym {

void ToleranceConfig::validate() const {
  if (!(eps_entry > 0.0) || !(eps_rank > 0.0) || !(sep_factor > 0.0))
    fail(ErrorKind::BadInput, "tolerance fields must be strictly positive");
  if (sep_factor < 2.0)
    fail(ErrorKind::BadInput, "sep_factor must be at least 2");
}

double entry_dist(const Cplx& a, const Cplx& b) {
  return std::max(std::abs(a.real() - b.real()),
                  std::abs(a.imag() - b.imag()));
}

double matrix_dist(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "matrix_dist on mismatched shapes");
  double d = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      d = std::max(d, entry_dist(a(r, c), b(r, c)));
  return d;
}

double vector_dist(const CVector& a, const CVector& b) {
  if (a.size() != b.size())
    fail(ErrorKind::DimensionMismatch, "vector_dist on mismatched sizes");
  double d = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    d = std::max(d, entry_dist(a(i), b(i)));
  return d;
}

bool all_finite(const CMatrix& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag()))
        return false;
  return true;
}

bool all_finite(const CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag()))
      return false;
  return true;
}

Cplx inner(const CVector& x, const CVector& y) {
  if (x.size() != y.size())
    fail(ErrorKind::DimensionMismatch, "inner product on mismatched sizes");
  return y.dot(x);  // Eigen's dot conjugates the left operand: y^* x
}

bool is_unitary(const CMatrix& m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols())
    fail(ErrorKind::DimensionMismatch, "is_unitary needs a square matrix");
  const CMatrix gram = m.adjoint() * m;
  return matrix_dist(gram, CMatrix::Identity(m.rows(), m.cols())) <=
         tol.eps_entry;
}

Eigen::Index numeric_rank(const CMatrix& m, double eps_rank) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) >= eps_rank) ++rank;
  return rank;
}

bool spans(const std::vector<CVector>& vectors, Eigen::Index n,
           const ToleranceConfig& tol) {
  if (n < 1) fail(ErrorKind::BadInput, "spans needs a positive dimension");
  for (const auto& v : vectors)
    if (v.size() != n)
      fail(ErrorKind::DimensionMismatch, "spans: vector of wrong dimension");
  if (vectors.empty()) return false;
  CMatrix m(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j)
    m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  return numeric_rank(m, tol.eps_rank) == n;
}

}  // namespace orbsym
