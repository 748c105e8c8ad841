#include "orbsym/polarize.hpp"

#include <string>
#include <utility>

#include "orbsym/error.hpp"

namespace orbsym {

namespace {

CVector basis(Eigen::Index n, Eigen::Index j) {
  CVector e = CVector::Zero(n);
  e(j) = Cplx(1.0, 0.0);
  return e;
}

Cplx evaluate(const CMatrix& m, const CVector& v) { return v.dot(m * v); }

}  // namespace

std::vector<CVector> polarization_samples(Eigen::Index n) {
  if (n < 1) fail(ErrorKind::BadInput, "polarize needs a positive dimension");
  std::vector<CVector> s;
  s.reserve(static_cast<std::size_t>(n * n + n));
  for (Eigen::Index j = 0; j < n; ++j) s.push_back(basis(n, j));
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k)
      s.push_back(basis(n, j) + basis(n, k));
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k)
      s.push_back(basis(n, j) + Cplx(0.0, 1.0) * basis(n, k));
  if (n == 1) {
    s.push_back(2.0 * basis(n, 0));
  } else {
    for (Eigen::Index j = 0; j < n; ++j)
      s.push_back(basis(n, j) - basis(n, (j + 1) % n));
  }
  return s;
}

CMatrix polarize(const QuadraticForm& q, Eigen::Index n,
                 const ToleranceConfig& tol) {
  const auto samples = polarization_samples(n);
  std::vector<Cplx> values;
  values.reserve(samples.size());
  for (const auto& v : samples) values.push_back(q(v));

  CMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(j, j) = values[j];

  const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t plus_base = static_cast<std::size_t>(n);
  const std::size_t imag_base = plus_base + pairs;
  std::size_t pair = 0;
  const Cplx i(0.0, 1.0);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k, ++pair) {
      const Cplx s1 = values[plus_base + pair] - values[j] - values[k];
      const Cplx s2 = values[imag_base + pair] - values[j] - values[k];
      m(j, k) = (s1 - i * s2) / 2.0;
      m(k, j) = (s1 + i * s2) / 2.0;
    }
  }

  for (std::size_t idx = 0; idx < samples.size(); ++idx) {
    const double dev = entry_dist(values[idx], evaluate(m, samples[idx]));
    if (dev > tol.margin())
      fail(ErrorKind::InconsistentForm,
           "form is not quadratic: sample " + std::to_string(idx) +
               " deviates by " + std::to_string(dev));
  }
  return m;
}

QuadraticForm quadratic_form(const CMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorKind::DimensionMismatch, "quadratic_form needs a square matrix");
  return [m](const CVector& v) -> Cplx {
    if (v.size() != m.rows())
      fail(ErrorKind::DimensionMismatch, "quadratic form argument size");
    return evaluate(m, v);
  };
}

}  // namespace orbsym
