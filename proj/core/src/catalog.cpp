#include "orbsym/catalog.hpp"

#include <cmath>

namespace orbsym::catalog {

CMatrix rotation90() {
  CMatrix r(2, 2);
  r << Cplx(0, 0), Cplx(-1, 0), Cplx(1, 0), Cplx(0, 0);
  return r;
}

CMatrix rotation2d(double theta) {
  CMatrix r(2, 2);
  const double c = std::cos(theta), s = std::sin(theta);
  r << Cplx(c, 0), Cplx(-s, 0), Cplx(s, 0), Cplx(c, 0);
  return r;
}

std::vector<CMatrix> trivial(Eigen::Index n) {
  return {CMatrix::Identity(n, n)};
}

std::vector<CMatrix> cyclic_u1(int k) {
  CMatrix g(1, 1);
  const double theta = 2.0 * M_PI / k;
  g(0, 0) = Cplx(std::cos(theta), std::sin(theta));
  return {g};
}

std::vector<CMatrix> cyclic_rotation(int k) {
  return {rotation2d(2.0 * M_PI / k)};
}

std::vector<CMatrix> negation(Eigen::Index n) {
  return {CMatrix(-CMatrix::Identity(n, n))};
}

std::vector<CMatrix> quaternion8() {
  CMatrix a(2, 2), b(2, 2);
  a << Cplx(0, 1), Cplx(0, 0), Cplx(0, 0), Cplx(0, -1);
  b << Cplx(0, 0), Cplx(1, 0), Cplx(-1, 0), Cplx(0, 0);
  return {a, b};
}

std::vector<CMatrix> dihedral8() {
  CMatrix reflect(2, 2);
  reflect << Cplx(1, 0), Cplx(0, 0), Cplx(0, 0), Cplx(-1, 0);
  return {rotation90(), reflect};
}

CMatrix coordinate_cycle(Eigen::Index n) {
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m((j + 1) % n, j) = Cplx(1, 0);
  return m;
}

CMatrix coordinate_swap01(Eigen::Index n) {
  CMatrix m = CMatrix::Identity(n, n);
  m(0, 0) = m(1, 1) = Cplx(0, 0);
  m(0, 1) = m(1, 0) = Cplx(1, 0);
  return m;
}

std::vector<CMatrix> symmetric_permutations(Eigen::Index n) {
  if (n < 2) return trivial(n);
  return {coordinate_swap01(n), coordinate_cycle(n)};
}

}  // namespace orbsym::catalog
