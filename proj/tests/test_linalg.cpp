#include "doctest.h"

#include "orbsym/catalog.hpp"
#include "orbsym/error.hpp"
#include "orbsym/linalg.hpp"
#include "test_support.hpp"

using namespace orbsym;
using test::make_vector;

namespace {
const ToleranceConfig kTol{};
const Cplx I(0, 1);
}  // namespace

TEST_CASE("inner product on frozen examples") {
  CHECK(inner(make_vector({1, 0}), make_vector({0, 1})) == Cplx(0, 0));
  CHECK(inner(make_vector({1, I}), make_vector({1, I})) == Cplx(2, 0));

  // R90 * (1, 1+i) = (-(1+i), 1); pairing against (1, 1+i) gives -2i
  const CVector x = make_vector({1, Cplx(1, 1)});
  const CVector u = catalog::rotation90() * x;
  CHECK(vector_dist(u, make_vector({Cplx(-1, -1), 1})) == 0.0);
  CHECK(std::abs(inner(u, x) - Cplx(0, -2)) < 1e-15);

  CHECK_THROWS_AS(inner(make_vector({1}), make_vector({1, 0})), Error);
}

TEST_CASE("inner product is conjugate symmetric and sesquilinear") {
  for (Eigen::Index n = 1; n <= 6; ++n) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const CVector x = test::random_vector(n, 100 * n + s);
      const CVector y = test::random_vector(n, 100 * n + s + 50);
      const Cplx xy = inner(x, y);
      CHECK(std::abs(xy - std::conj(inner(y, x))) < 1e-12);
      const Cplx lambda(0.3, -1.7);
      CHECK(std::abs(inner(lambda * x, y) - lambda * xy) < 1e-10);
      CHECK(std::abs(inner(x, lambda * y) - std::conj(lambda) * xy) < 1e-10);
      CHECK(inner(x, x).real() >= 0.0);
      CHECK(std::abs(inner(x, x).imag()) < 1e-12);
    }
  }
}

TEST_CASE("unitary matrices preserve inner products") {
  for (Eigen::Index n = 1; n <= 5; ++n) {
    const CMatrix u = test::random_unitary(n, 7 * n + 1);
    REQUIRE(is_unitary(u, kTol));
    for (std::uint64_t s = 0; s < 20; ++s) {
      const CVector x = test::random_vector(n, s);
      const CVector y = test::random_vector(n, s + 1000);
      CHECK(std::abs(inner(u * x, u * y) - inner(x, y)) <=
            4.0 * static_cast<double>(n) * kTol.eps_entry);
    }
  }
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(CMatrix::Identity(2, 2), kTol));
  CHECK(is_unitary(catalog::rotation90(), kTol));
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 2;
  CHECK_FALSE(is_unitary(d, kTol));
  CMatrix phase(1, 1);
  phase(0, 0) = std::polar(1.0, 0.37);
  CHECK(is_unitary(phase, kTol));
  CHECK_THROWS_AS(is_unitary(CMatrix::Zero(2, 3), kTol), Error);
}

TEST_CASE("spans") {
  CHECK(spans({make_vector({1, 0}), make_vector({0, 1})}, 2, kTol));
  CHECK(spans({make_vector({1})}, 1, kTol));
  CHECK_FALSE(spans({}, 2, kTol));
  CHECK_FALSE(spans({make_vector({1, 0})}, 2, kTol));

  // (1, i) is an eigenvector of R90, so its whole orbit is one line
  const CVector eig = make_vector({1, I});
  std::vector<CVector> orbit_line;
  CVector p = eig;
  for (int k = 0; k < 4; ++k) {
    orbit_line.push_back(p);
    p = catalog::rotation90() * p;
  }
  CHECK_FALSE(spans(orbit_line, 2, kTol));
}

TEST_CASE("spans is invariant under a unitary change of all vectors") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(s % 4);
    std::vector<CVector> vs;
    const std::size_t count = 1 + static_cast<std::size_t>(s % 5);
    for (std::size_t i = 0; i < count; ++i)
      vs.push_back(test::random_vector(n, 31 * s + i));
    const CMatrix u = test::random_unitary(n, 9000 + s);
    std::vector<CVector> moved;
    for (const auto& v : vs) moved.push_back(u * v);
    CHECK(spans(vs, n, kTol) == spans(moved, n, kTol));
  }
}

TEST_CASE("tolerance validation") {
  ToleranceConfig tol;
  CHECK_NOTHROW(tol.validate());
  tol.sep_factor = 1.5;
  CHECK_THROWS_AS(tol.validate(), Error);
  tol = ToleranceConfig{};
  tol.eps_entry = 0.0;
  CHECK_THROWS_AS(tol.validate(), Error);
  tol = ToleranceConfig{};
  tol.eps_rank = -1e-8;
  CHECK_THROWS_AS(tol.validate(), Error);
}

TEST_CASE("entrywise distances") {
  CHECK(entry_dist(Cplx(1, 2), Cplx(1, 2)) == 0.0);
  CHECK(entry_dist(Cplx(1, 0), Cplx(0, 0)) == 1.0);
  CHECK(entry_dist(Cplx(0, 3), Cplx(0, 1)) == 2.0);
  const CVector a = make_vector({1, I});
  CHECK(vector_dist(a, a) == 0.0);
  CHECK_THROWS_AS(vector_dist(a, make_vector({1})), Error);
}
