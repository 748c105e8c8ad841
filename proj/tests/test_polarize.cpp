#include "doctest.h"

#include "orbsym/error.hpp"
#include "orbsym/polarize.hpp"
#include "test_support.hpp"

using namespace orbsym;
using test::make_vector;

namespace {
const ToleranceConfig kTol{};
const Cplx I(0, 1);
}  // namespace

TEST_CASE("sample set has the documented order and size") {
  const auto s = polarization_samples(2);
  REQUIRE(s.size() == 6);  // n^2 + n
  CHECK(vector_dist(s[0], make_vector({1, 0})) == 0.0);
  CHECK(vector_dist(s[1], make_vector({0, 1})) == 0.0);
  CHECK(vector_dist(s[2], make_vector({1, 1})) == 0.0);
  CHECK(vector_dist(s[3], make_vector({1, I})) == 0.0);
  CHECK(vector_dist(s[4], make_vector({1, -1})) == 0.0);
  CHECK(vector_dist(s[5], make_vector({-1, 1})) == 0.0);
  for (Eigen::Index n = 1; n <= 6; ++n)
    CHECK(polarization_samples(n).size() ==
          static_cast<std::size_t>(n * n + n));
}

TEST_CASE("squared norm polarizes to the identity") {
  const auto q = [](const CVector& v) { return Cplx(v.squaredNorm(), 0); };
  const CMatrix m = polarize(q, 2, kTol);
  CHECK(matrix_dist(m, CMatrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("nilpotent example reconstructs from its four hand-checked samples") {
  CMatrix n2(2, 2);
  n2 << 0, 1, 0, 0;
  const auto q = quadratic_form(n2);
  // the four reconstruction samples, checked by expanding v^* M v by hand
  CHECK(q(make_vector({1, 0})) == Cplx(0, 0));
  CHECK(q(make_vector({0, 1})) == Cplx(0, 0));
  CHECK(q(make_vector({1, 1})) == Cplx(1, 0));
  CHECK(q(make_vector({1, I})) == Cplx(0, 1));
  CHECK(matrix_dist(polarize(q, 2, kTol), n2) < 1e-14);
}

TEST_CASE("random matrices round-trip through their quadratic form") {
  int done = 0;
  for (std::uint64_t s = 0; done < 100; ++s, ++done) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(s % 6);
    const CMatrix m = test::random_matrix(n, 4242 + s);
    const CMatrix rec = polarize(quadratic_form(m), n, kTol);
    CHECK(matrix_dist(rec, m) <= 4.0 * kTol.eps_entry);
  }
}

TEST_CASE("self-adjoint matrices come back self-adjoint") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(s % 6);
    const CMatrix a = test::random_matrix(n, 777 + s);
    const CMatrix h = (a + a.adjoint()) / 2.0;
    const CMatrix rec = polarize(quadratic_form(h), n, kTol);
    CHECK(matrix_dist(rec, h) <= 1e-9);
    CHECK(matrix_dist(rec, rec.adjoint()) <= 1e-9);
  }
}

TEST_CASE("equal quadratic forms mean equal matrices") {
  // polarize inverts the form, so two matrices agreeing on the sample set
  // agree everywhere; reconstruction from a's samples recovers a, not some
  // other matrix with the same samples
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(s % 4);
    const CMatrix a = test::random_matrix(n, 1300 + s);
    const auto qa = quadratic_form(a);
    const CMatrix b = polarize(qa, n, kTol);
    CHECK(matrix_dist(a, b) <= 4.0 * kTol.eps_entry);
    for (const auto& v : polarization_samples(n))
      CHECK(std::abs(qa(v) - quadratic_form(b)(v)) < 1e-12);
  }
}

TEST_CASE("non-quadratic input raises InconsistentForm") {
  const auto quartic = [](const CVector& v) {
    const double n2 = v.squaredNorm();
    return Cplx(n2 * n2, 0);
  };
  CHECK_THROWS_AS(polarize(quartic, 1, kTol), Error);
  CHECK_THROWS_AS(polarize(quartic, 2, kTol), Error);
  CHECK_THROWS_AS(polarize(quartic, 3, kTol), Error);
  try {
    polarize(quartic, 2, kTol);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InconsistentForm);
  }
}

TEST_CASE("polarize rejects nonpositive dimension") {
  const auto q = [](const CVector&) { return Cplx(0, 0); };
  CHECK_THROWS_AS(polarize(q, 0, kTol), Error);
}
