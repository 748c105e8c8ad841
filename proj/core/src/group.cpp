#include "orbsym/group.hpp"

#include <limits>
#include <string>
#include <utility>

#include "orbsym/error.hpp"

namespace orbsym {

namespace {

// Nearest element by entrywise distance, with the margin-band policy: a hit
// within eps_entry is a match, a nearest miss inside the band is ambiguous.
std::optional<std::size_t> locate(const std::vector<CMatrix>& elements,
                                  const CMatrix& m,
                                  const ToleranceConfig& tol) {
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_idx = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const double d = matrix_dist(elements[i], m);
    if (d < best) {
      best = d;
      best_idx = i;
    }
  }
  if (best <= tol.eps_entry) return best_idx;
  if (best <= tol.margin())
    fail(ErrorKind::AmbiguousIdentification,
         "matrix lies " + std::to_string(best) +
             " from its nearest group element, inside the margin band");
  return std::nullopt;
}

}  // namespace

FiniteMatrixGroup close(const std::vector<CMatrix>& generators,
                        const ToleranceConfig& tol, std::size_t max_order) {
  if (generators.empty())
    fail(ErrorKind::BadInput, "close needs at least one generator");
  if (max_order == 0) fail(ErrorKind::BadInput, "max_order must be positive");

  const Eigen::Index n = generators.front().rows();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const CMatrix& g = generators[i];
    if (g.rows() != g.cols())
      fail(ErrorKind::NonSquareMatrix,
           "generator " + std::to_string(i) + " is not square");
    if (g.rows() != n)
      fail(ErrorKind::DimensionMismatch,
           "generator " + std::to_string(i) + " has a different dimension");
    if (!all_finite(g))
      fail(ErrorKind::BadInput,
           "generator " + std::to_string(i) + " has non-finite entries");
    if (!is_unitary(g, tol))
      fail(ErrorKind::NonUnitaryGenerator,
           "generator " + std::to_string(i) + " is not unitary");
  }

  FiniteMatrixGroup group;
  group.n = n;
  group.elements.push_back(CMatrix::Identity(n, n));

  auto push = [&](CMatrix m) {
    if (group.elements.size() >= max_order)
      fail(ErrorKind::OrderExceeded,
           "closure exceeds max_order = " + std::to_string(max_order));
    group.elements.push_back(std::move(m));
  };

  // cyclic group of the first generator
  {
    CMatrix p = generators[0];
    for (;;) {
      const auto hit = locate(group.elements, p, tol);
      if (hit) {
        if (*hit != 0)
          fail(ErrorKind::AmbiguousIdentification,
               "generator power wrapped onto a non-identity element");
        break;
      }
      push(p);
      p = p * generators[0];
    }
  }

  // Dimino: for each further generator outside the group so far, append the
  // new right cosets of the previous subgroup, found by multiplying coset
  // representatives with the generators seen so far.
  for (std::size_t gi = 1; gi < generators.size(); ++gi) {
    if (locate(group.elements, generators[gi], tol)) continue;
    const std::size_t prev_order = group.elements.size();
    auto add_coset = [&](const CMatrix& rep) {
      push(rep);
      for (std::size_t j = 1; j < prev_order; ++j)
        push(group.elements[j] * rep);
    };
    add_coset(generators[gi]);
    for (std::size_t rep_pos = prev_order; rep_pos < group.elements.size();
         rep_pos += prev_order) {
      const CMatrix rep = group.elements[rep_pos];
      for (std::size_t k = 0; k <= gi; ++k) {
        const CMatrix candidate = rep * generators[k];
        if (!locate(group.elements, candidate, tol)) add_coset(candidate);
      }
    }
  }

  group.generator_indices.reserve(generators.size());
  for (const auto& g : generators)
    group.generator_indices.push_back(*locate(group.elements, g, tol));
  return group;
}

std::optional<std::size_t> member_index(const FiniteMatrixGroup& g,
                                        const CMatrix& m,
                                        const ToleranceConfig& tol) {
  if (m.rows() != g.n || m.cols() != g.n)
    fail(ErrorKind::DimensionMismatch, "member_index: dimension mismatch");
  return locate(g.elements, m, tol);
}

void validate_group(const FiniteMatrixGroup& g, const ToleranceConfig& tol) {
  if (g.n < 1 || g.elements.empty())
    fail(ErrorKind::BadInput, "validate_group: empty group");
  if (matrix_dist(g.identity(), CMatrix::Identity(g.n, g.n)) > tol.eps_entry)
    fail(ErrorKind::BadInput, "validate_group: element 0 is not the identity");
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    if (!all_finite(g.elements[i]) || !is_unitary(g.elements[i], tol))
      fail(ErrorKind::NonUnitaryGenerator,
           "validate_group: element " + std::to_string(i) + " is not unitary");
    for (std::size_t j = i + 1; j < g.elements.size(); ++j)
      if (matrix_dist(g.elements[i], g.elements[j]) <= tol.margin())
        fail(ErrorKind::AmbiguousIdentification,
             "validate_group: elements " + std::to_string(i) + " and " +
                 std::to_string(j) + " are not separated");
  }
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    if (!member_index(g, g.elements[i].adjoint(), tol))
      fail(ErrorKind::BadInput,
           "validate_group: inverse of element " + std::to_string(i) +
               " is missing");
    for (std::size_t j = 0; j < g.elements.size(); ++j)
      if (!member_index(g, g.elements[i] * g.elements[j], tol))
        fail(ErrorKind::BadInput,
             "validate_group: product " + std::to_string(i) + "*" +
                 std::to_string(j) + " is outside the element list");
  }
}

PointConfiguration orbit(const FiniteMatrixGroup& g, const CVector& x,
                         const ToleranceConfig& tol) {
  if (x.size() != g.n)
    fail(ErrorKind::DimensionMismatch, "orbit: vector dimension mismatch");
  if (!all_finite(x)) fail(ErrorKind::BadInput, "orbit: non-finite vector");
  if (x.norm() <= tol.eps_entry)
    fail(ErrorKind::ZeroVector, "orbit of the zero vector");

  PointConfiguration config;
  config.n = g.n;
  config.source_map.resize(g.order());

  for (std::size_t k = 0; k < g.order(); ++k) {
    const CVector p = g.elements[k] * x;
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < config.points.size(); ++i) {
      const double d = vector_dist(config.points[i], p);
      if (d < best) {
        best = d;
        best_idx = i;
      }
    }
    if (best <= tol.eps_entry) {
      ++config.multiplicities[best_idx];
      config.source_map[k] = best_idx;
    } else if (best <= tol.margin()) {
      fail(ErrorKind::AmbiguousIdentification,
           "orbit points " + std::to_string(best) + " apart, inside the margin band");
    } else {
      config.points.push_back(p);
      config.multiplicities.push_back(1);
      config.source_map[k] = config.points.size() - 1;
    }
  }

  // orbit-stabilizer consistency: every point is hit equally often
  const std::size_t m = config.points.size();
  if (g.order() % m != 0)
    fail(ErrorKind::AmbiguousIdentification,
         "orbit size does not divide the group order");
  const std::size_t expected = g.order() / m;
  for (std::size_t mult : config.multiplicities)
    if (mult != expected)
      fail(ErrorKind::AmbiguousIdentification,
           "orbit multiplicities are not uniform");
  return config;
}

}  // namespace orbsym
