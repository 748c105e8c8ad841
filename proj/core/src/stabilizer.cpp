#include "orbsym/stabilizer.hpp"

#include <Eigen/LU>
#include <Eigen/QR>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "orbsym/error.hpp"

namespace orbsym {

const char* to_string(CompareVerdict v) {
  switch (v) {
    case CompareVerdict::Equal: return "equal";
    case CompareVerdict::ProperSupergroup: return "proper_supergroup";
    case CompareVerdict::ProperSubgroup: return "proper_subgroup";
    case CompareVerdict::Incomparable: return "incomparable";
  }
  return "unknown";
}

CMatrix gram(const PointConfiguration& p) {
  const Eigen::Index m = static_cast<Eigen::Index>(p.size());
  CMatrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      g(i, j) = inner(p.points[static_cast<std::size_t>(i)],
                      p.points[static_cast<std::size_t>(j)]);
  return g;
}

namespace {

// Gram entries mapped to dense class ids. Requires the margin band between
// any two entries to be empty, so "same class" is a stable equivalence.
struct QuantizedGram {
  std::size_t m = 0;
  std::vector<int> cls;  // row-major, m*m

  int at(std::size_t i, std::size_t j) const { return cls[i * m + j]; }
};

QuantizedGram quantize(const CMatrix& g, const ToleranceConfig& tol) {
  const std::size_t m = static_cast<std::size_t>(g.rows());
  std::vector<Cplx> flat;
  flat.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      flat.push_back(g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));

  for (std::size_t a = 0; a < flat.size(); ++a)
    for (std::size_t b = a + 1; b < flat.size(); ++b) {
      const double d = entry_dist(flat[a], flat[b]);
      if (d > tol.eps_entry && d <= tol.margin())
        fail(ErrorKind::AmbiguousIdentification,
             "two Gram entries are " + std::to_string(d) +
                 " apart, inside the margin band");
    }

  QuantizedGram q;
  q.m = m;
  q.cls.resize(m * m);
  std::vector<Cplx> reps;
  for (std::size_t idx = 0; idx < flat.size(); ++idx) {
    int id = -1;
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (entry_dist(flat[idx], reps[r]) <= tol.eps_entry) {
        id = static_cast<int>(r);
        break;
      }
    if (id < 0) {
      id = static_cast<int>(reps.size());
      reps.push_back(flat[idx]);
    }
    q.cls[idx] = id;
  }
  return q;
}

// Iterated refinement of point colors by the multiset of (color, entry
// class, transposed entry class) seen along each row. Stable colors are
// invariants of every Gram automorphism, which prunes the backtracking.
std::vector<int> refine_colors(const QuantizedGram& q) {
  const std::size_t m = q.m;
  std::vector<int> colors(m);
  {
    std::vector<int> seen;
    for (std::size_t i = 0; i < m; ++i) {
      const int diag = q.at(i, i);
      auto it = std::find(seen.begin(), seen.end(), diag);
      if (it == seen.end()) {
        seen.push_back(diag);
        colors[i] = static_cast<int>(seen.size()) - 1;
      } else {
        colors[i] = static_cast<int>(it - seen.begin());
      }
    }
  }
  for (;;) {
    using Signature = std::pair<int, std::vector<std::tuple<int, int, int>>>;
    std::vector<Signature> sigs(m);
    for (std::size_t i = 0; i < m; ++i) {
      sigs[i].first = colors[i];
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        sigs[i].second.emplace_back(colors[j], q.at(i, j), q.at(j, i));
      }
      std::sort(sigs[i].second.begin(), sigs[i].second.end());
    }
    std::vector<int> next(m);
    std::vector<Signature> seen;
    for (std::size_t i = 0; i < m; ++i) {
      auto it = std::find(seen.begin(), seen.end(), sigs[i]);
      if (it == seen.end()) {
        seen.push_back(sigs[i]);
        next[i] = static_cast<int>(seen.size()) - 1;
      } else {
        next[i] = static_cast<int>(it - seen.begin());
      }
    }
    if (next == colors) return colors;
    colors = std::move(next);
  }
}

std::vector<Permutation> search_automorphisms(const QuantizedGram& q) {
  const std::size_t m = q.m;
  const std::vector<int> colors = refine_colors(q);

  std::vector<std::size_t> class_size(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (colors[j] == colors[i]) ++class_size[i];

  // process smallest classes first, ties by point index
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return class_size[a] < class_size[b];
                   });

  std::vector<Permutation> out;
  Permutation sigma(m, 0);
  std::vector<char> used(m, 0);
  std::function<void(std::size_t)> recurse = [&](std::size_t level) {
    if (level == m) {
      out.push_back(sigma);
      return;
    }
    const std::size_t i = order[level];
    for (std::size_t cand = 0; cand < m; ++cand) {
      if (used[cand] || colors[cand] != colors[i]) continue;
      bool ok = true;
      for (std::size_t l = 0; l < level && ok; ++l) {
        const std::size_t a = order[l];
        ok = q.at(i, a) == q.at(cand, sigma[a]) &&
             q.at(a, i) == q.at(sigma[a], cand);
      }
      if (!ok) continue;
      sigma[i] = cand;
      used[cand] = 1;
      recurse(level + 1);
      used[cand] = 0;
    }
  };
  recurse(0);
  std::sort(out.begin(), out.end());
  return out;
}

void check_distinct_points(const PointConfiguration& p,
                           const ToleranceConfig& tol) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (vector_dist(p.points[i], p.points[j]) <= tol.margin())
        fail(ErrorKind::AmbiguousIdentification,
             "points " + std::to_string(i) + " and " + std::to_string(j) +
                 " are not separated");
}

bool is_permutation(const Permutation& sigma, std::size_t m) {
  if (sigma.size() != m) return false;
  std::vector<char> hit(m, 0);
  for (std::size_t v : sigma) {
    if (v >= m || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

StabilizerResult lift_all(const PointConfiguration& p,
                          std::vector<Permutation> perms,
                          const ToleranceConfig& tol) {
  StabilizerResult result;
  result.elements.reserve(perms.size());
  for (const auto& sigma : perms) result.elements.push_back(lift(p, sigma, tol));
  result.permutations = std::move(perms);
  result.order = result.permutations.size();
  return result;
}

}  // namespace

std::vector<Permutation> gram_automorphisms(const PointConfiguration& p,
                                            const ToleranceConfig& tol) {
  if (p.size() == 0) return {Permutation{}};
  check_distinct_points(p, tol);
  return search_automorphisms(quantize(gram(p), tol));
}

CMatrix lift(const PointConfiguration& p, const Permutation& sigma,
             const ToleranceConfig& tol) {
  const std::size_t m = p.size();
  const Eigen::Index n = p.n;
  if (!is_permutation(sigma, m))
    fail(ErrorKind::BadInput, "lift: sigma is not a permutation of the points");

  CMatrix pts(n, static_cast<Eigen::Index>(m));
  for (std::size_t j = 0; j < m; ++j)
    pts.col(static_cast<Eigen::Index>(j)) = p.points[j];
  if (numeric_rank(pts, tol.eps_rank) < n)
    fail(ErrorKind::NotSpanning, "lift: points do not span C^n");

  // well-conditioned spanning subset via column-pivoted QR
  Eigen::ColPivHouseholderQR<CMatrix> qr(pts);
  const auto& pivots = qr.colsPermutation().indices();
  CMatrix basis(n, n), image(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const std::size_t idx = static_cast<std::size_t>(pivots(c));
    basis.col(c) = p.points[idx];
    image.col(c) = p.points[sigma[idx]];
  }
  // solve C * basis = image
  const CMatrix lifted =
      basis.transpose().partialPivLu().solve(image.transpose()).transpose();

  for (std::size_t i = 0; i < m; ++i) {
    const double d = vector_dist(lifted * p.points[i], p.points[sigma[i]]);
    if (d > tol.eps_entry)
      fail(ErrorKind::NotIsometric,
           "lift: point " + std::to_string(i) + " misses its image by " +
               std::to_string(d));
  }
  if (!is_unitary(lifted, tol))
    fail(ErrorKind::NotIsometric, "lift: solved matrix is not unitary");
  return lifted;
}

StabilizerResult setwise_stabilizer(const PointConfiguration& p,
                                    const ToleranceConfig& tol,
                                    std::size_t max_order) {
  if (!spans(p.points, p.n, tol))
    fail(ErrorKind::NotSpanning,
         "setwise stabilizer of a non-spanning configuration is not finite");
  auto perms = gram_automorphisms(p, tol);
  if (perms.size() > max_order)
    fail(ErrorKind::OrderExceeded,
         "stabilizer order " + std::to_string(perms.size()) +
             " exceeds the cap " + std::to_string(max_order));
  return lift_all(p, std::move(perms), tol);
}

CompareVerdict compare(const FiniteMatrixGroup& g, const StabilizerResult& h,
                       const ToleranceConfig& tol) {
  auto in_h = [&](const CMatrix& m) -> bool {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : h.elements) best = std::min(best, matrix_dist(e, m));
    if (best <= tol.eps_entry) return true;
    if (best <= tol.margin())
      fail(ErrorKind::AmbiguousIdentification,
           "compare: element inside the margin band of the stabilizer");
    return false;
  };

  bool h_in_g = true;
  for (const auto& e : h.elements)
    if (!member_index(g, e, tol)) {
      h_in_g = false;
      break;
    }
  bool g_in_h = true;
  for (const auto& e : g.elements)
    if (!in_h(e)) {
      g_in_h = false;
      break;
    }

  if (h_in_g && g_in_h) return CompareVerdict::Equal;
  if (g_in_h) return CompareVerdict::ProperSupergroup;
  if (h_in_g) return CompareVerdict::ProperSubgroup;
  return CompareVerdict::Incomparable;
}

StabilizerResult brute_stabilizer(const PointConfiguration& p,
                                  const ToleranceConfig& tol,
                                  std::size_t max_points) {
  const std::size_t m = p.size();
  if (m > max_points)
    fail(ErrorKind::TooManyPoints,
         std::to_string(m) + " points exceed the brute-force limit of " +
             std::to_string(max_points));
  if (!spans(p.points, p.n, tol))
    fail(ErrorKind::NotSpanning,
         "setwise stabilizer of a non-spanning configuration is not finite");

  const CMatrix g = gram(p);
  Permutation sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Permutation> keep;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      for (std::size_t j = 0; j < m && ok; ++j)
        ok = entry_dist(g(static_cast<Eigen::Index>(sigma[i]),
                          static_cast<Eigen::Index>(sigma[j])),
                        g(static_cast<Eigen::Index>(i),
                          static_cast<Eigen::Index>(j))) <= tol.eps_entry;
    if (ok) keep.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return lift_all(p, std::move(keep), tol);
}

}  // namespace orbsym
