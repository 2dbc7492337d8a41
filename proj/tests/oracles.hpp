// Brute-force reference implementations used only by the test suites.
//
// Everything here is deliberately independent of the library's algorithms:
// vertices come from enumerating tight row subsets, optima from evaluating
// over those vertices, convex membership from Carathéodory subset search,
// and parity solutions from exhaustive 0-1 enumeration. Slow on purpose;
// keep the instances small.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "cutrank/geometry.hpp"
#include "cutrank/graph.hpp"
#include "cutrank/half_point.hpp"
#include "cutrank/parity.hpp"
#include "cutrank/polytope.hpp"
#include "cutrank/rational.hpp"

namespace oracle {

using cutrank::Graph;
using cutrank::HPolytope;
using cutrank::LinearRow;
using cutrank::ParitySystem;
using cutrank::Rat;
using cutrank::RatVector;
using cutrank::Rel;

// ---------------------------------------------------------------------------
// Exact dense Gaussian elimination, self-contained.

struct GaussResult {
  bool consistent = false;
  bool unique = false;
  std::vector<Rat> solution;  // populated when consistent && unique
};

// Solves A y = rhs for A of size m x k.
inline GaussResult gauss_solve(std::vector<std::vector<Rat>> A,
                               std::vector<Rat> rhs) {
  const std::size_t m = A.size();
  const std::size_t k = m == 0 ? 0 : A[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < m; ++col) {
    std::size_t p = row;
    while (p < m && A[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(A[p], A[row]);
    std::swap(rhs[p], rhs[row]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || A[r][col] == 0) continue;
      const Rat f = A[r][col] / A[row][col];
      for (std::size_t c = col; c < k; ++c) A[r][c] -= f * A[row][c];
      rhs[r] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  GaussResult res;
  for (std::size_t r = row; r < m; ++r) {
    if (rhs[r] != 0) return res;  // 0 = nonzero: inconsistent
  }
  res.consistent = true;
  res.unique = pivot_col.size() == k;
  if (res.unique) {
    res.solution.assign(k, Rat(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      res.solution[pivot_col[r]] = rhs[r] / A[r][pivot_col[r]];
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Row evaluation written out longhand (no library helpers).

inline Rat dot(const RatVector& a, const RatVector& b) {
  Rat s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

inline bool satisfies(const LinearRow& row, const RatVector& x) {
  const Rat v = dot(row.coeffs, x);
  switch (row.rel) {
    case Rel::Le: return v <= row.rhs;
    case Rel::Ge: return v >= row.rhs;
    case Rel::Eq: return v == row.rhs;
  }
  return false;
}

inline bool contains(const HPolytope& P, const RatVector& x) {
  for (const LinearRow& row : P.rows) {
    if (!satisfies(row, x)) return false;
  }
  return true;
}

inline std::vector<RatVector> sort_points(std::vector<RatVector> pts) {
  std::sort(pts.begin(), pts.end(), [](const RatVector& a, const RatVector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  });
  return pts;
}

// ---------------------------------------------------------------------------
// Convex membership via Carathéodory: x is in conv(V) iff it is a convex
// combination of at most dim+1 affinely independent members of V.

inline bool in_hull(const RatVector& x, const std::vector<RatVector>& V) {
  if (V.empty()) return false;
  const std::size_t d = static_cast<std::size_t>(x.size());
  const std::size_t cap = std::min(V.size(), d + 1);
  const std::size_t n = V.size();
  for (std::size_t size = 1; size <= cap; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      // solve sum lambda_j v_j = x, sum lambda_j = 1
      std::vector<std::vector<Rat>> A(d + 1, std::vector<Rat>(size));
      std::vector<Rat> b(d + 1);
      for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t r = 0; r < d; ++r) {
          A[r][j] = V[idx[j]](static_cast<Eigen::Index>(r));
        }
        A[d][j] = 1;
      }
      for (std::size_t r = 0; r < d; ++r) b[r] = x(static_cast<Eigen::Index>(r));
      b[d] = 1;
      const GaussResult g = gauss_solve(std::move(A), std::move(b));
      if (g.consistent && g.unique &&
          std::all_of(g.solution.begin(), g.solution.end(),
                      [](const Rat& l) { return l >= 0; })) {
        return true;
      }
      std::size_t i = size;
      bool done = false;
      while (i > 0) {
        --i;
        if (idx[i] != i + n - size) break;
        if (i == 0) done = true;
      }
      if (done) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Vertex enumeration: every vertex of a bounded P is the unique solution of
// some dim-subset of its rows turned into equalities.

inline std::vector<RatVector> vertices(const HPolytope& P) {
  const std::size_t d = static_cast<std::size_t>(P.dim);
  const std::size_t m = P.rows.size();
  std::vector<RatVector> out;
  if (m < d) return out;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    std::vector<std::vector<Rat>> A(d, std::vector<Rat>(d));
    std::vector<Rat> b(d);
    for (std::size_t r = 0; r < d; ++r) {
      const LinearRow& row = P.rows[idx[r]];
      for (std::size_t c = 0; c < d; ++c) A[r][c] = row.coeffs(static_cast<Eigen::Index>(c));
      b[r] = row.rhs;
    }
    const GaussResult g = gauss_solve(std::move(A), std::move(b));
    if (g.consistent && g.unique) {
      RatVector x(static_cast<Eigen::Index>(d));
      for (std::size_t c = 0; c < d; ++c) x(static_cast<Eigen::Index>(c)) = g.solution[c];
      if (contains(P, x) &&
          std::none_of(out.begin(), out.end(),
                       [&](const RatVector& y) { return y == x; })) {
        out.push_back(x);
      }
    }
    // next d-combination of row indices
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (idx[i] != i + m - d) break;
      if (i == 0) return sort_points(out);
    }
    ++idx[i];
    for (std::size_t j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// The candidate basic points above include non-extreme boundary points when
// rows are degenerate; filter to actual extreme points by Carathéodory.
inline std::vector<RatVector> extreme_subset(const std::vector<RatVector>& pts) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<RatVector> others;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) others.push_back(pts[j]);
    }
    if (!in_hull(pts[i], others)) out.push_back(pts[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Optimum by evaluation over the enumerated vertices (P must be bounded).

inline std::optional<Rat> optimum(const HPolytope& P, const RatVector& c,
                                  bool maximize) {
  const std::vector<RatVector> V = vertices(P);
  if (V.empty()) return std::nullopt;
  Rat best = dot(c, V[0]);
  for (const RatVector& v : V) {
    const Rat val = dot(c, v);
    if (maximize ? val > best : val < best) best = val;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Exhaustive parity solving.

inline std::vector<std::vector<int>> parity_solutions(const ParitySystem& S) {
  std::vector<std::vector<int>> out;
  const int n = S.nvars;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t r = 0; r < S.rows.size() && ok; ++r) {
      int sum = 0;
      for (int c = 0; c < n; ++c) {
        if (S.rows[r][static_cast<std::size_t>(c)] && ((mask >> c) & 1)) ++sum;
      }
      ok = (sum % 2) == static_cast<int>(S.rhs[r]);
    }
    if (ok) {
      std::vector<int> sol(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) sol[static_cast<std::size_t>(c)] = (mask >> c) & 1;
      out.push_back(std::move(sol));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact edge expansion by scanning every candidate S.

inline Rat edge_expansion(const Graph& G) {
  Rat best;
  bool first = true;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << G.n); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size > G.n / 2) continue;
    int cut = 0;
    for (const auto& [u, v] : G.edges) {
      const bool iu = (mask >> u) & 1;
      const bool iv = (mask >> v) & 1;
      if (iu != iv) ++cut;
    }
    const Rat ratio = Rat(cut) / Rat(size);
    if (first || ratio < best) {
      best = ratio;
      first = false;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// 0-1 points of P by direct evaluation.

inline std::vector<RatVector> integer_points(const HPolytope& P) {
  std::vector<RatVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << P.dim); ++mask) {
    RatVector x(P.dim);
    for (int c = 0; c < P.dim; ++c) x(c) = Rat(static_cast<int>((mask >> c) & 1));
    if (contains(P, x)) out.push_back(std::move(x));
  }
  return sort_points(std::move(out));
}

// ---------------------------------------------------------------------------
// Deterministic helpers for seeded property tests.

inline Rat random_rat(std::mt19937_64& rng, int num_range, int den_max) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  return Rat(num(rng)) / Rat(den(rng));
}

// A random nonempty polytope inside the 0-1 box: the box plus a few random
// cuts that keep the box center feasible (so the result is never empty).
inline HPolytope random_box_polytope(int dim, int extra_rows,
                                     std::mt19937_64& rng) {
  using cutrank::unit_box;
  HPolytope P = unit_box(dim);
  const Rat half(1, 2);
  for (int r = 0; r < extra_rows; ++r) {
    LinearRow row;
    row.coeffs = RatVector(dim);
    Rat at_center = 0;
    for (int c = 0; c < dim; ++c) {
      row.coeffs(c) = random_rat(rng, 3, 2);
      at_center += row.coeffs(c) * half;
    }
    row.rel = Rel::Le;
    // keep the center strictly feasible with a random nonnegative slack
    row.rhs = at_center + Rat(std::uniform_int_distribution<int>(0, 2)(rng)) / Rat(2);
    P.rows.push_back(std::move(row));
  }
  return P;
}

// ---------------------------------------------------------------------------
// Exhaustive optimum of the certificate game: the largest minimum red count
// any valid tree rooted at the all-half point can force over the
// half-integral points of P. Least fixpoint (value iteration from 0) of
//
//   v(x) = max(0, red(x), blue(x))
//   red(x)  = 1 + min over the complete rounding-child set, legal only when
//             every rounding of every nonempty J (|J| <= t) stays in P
//   blue(x) = max theta such that x is in the hull of the other
//             half-integral points of value >= theta.
//
// Hull membership goes through the library LP (itself checked against the
// Caratheodory search above); the game dynamics are re-derived here from
// scratch. Returns -1 when the all-half point is not in P.
inline int optimal_certificate_value(const HPolytope& P, int t) {
  using cutrank::HalfIntegralPoint;
  using cutrank::HalfVal;
  using cutrank::VPolytope;

  std::vector<HalfIntegralPoint> S;
  std::vector<RatVector> Sv;
  std::vector<int> trits(static_cast<std::size_t>(P.dim), 0);
  for (;;) {
    HalfIntegralPoint x;
    for (int tr : trits) {
      x.values.push_back(tr == 0   ? HalfVal::Zero
                         : tr == 1 ? HalfVal::Half
                                   : HalfVal::One);
    }
    RatVector v = x.to_ratvector();
    if (contains(P, v)) {
      S.push_back(std::move(x));
      Sv.push_back(std::move(v));
    }
    int i = 0;
    while (i < P.dim && trits[static_cast<std::size_t>(i)] == 2) {
      trits[static_cast<std::size_t>(i++)] = 0;
    }
    if (i == P.dim) break;
    ++trits[static_cast<std::size_t>(i)];
  }

  const auto index_of = [&](const HalfIntegralPoint& x) -> int {
    for (std::size_t i = 0; i < S.size(); ++i) {
      if (S[i] == x) return static_cast<int>(i);
    }
    return -1;
  };
  const int root = index_of(cutrank::all_half(P.dim));
  if (root < 0) return -1;

  // complete red child list per node, or empty when red is illegal
  std::vector<std::vector<int>> red_children(S.size());
  std::vector<char> red_legal(S.size(), 0);
  for (std::size_t i = 0; i < S.size(); ++i) {
    const std::vector<int> E = S[i].fractional_support();
    if (static_cast<int>(E.size()) < 1 || static_cast<int>(E.size()) < t) {
      continue;
    }
    bool ok = true;
    std::vector<int> kids;
    for (std::uint64_t mask = 1; ok && mask < (std::uint64_t{1} << E.size());
         ++mask) {
      if (std::popcount(mask) > t) continue;
      for (int a = 0; ok && a < 2; ++a) {
        HalfIntegralPoint child = S[i];
        for (std::size_t j = 0; j < E.size(); ++j) {
          if (mask >> j & 1) {
            child.values[static_cast<std::size_t>(E[j])] =
                a ? HalfVal::One : HalfVal::Zero;
          }
        }
        const int id = index_of(child);
        if (id < 0) {
          ok = false;
        } else {
          kids.push_back(id);
        }
      }
    }
    if (ok) {
      red_legal[i] = 1;
      red_children[i] = std::move(kids);
    }
  }

  std::vector<int> val(S.size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < S.size(); ++i) {
      int best = 0;
      if (red_legal[i]) {
        int worst = std::numeric_limits<int>::max();
        for (int id : red_children[i]) {
          worst = std::min(worst, val[static_cast<std::size_t>(id)]);
        }
        best = std::max(best, 1 + worst);
      }
      int vmax = 0;
      for (std::size_t j = 0; j < S.size(); ++j) {
        if (j != i) vmax = std::max(vmax, val[j]);
      }
      for (int theta = vmax; theta > best; --theta) {
        VPolytope Q;
        Q.dim = P.dim;
        for (std::size_t j = 0; j < S.size(); ++j) {
          if (j != i && val[j] >= theta) Q.vertices.push_back(Sv[j]);
        }
        if (!Q.vertices.empty() &&
            cutrank::conv_membership(Sv[i], Q).member) {
          best = theta;
          break;
        }
      }
      if (best > val[i]) {
        val[i] = best;
        changed = true;
      }
    }
  }
  return val[static_cast<std::size_t>(root)];
}

}  // namespace oracle
