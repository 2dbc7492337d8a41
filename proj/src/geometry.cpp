#include "cutrank/geometry.hpp"

#include <algorithm>
#include <utility>

#include "cutrank/bitset.hpp"
#include "cutrank/errors.hpp"
#include "cutrank/simplex.hpp"

namespace cutrank {

namespace {

// A halfspace a.x <= b used during incremental double description.
struct Halfspace {
  RatVector a;
  Rat b;
};

// Splits an H-polytope row into one or two <= halfspaces.
void append_halfspaces(const LinearRow& row, std::vector<Halfspace>* out) {
  switch (row.rel) {
    case Rel::Le:
      out->push_back({row.coeffs, row.rhs});
      break;
    case Rel::Ge:
      out->push_back({-row.coeffs, -row.rhs});
      break;
    case Rel::Eq:
      out->push_back({row.coeffs, row.rhs});
      out->push_back({-row.coeffs, -row.rhs});
      break;
  }
}

Rat eval_halfspace(const Halfspace& h, const RatVector& x) {
  Rat acc = -h.b;
  for (Eigen::Index i = 0; i < h.a.size(); ++i) {
    if (h.a(i) != 0) acc += h.a(i) * x(i);
  }
  return acc;  // <= 0 inside, 0 on the hyperplane
}

// Incremental double description: starting from generators `gens` (the
// vertex set of the intersection of the `processed` halfspaces, which must
// be bounded and nonempty), inserts each pending halfspace in order and
// returns the vertices of the full intersection.
std::vector<RatVector> dd_insert(std::vector<Halfspace> processed,
                                 std::vector<RatVector> gens,
                                 const std::vector<Halfspace>& pending) {
  const int n = gens.empty() ? 0 : static_cast<int>(gens.front().size());

  // Tight-incidence bitmasks over the processed halfspaces. Each mask bit
  // states `eval_halfspace(processed[h], gens[g]) == 0`, so masks can be
  // maintained incrementally: surviving generators gain one bit (the value
  // is already in hand), and only newly created cut points need a full
  // scan. The complete masks keep the combinatorial adjacency test sound
  // on degenerate geometry.
  std::vector<Bitset> tight(gens.size(), Bitset(processed.size()));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t h = 0; h < processed.size(); ++h) {
      if (eval_halfspace(processed[h], gens[g]) == 0) tight[g].set(h);
    }
  }
  auto full_mask = [&](const RatVector& p) {
    Bitset mask(processed.size());
    for (std::size_t h = 0; h < processed.size(); ++h) {
      if (eval_halfspace(processed[h], p) == 0) mask.set(h);
    }
    return mask;
  };

  for (const Halfspace& h : pending) {
    std::vector<Rat> val(gens.size());
    bool any_pos = false;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      val[g] = eval_halfspace(h, gens[g]);
      any_pos = any_pos || val[g] > 0;
    }
    processed.push_back(h);
    const std::size_t hbit = processed.size() - 1;
    if (!any_pos) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        tight[g].resize(processed.size());
        if (val[g] == 0) tight[g].set(hbit);
      }
      continue;
    }

    std::vector<RatVector> next;
    std::vector<Bitset> next_tight;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (val[g] > 0) continue;
      next.push_back(gens[g]);
      Bitset mask = tight[g];
      mask.resize(processed.size());
      if (val[g] == 0) mask.set(hbit);
      next_tight.push_back(std::move(mask));
    }
    // New vertices: cut each edge (adjacent inside/outside pair).
    for (std::size_t u = 0; u < gens.size(); ++u) {
      if (val[u] >= 0) continue;
      for (std::size_t w = 0; w < gens.size(); ++w) {
        if (val[w] <= 0) continue;
        const Bitset common = Bitset::intersection(tight[u], tight[w]);
        bool adjacent = true;
        for (std::size_t g = 0; g < gens.size() && adjacent; ++g) {
          if (g == u || g == w) continue;
          if (common.is_subset_of(tight[g])) adjacent = false;
        }
        if (!adjacent) continue;
        const Rat theta = val[u] / (val[u] - val[w]);  // in (0,1)
        RatVector cut(n);
        for (int i = 0; i < n; ++i) {
          cut(i) = gens[u](i) + theta * (gens[w](i) - gens[u](i));
        }
        next_tight.push_back(full_mask(cut));
        next.push_back(std::move(cut));
      }
    }
    // Sort generators (masks in lockstep); duplicate points carry equal
    // masks, so dropping all but the first keeps the pairing valid.
    std::vector<std::size_t> order(next.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return lex_less(next[a], next[b]);
    });
    std::vector<RatVector> sorted_next;
    std::vector<Bitset> sorted_tight;
    for (const std::size_t i : order) {
      if (!sorted_next.empty() && lex_compare(sorted_next.back(), next[i]) == 0) {
        continue;
      }
      sorted_next.push_back(std::move(next[i]));
      sorted_tight.push_back(std::move(next_tight[i]));
    }
    gens = std::move(sorted_next);
    tight = std::move(sorted_tight);
    if (gens.empty()) return gens;  // feasible set is empty
  }
  return gens;
}

// Double description seeded from a valid bounding box lo <= x <= hi:
// inserts the polytope's rows in canonical order; the result is the
// vertex set of box-intersect-rows no matter how loose the box is. The
// feasible set must be nonempty.
std::vector<RatVector> dd_cut_box(const HPolytope& P, const RatVector& lo,
                                  const RatVector& hi) {
  const int n = P.dim;
  int free_dims = 0;
  for (int i = 0; i < n; ++i) {
    if (lo(i) != hi(i)) ++free_dims;
  }
  if (free_dims > 16) {
    throw GuardError("dd_convert_h_to_v: bounding box has " +
                     std::to_string(free_dims) +
                     " non-degenerate dimensions (guard: 16)");
  }

  // Processed halfspace list starts with the box; generators start as the
  // box corners (collapsed coordinates contribute a single value).
  std::vector<Halfspace> processed;
  for (int i = 0; i < n; ++i) {
    RatVector e = RatVector::Zero(n);
    e(i) = 1;
    processed.push_back({-e, -lo(i)});  // x_i >= lo
    processed.push_back({e, hi(i)});    // x_i <= hi
  }
  std::vector<RatVector> gens;
  gens.push_back(lo);
  for (int i = 0; i < n; ++i) {
    if (lo(i) == hi(i)) continue;
    const std::size_t count = gens.size();
    for (std::size_t g = 0; g < count; ++g) {
      RatVector v = gens[g];
      v(i) = hi(i);
      gens.push_back(std::move(v));
    }
  }

  // Insert the polytope's own rows in canonical order.
  HPolytope sorted = P;
  canonicalize_rows(&sorted);
  std::vector<Halfspace> pending;
  for (const LinearRow& row : sorted.rows) append_halfspaces(row, &pending);

  return dd_insert(std::move(processed), std::move(gens), pending);
}

}  // namespace

VPolytope dd_convert_h_to_v(const HPolytope& P) {
  validate(P);
  const int n = P.dim;
  VPolytope out;
  out.dim = n;

  // Exact bounding box; doubles as the emptiness/boundedness check.
  RatVector lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    RatVector e = RatVector::Zero(n);
    e(i) = 1;
    LpSolution down, up;
    try {
      down = lp_optimize(P, e, LpSense::Min);
      if (down.feasible) up = lp_optimize(P, e, LpSense::Max);
    } catch (const UnboundedError&) {
      throw UnboundedError("dd_convert_h_to_v: input polyhedron is unbounded");
    }
    if (!down.feasible) return out;  // empty polytope: empty vertex list
    lo(i) = down.value;
    hi(i) = up.value;
  }

  out.vertices = dd_cut_box(P, lo, hi);
  if (out.vertices.empty()) {
    throw Error("dd_convert_h_to_v: internal: generator set emptied");
  }
  canonicalize_vertices(&out);
  return out;
}

VPolytope dd_convert_h_to_v_within(const HPolytope& P, const RatVector& lo,
                                   const RatVector& hi) {
  validate(P);
  if (lo.size() != P.dim || hi.size() != P.dim) {
    throw ContractError(
        "dd_convert_h_to_v_within: bounding box dimension mismatch");
  }
  for (int i = 0; i < P.dim; ++i) {
    if (lo(i) > hi(i)) {
      throw ContractError("dd_convert_h_to_v_within: inverted bounding box");
    }
  }
  VPolytope out;
  out.dim = P.dim;
  out.vertices = dd_cut_box(P, lo, hi);
  canonicalize_vertices(&out);
  return out;
}

namespace {

// Row-reduced echelon form of the difference matrix (rows = points - base).
// Returns pivot columns; `rref` rows end normalized with identity on pivots.
std::vector<int> reduced_row_echelon(std::vector<RatVector>* rows_in) {
  std::vector<RatVector>& rows = *rows_in;
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const Eigen::Index n = rows[0].size();
  std::size_t rank = 0;
  for (Eigen::Index col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel](col) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const Rat inv = 1 / rows[rank](col);
    if (inv != 1) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (rows[rank](j) != 0) rows[rank](j) *= inv;
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const Rat f = rows[r](col);
      if (f == 0) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (rows[rank](j) != 0) rows[r](j) -= f * rows[rank](j);
      }
    }
    pivots.push_back(static_cast<int>(col));
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

}  // namespace

HPolytope dd_convert_v_to_h(const VPolytope& Q) {
  validate(Q);
  if (Q.vertices.empty()) {
    throw ContractError("dd_convert_v_to_h: input must be nonempty");
  }
  const int n = Q.dim;
  VPolytope points = Q;
  canonicalize_vertices(&points);

  HPolytope out;
  out.dim = n;
  const RatVector& base = points.vertices.front();

  // Affine hull: RREF of the difference matrix gives both the intrinsic
  // coordinates (pivot columns) and the equality rows (free-column
  // null-space functionals).
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.vertices.size(); ++i) {
    diffs.push_back(points.vertices[i] - base);
  }
  const std::vector<int> pivots = reduced_row_echelon(&diffs);
  const int d = static_cast<int>(pivots.size());

  std::vector<bool> is_pivot(n, false);
  for (const int p : pivots) is_pivot[p] = true;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    LinearRow eq;
    eq.coeffs = RatVector::Zero(n);
    eq.coeffs(f) = 1;
    for (int r = 0; r < d; ++r) eq.coeffs(pivots[r]) = -diffs[r](f);
    eq.rel = Rel::Eq;
    eq.rhs = eval_row(eq, base);
    out.rows.push_back(std::move(eq));
  }
  if (d == 0) {  // single point: the equality rows alone pin it
    canonicalize_rows(&out);
    return out;
  }

  // Intrinsic coordinates y(x) = x|pivots - base|pivots map the affine hull
  // bijectively onto R^d; the hull becomes full-dimensional there.
  std::vector<RatVector> ys;
  for (const RatVector& v : points.vertices) {
    RatVector y(d);
    for (int r = 0; r < d; ++r) y(r) = v(pivots[r]) - base(pivots[r]);
    ys.push_back(std::move(y));
  }
  RatVector centroid = RatVector::Zero(d);
  for (const RatVector& y : ys) centroid += y;
  centroid /= Rat(static_cast<long>(ys.size()));

  // Polar body Z = {w : (y_i - centroid).w <= 1 for all i}; its vertices
  // are exactly the facets of the (full-dimensional) hull.
  HPolytope polar;
  polar.dim = d;
  std::vector<RatVector> shifted;
  for (const RatVector& y : ys) {
    LinearRow row;
    row.coeffs = y - centroid;
    row.rel = Rel::Le;
    row.rhs = 1;
    shifted.push_back(row.coeffs);
    polar.rows.push_back(std::move(row));
  }

  // Seed the double description with a simplex of d+1 valid rows instead
  // of an LP-derived bounding box. A basis of d shifted points plus the
  // implied row sum(non-basis a_i).w <= m-d (the shifted points sum to
  // zero, so that equals -sum(basis).w <= m-d) enclose Z in a bounded
  // simplex whose vertices are basis solves with small coordinates.
  if (d > 16) {
    throw GuardError("dd_convert_h_to_v: bounding box has " +
                     std::to_string(d) +
                     " non-degenerate dimensions (guard: 16)");
  }
  const std::size_t m = shifted.size();
  std::vector<std::size_t> basis;
  std::vector<RatVector> echelon;  // normalized eliminated basis vectors
  std::vector<int> pivot_col;
  for (std::size_t i = 0; i < m && basis.size() < static_cast<std::size_t>(d);
       ++i) {
    RatVector v = shifted[i];
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      const Rat f = v(pivot_col[r]);
      if (f != 0) v -= f * echelon[r];
    }
    int p = -1;
    for (int j = 0; j < d; ++j) {
      if (v(j) != 0) {
        p = j;
        break;
      }
    }
    if (p < 0) continue;  // dependent on the chosen basis so far
    v /= v(p);
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      const Rat f = echelon[r](p);
      if (f != 0) echelon[r] -= f * v;
    }
    echelon.push_back(std::move(v));
    pivot_col.push_back(p);
    basis.push_back(i);
  }
  if (basis.size() != static_cast<std::size_t>(d)) {
    throw Error("dd_convert_v_to_h: internal: point differences lost rank");
  }
  // Invert the basis matrix B (columns = chosen shifted points) by
  // Gauss-Jordan; column j of the inverse solves B mu = e_j.
  std::vector<RatVector> work(d), inv(d);
  for (int r = 0; r < d; ++r) {
    work[r] = RatVector(d);
    for (int col = 0; col < d; ++col) work[r](col) = shifted[basis[col]](r);
    inv[r] = RatVector::Zero(d);
    inv[r](r) = 1;
  }
  for (int col = 0; col < d; ++col) {
    int sel = col;
    while (work[sel](col) == 0) ++sel;  // nonsingular by construction
    std::swap(work[sel], work[col]);
    std::swap(inv[sel], inv[col]);
    const Rat piv = work[col](col);
    if (piv != 1) {
      work[col] /= piv;
      inv[col] /= piv;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const Rat f = work[r](col);
      if (f != 0) {
        work[r] -= f * work[col];
        inv[r] -= f * inv[col];
      }
    }
  }
  // Simplex vertices: v0 has every basis row tight (B^T v0 = ones); vj
  // swaps basis row j for the implied row, which solves to
  // vj = v0 - m * (row j of the inverse, transposed into a point).
  RatVector v0 = RatVector::Zero(d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) v0(i) += inv[k](i);
  }
  std::vector<RatVector> seed_gens;
  seed_gens.push_back(v0);
  const Rat count(static_cast<long>(m));
  for (int j = 0; j < d; ++j) {
    RatVector vj(d);
    for (int i = 0; i < d; ++i) vj(i) = v0(i) - count * inv[j](i);
    seed_gens.push_back(std::move(vj));
  }
  std::vector<Halfspace> seed_rows;
  RatVector abar = RatVector::Zero(d);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    seed_rows.push_back({shifted[basis[k]], Rat(1)});
    abar -= shifted[basis[k]];
  }
  seed_rows.push_back({std::move(abar), Rat(static_cast<long>(m - basis.size()))});

  HPolytope rest;
  rest.dim = d;
  std::vector<bool> in_basis(m, false);
  for (const std::size_t b : basis) in_basis[b] = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (!in_basis[i]) rest.rows.push_back(polar.rows[i]);
  }
  canonicalize_rows(&rest);
  std::vector<Halfspace> pending;
  for (const LinearRow& row : rest.rows) append_halfspaces(row, &pending);

  std::vector<RatVector> polar_vertices =
      dd_insert(std::move(seed_rows), std::move(seed_gens), pending);
  if (polar_vertices.empty()) {
    throw Error("dd_convert_v_to_h: internal: polar body has no vertices");
  }

  for (const RatVector& w : polar_vertices) {
    // Facet w.(y - centroid) <= 1 lifted back to ambient coordinates.
    LinearRow row;
    row.coeffs = RatVector::Zero(n);
    Rat rhs = 1 + w.dot(centroid);
    for (int r = 0; r < d; ++r) {
      row.coeffs(pivots[r]) = w(r);
      rhs += w(r) * base(pivots[r]);
    }
    row.rel = Rel::Le;
    row.rhs = rhs;
    out.rows.push_back(std::move(row));
  }
  canonicalize_rows(&out);
  return out;
}

ConvCertificate conv_membership(const RatVector& x, const VPolytope& Q) {
  validate(Q);
  if (x.size() != Q.dim) {
    throw ContractError("conv_membership: point dimension != hull dimension");
  }
  ConvCertificate cert;
  if (Q.vertices.empty()) return cert;

  // Feasibility in multiplier space: V lambda = x, sum lambda = 1,
  // lambda >= 0 (native nonnegative variables).
  const int k = static_cast<int>(Q.vertices.size());
  detail::StdLp lp;
  lp.nvars = k;
  for (int i = 0; i < Q.dim; ++i) {
    LinearRow row;
    row.coeffs = RatVector(k);
    for (int j = 0; j < k; ++j) row.coeffs(j) = Q.vertices[j](i);
    row.rel = Rel::Eq;
    row.rhs = x(i);
    lp.rows.push_back(std::move(row));
  }
  LinearRow sum;
  sum.coeffs = RatVector::Constant(k, 1);
  sum.rel = Rel::Eq;
  sum.rhs = 1;
  lp.rows.push_back(std::move(sum));

  const detail::StdResult res =
      detail::solve_standard(lp, RatVector::Zero(k), true);
  if (!res.feasible) return cert;
  cert.member = true;
  cert.multipliers.reserve(k);
  for (int j = 0; j < k; ++j) cert.multipliers.push_back(res.point(j));
  return cert;
}

std::vector<RatVector> extreme_points(std::vector<RatVector> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end(),
                           [](const RatVector& a, const RatVector& b) {
                             return lex_compare(a, b) == 0;
                           }),
               points.end());
  if (points.size() <= 1) return points;
  const int dim = static_cast<int>(points.front().size());

  std::vector<RatVector> keep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    VPolytope others;
    others.dim = dim;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.vertices.push_back(points[j]);
    }
    if (!conv_membership(points[i], others).member) {
      keep.push_back(points[i]);
    }
  }
  return keep;
}

VPolytope hull_of_union(const std::vector<VPolytope>& parts) {
  if (parts.empty()) {
    throw ContractError("hull_of_union: empty part sequence");
  }
  const int dim = parts.front().dim;
  std::vector<RatVector> pool;
  for (const VPolytope& part : parts) {
    if (part.dim != dim) {
      throw ContractError("hull_of_union: mixed dimensions");
    }
    validate(part);
    pool.insert(pool.end(), part.vertices.begin(), part.vertices.end());
  }
  VPolytope out;
  out.dim = dim;
  out.vertices = extreme_points(std::move(pool));
  canonicalize_vertices(&out);
  return out;
}

HPolytope intersect(const std::vector<HPolytope>& parts) {
  if (parts.empty()) {
    throw ContractError("intersect: empty polytope sequence");
  }
  const int dim = parts.front().dim;
  std::vector<LinearRow> rows;
  for (const HPolytope& part : parts) {
    if (part.dim != dim) throw ContractError("intersect: mixed dimensions");
    validate(part);
    for (const LinearRow& row : part.rows) {
      rows.push_back(normalize_row(row));
    }
  }
  // Exact duplicate rows collapse; first occurrence survives.
  std::vector<LinearRow> unique_rows;
  for (const LinearRow& row : rows) {
    bool seen = false;
    for (const LinearRow& kept : unique_rows) {
      if (row_equal(row, kept)) {
        seen = true;
        break;
      }
    }
    if (!seen) unique_rows.push_back(row);
  }

  HPolytope all;
  all.dim = dim;
  all.rows = unique_rows;
  if (!lp_feasible(all)) return make_empty_hpolytope(dim);

  // Sequential redundancy elimination in input order.
  std::vector<LinearRow> kept = unique_rows;
  std::size_t i = 0;
  while (i < kept.size()) {
    HPolytope rest;
    rest.dim = dim;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) rest.rows.push_back(kept[j]);
    }
    const LinearRow& row = kept[i];
    bool redundant = false;
    try {
      switch (row.rel) {
        case Rel::Le: {
          const LpSolution s = lp_optimize(rest, row.coeffs, LpSense::Max);
          redundant = s.feasible && s.value <= row.rhs;
          break;
        }
        case Rel::Ge: {
          const LpSolution s = lp_optimize(rest, row.coeffs, LpSense::Min);
          redundant = s.feasible && s.value >= row.rhs;
          break;
        }
        case Rel::Eq: {
          const LpSolution up = lp_optimize(rest, row.coeffs, LpSense::Max);
          if (up.feasible && up.value <= row.rhs) {
            const LpSolution down = lp_optimize(rest, row.coeffs, LpSense::Min);
            redundant = down.feasible && down.value >= row.rhs;
          }
          break;
        }
      }
    } catch (const UnboundedError&) {
      redundant = false;  // the row is what keeps the set bounded
    }
    if (redundant) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  HPolytope out;
  out.dim = dim;
  out.rows = std::move(kept);
  return out;
}

}  // namespace cutrank
