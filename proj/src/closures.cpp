#include "cutrank/closures.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "cutrank/bitset.hpp"
#include "cutrank/errors.hpp"
#include "cutrank/geometry.hpp"
#include "cutrank/parity.hpp"
#include "cutrank/simplex.hpp"

namespace cutrank {

namespace {

// C(n, k) saturating just above cap; partial products in this order stay
// integral, so the division is exact at every step.
std::uint64_t binom_saturating(std::uint64_t n, std::uint64_t k,
                               std::uint64_t cap) {
  if (k > n) k = n;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / factor) return cap + 1;
    r = r * factor / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

// All k-element index combinations of {0, .., n-1} in lexicographic order.
template <typename Emit>
void for_each_combination(std::size_t n, std::size_t k, Emit emit) {
  if (k == 0 || k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    emit(idx);
    // Advance: find the rightmost index that can still move right.
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

// Every split disjunction with a useful threshold for this polytope:
// delta from ceil(lp-min) - 1 through floor(lp-max) per direction. P must
// be nonempty. The running count is capped by guards.max_family.
std::vector<SplitDisjunction> split_pool(const HPolytope& P,
                                         const std::vector<RatVector>& dirs,
                                         const Guards& guards) {
  std::vector<SplitDisjunction> pool;
  for (const RatVector& pi : dirs) {
    const LpSolution lo = lp_optimize(P, pi, LpSense::Min);
    const LpSolution hi = lp_optimize(P, pi, LpSense::Max);
    if (!lo.feasible || !hi.feasible) {
      throw Error("split_pool: LP infeasible on a nonempty polytope");
    }
    const long first = ceil_long(lo.value) - 1;
    const long last = floor_long(hi.value);
    for (long delta = first; delta <= last; ++delta) {
      pool.push_back(SplitDisjunction{pi, Rat(delta)});
      if (pool.size() > guards.max_family) {
        throw GuardError("closure_round: family size exceeds cap " +
                         std::to_string(guards.max_family) +
                         " (at least " + std::to_string(pool.size()) +
                         " split disjunctions)");
      }
    }
  }
  return pool;
}

// On canonicalized rows (normalized, sorted, deduplicated), keeps only the
// binding one of each run of parallel inequalities: the least right-hand
// side of a <= run, the greatest of a >= run. Equality rows are kept as
// they are. Purely a redundancy filter; the feasible set is unchanged.
void drop_dominated_parallel_rows(HPolytope* P) {
  std::vector<LinearRow> kept;
  std::size_t i = 0;
  const std::vector<LinearRow>& rows = P->rows;
  while (i < rows.size()) {
    std::size_t j = i + 1;
    while (j < rows.size() && rows[j].rel == rows[i].rel &&
           lex_compare(rows[j].coeffs, rows[i].coeffs) == 0) {
      ++j;
    }
    switch (rows[i].rel) {
      case Rel::Le: kept.push_back(rows[i]); break;      // ascending rhs
      case Rel::Ge: kept.push_back(rows[j - 1]); break;  // greatest rhs
      case Rel::Eq:
        for (std::size_t k = i; k < j; ++k) kept.push_back(rows[k]);
        break;
    }
    i = j;
  }
  P->rows = std::move(kept);
}

// Split-mode closure round by lazy hull refinement. P's vertex set and
// edge list are computed once; each split's disjunctive hull is spanned by
// the vertices surviving on either side plus the edge crossings at the two
// split planes, so no per-cell conversions are needed. A split pays for a
// facet enumeration only when some vertex of the current outer
// approximation lies strictly inside its band and outside its hull;
// scanning in a fixed canonical order until no split cuts anything makes
// the result independent of family order and equal to the intersection of
// every split hull.
HPolytope split_round(const HPolytope& P, const std::vector<RatVector>& dirs,
                      const Guards& guards) {
  const int n = P.dim;
  const VPolytope VP = dd_convert_h_to_v(P);
  const std::vector<RatVector>& V = VP.vertices;
  if (V.empty()) return make_empty_hpolytope(n);
  const std::size_t nv = V.size();

  // Vertex adjacency from tight-row incidence: u,w span an edge iff no
  // third vertex is tight on every row tight at both of them.
  std::vector<Bitset> tight(nv, Bitset(P.rows.size()));
  for (std::size_t g = 0; g < nv; ++g) {
    for (std::size_t r = 0; r < P.rows.size(); ++r) {
      if (eval_row(P.rows[r], V[g]) == P.rows[r].rhs) tight[g].set(r);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t w = u + 1; w < nv; ++w) {
      const Bitset common = Bitset::intersection(tight[u], tight[w]);
      bool adjacent = true;
      for (std::size_t g = 0; g < nv && adjacent; ++g) {
        if (g == u || g == w) continue;
        if (common.is_subset_of(tight[g])) adjacent = false;
      }
      if (adjacent) edges.emplace_back(u, w);
    }
  }

  // Split pool from exact vertex ranges; a bounded polytope attains its
  // LP optima at vertices, so the thresholds match the LP-derived pool.
  struct PoolEntry {
    std::size_t dir;
    long delta;
  };
  std::vector<PoolEntry> pool;
  std::vector<std::vector<Rat>> dir_vals(dirs.size());
  for (std::size_t di = 0; di < dirs.size(); ++di) {
    std::vector<Rat>& vals = dir_vals[di];
    vals.reserve(nv);
    for (const RatVector& v : V) vals.push_back(dirs[di].dot(v));
    Rat lo = vals.front(), hi = vals.front();
    for (const Rat& t : vals) {
      if (t < lo) lo = t;
      if (t > hi) hi = t;
    }
    for (long delta = ceil_long(lo) - 1; delta <= floor_long(hi); ++delta) {
      pool.push_back(PoolEntry{di, delta});
      if (pool.size() > guards.max_family) {
        throw GuardError("closure_round: family size exceeds cap " +
                         std::to_string(guards.max_family) +
                         " (at least " + std::to_string(pool.size()) +
                         " split disjunctions)");
      }
    }
  }

  // Spanning point set of a split's hull, built on first demand. Crossing
  // points at a plane exist only when an edge straddles it, so an empty
  // cell contributes nothing automatically.
  std::vector<VPolytope> hull_pts(pool.size());
  std::vector<char> hull_ready(pool.size(), 0);
  auto hull_points = [&](std::size_t s) -> const VPolytope& {
    if (!hull_ready[s]) {
      const std::vector<Rat>& vals = dir_vals[pool[s].dir];
      const Rat dlo(pool[s].delta), dhi(pool[s].delta + 1);
      VPolytope& H = hull_pts[s];
      H.dim = n;
      for (std::size_t g = 0; g < nv; ++g) {
        if (vals[g] <= dlo || vals[g] >= dhi) H.vertices.push_back(V[g]);
      }
      for (const Rat& level : {dlo, dhi}) {
        for (const auto& [u, w] : edges) {
          const Rat& a = vals[u];
          const Rat& b = vals[w];
          if ((a < level && level < b) || (b < level && level < a)) {
            const Rat theta = (level - a) / (b - a);
            RatVector x(n);
            for (int i = 0; i < n; ++i) {
              x(i) = V[u](i) + theta * (V[w](i) - V[u](i));
            }
            H.vertices.push_back(std::move(x));
          }
        }
      }
      hull_ready[s] = 1;
    }
    return hull_pts[s];
  };

  // Refinement passes: C accumulates the facet rows of every hull that
  // cuts a current vertex; its vertex set is refreshed once per pass. The
  // refreshes reuse P's exact bounding box (valid for every refinement).
  RatVector box_lo = V.front(), box_hi = V.front();
  for (const RatVector& v : V) {
    for (int i = 0; i < n; ++i) {
      if (v(i) < box_lo(i)) box_lo(i) = v(i);
      if (v(i) > box_hi(i)) box_hi(i) = v(i);
    }
  }
  HPolytope C = P;
  std::vector<RatVector> VC = V;
  std::vector<char> applied(pool.size(), 0);
  std::vector<std::vector<Rat>> cur_vals(dirs.size());
  std::vector<std::uint64_t> cur_gen(dirs.size(), 0);
  std::uint64_t gen = 1;
  auto current_vals = [&](std::size_t di) -> const std::vector<Rat>& {
    if (cur_gen[di] != gen) {
      cur_vals[di].clear();
      for (const RatVector& v : VC) cur_vals[di].push_back(dirs[di].dot(v));
      cur_gen[di] = gen;
    }
    return cur_vals[di];
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < pool.size(); ++s) {
      if (applied[s]) continue;
      const Rat dlo(pool[s].delta), dhi(pool[s].delta + 1);
      const std::vector<Rat>& vals = current_vals(pool[s].dir);
      bool cut = false;
      for (std::size_t i = 0; i < VC.size() && !cut; ++i) {
        if (vals[i] <= dlo || vals[i] >= dhi) continue;  // inside a cell
        const VPolytope& H = hull_points(s);
        if (H.vertices.empty()) return make_empty_hpolytope(n);
        if (!conv_membership(VC[i], H).member) cut = true;
      }
      if (!cut) continue;
      const HPolytope h = dd_convert_v_to_h(hull_points(s));
      C.rows.insert(C.rows.end(), h.rows.begin(), h.rows.end());
      applied[s] = 1;
      changed = true;
    }
    if (changed) {
      canonicalize_rows(&C);
      drop_dominated_parallel_rows(&C);
      const VPolytope refreshed = dd_convert_h_to_v_within(C, box_lo, box_hi);
      VC = refreshed.vertices;
      if (VC.empty()) return make_empty_hpolytope(n);
      ++gen;
    }
  }
  // The terminal vertex set determines the closure; its facet description
  // is both irredundant and canonical.
  VPolytope closure;
  closure.dim = n;
  closure.vertices = VC;
  return dd_convert_v_to_h(closure);
}

}  // namespace

HPolytope closure_round(const HPolytope& P, const FamilySpec& F,
                        const Guards& guards, const ClosureOptions& options) {
  validate(P);
  validate(F);
  if (F.dimension != P.dim) {
    throw ContractError("closure_round: family dimension " +
                        std::to_string(F.dimension) + " != polytope dimension " +
                        std::to_string(P.dim));
  }
  const int n = P.dim;
  if (!lp_feasible(P)) return make_empty_hpolytope(n);

  const std::int64_t estimate = direction_count_estimate(n, F.coeff_bound);
  if (static_cast<std::uint64_t>(estimate) > guards.max_family) {
    throw GuardError("closure_round: direction count " +
                     std::to_string(estimate) + " exceeds family cap " +
                     std::to_string(guards.max_family));
  }
  const std::vector<RatVector> dirs = enumerate_directions(n, F.coeff_bound);

  if (F.mode == FamilyMode::Split) {
    // Family order cannot matter here: the refinement scans a canonical
    // pool ordering regardless of options.reverse_family.
    return split_round(P, dirs, guards);
  }

  std::vector<TBranchDisjunction> branch_family;
  std::vector<LatticeDisjunction> lattice_family;
  if (F.mode == FamilyMode::TBranch) {
    const std::vector<SplitDisjunction> pool = split_pool(P, dirs, guards);
    const std::size_t k =
        std::min<std::size_t>(static_cast<std::size_t>(F.t), pool.size());
    const std::uint64_t combos =
        binom_saturating(pool.size(), k, guards.max_family);
    if (combos > guards.max_family) {
      throw GuardError("closure_round: family size exceeds cap " +
                       std::to_string(guards.max_family) + " (more than " +
                       std::to_string(guards.max_family) +
                       " term combinations)");
    }
    for_each_combination(pool.size(), k, [&](const std::vector<std::size_t>& idx) {
      TBranchDisjunction d;
      for (std::size_t i : idx) d.terms.push_back(pool[i]);
      branch_family.push_back(std::move(d));
    });
  } else {
    const std::size_t k =
        std::min<std::size_t>(static_cast<std::size_t>(F.t), dirs.size());
    const std::uint64_t combos =
        binom_saturating(dirs.size(), k, guards.max_family);
    if (combos > guards.max_family) {
      throw GuardError("closure_round: family size exceeds cap " +
                       std::to_string(guards.max_family) + " (more than " +
                       std::to_string(guards.max_family) +
                       " direction combinations)");
    }
    for_each_combination(dirs.size(), k, [&](const std::vector<std::size_t>& idx) {
      LatticeDisjunction d;
      for (std::size_t i : idx) d.pis.push_back(dirs[i]);
      lattice_family.push_back(std::move(d));
    });
  }

  if (options.reverse_family) {
    std::reverse(branch_family.begin(), branch_family.end());
    std::reverse(lattice_family.begin(), lattice_family.end());
  }

  // Collect every hull's inequality description; any empty hull empties
  // the whole round.
  HPolytope merged;
  merged.dim = n;
  merged.rows = P.rows;
  for (const TBranchDisjunction& d : branch_family) {
    const VPolytope hull = apply_tbranch(P, d, guards);
    if (hull.empty()) return make_empty_hpolytope(n);
    const HPolytope h = dd_convert_v_to_h(hull);
    merged.rows.insert(merged.rows.end(), h.rows.begin(), h.rows.end());
  }
  for (const LatticeDisjunction& d : lattice_family) {
    const VPolytope hull = apply_lattice(P, d, guards);
    if (hull.empty()) return make_empty_hpolytope(n);
    const HPolytope h = dd_convert_v_to_h(hull);
    merged.rows.insert(merged.rows.end(), h.rows.begin(), h.rows.end());
  }
  // Canonical sort of the full row pool makes the result independent of
  // family order; intersect then prunes redundancy deterministically.
  canonicalize_rows(&merged);
  return intersect({merged});
}

VPolytope integer_hull(const HPolytope& P) {
  validate(P);
  if (P.dim > 20) {
    throw GuardError("integer_hull: dimension " + std::to_string(P.dim) +
                     " exceeds the 2^n enumeration guard (20)");
  }
  VPolytope out;
  out.dim = P.dim;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << P.dim); ++mask) {
    RatVector x(P.dim);
    for (int i = 0; i < P.dim; ++i) {
      x(i) = (mask & (std::uint32_t{1} << i)) ? 1 : 0;
    }
    // Every 0-1 point of P is extreme in conv(P's 0-1 points): it is
    // extreme in the unit cube, which contains that hull.
    if (hrep_contains(P, x)) out.vertices.push_back(std::move(x));
  }
  canonicalize_vertices(&out);
  return out;
}

HPolytope fix_coordinates(const HPolytope& P, const std::vector<int>& coords,
                          const std::vector<int>& values) {
  validate(P);
  if (coords.size() != values.size()) {
    throw ContractError("fix_coordinates: coords/values length mismatch");
  }
  if (coords.empty()) return P;
  if (static_cast<int>(coords.size()) >= P.dim) {
    throw ContractError("fix_coordinates: must leave at least one coordinate");
  }
  std::vector<char> fixed(static_cast<std::size_t>(P.dim), 0);
  RatVector fill = RatVector::Zero(P.dim);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const int c = coords[i];
    if (c < 0 || c >= P.dim) {
      throw ContractError("fix_coordinates: coordinate out of range");
    }
    if (fixed[static_cast<std::size_t>(c)]) {
      throw ContractError("fix_coordinates: repeated coordinate");
    }
    if (values[i] != 0 && values[i] != 1) {
      throw ContractError("fix_coordinates: values must be 0 or 1");
    }
    fixed[static_cast<std::size_t>(c)] = 1;
    fill(c) = values[i];
  }
  std::vector<int> keep;
  for (int i = 0; i < P.dim; ++i) {
    if (!fixed[static_cast<std::size_t>(i)]) keep.push_back(i);
  }
  const int reduced_dim = static_cast<int>(keep.size());

  HPolytope out;
  out.dim = reduced_dim;
  for (const LinearRow& row : P.rows) {
    Rat constant = row.rhs;
    RatVector coeffs(reduced_dim);
    bool all_zero = true;
    for (int j = 0; j < reduced_dim; ++j) {
      coeffs(j) = row.coeffs(keep[static_cast<std::size_t>(j)]);
      if (coeffs(j) != 0) all_zero = false;
    }
    for (int i = 0; i < P.dim; ++i) {
      if (fixed[static_cast<std::size_t>(i)] && row.coeffs(i) != 0) {
        constant -= row.coeffs(i) * fill(i);
      }
    }
    if (all_zero) {
      const bool ok = (row.rel == Rel::Le && constant >= 0) ||
                      (row.rel == Rel::Ge && constant <= 0) ||
                      (row.rel == Rel::Eq && constant == 0);
      if (!ok) return make_empty_hpolytope(reduced_dim);
      continue;  // satisfied constant row carries no information
    }
    LinearRow reduced;
    reduced.coeffs = std::move(coeffs);
    reduced.rel = row.rel;
    reduced.rhs = std::move(constant);
    out.rows.push_back(std::move(reduced));
  }
  return out;
}

namespace {

// Does the hull over all 0-1 fixings of the first `fixed` coordinates
// equal the 0-1 hull of P? When the 0-1 hull is empty this is pure cell
// feasibility; otherwise every cell vertex must be a convex combination of
// hull vertices. A dimension guard tripping inside the cell conversion
// counts as "not verified".
bool fixing_round_reaches_hull(const HPolytope& P, const VPolytope& hull,
                               int fixed) {
  std::vector<int> coords(static_cast<std::size_t>(fixed));
  for (int i = 0; i < fixed; ++i) coords[static_cast<std::size_t>(i)] = i;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << fixed); ++mask) {
    std::vector<int> values(static_cast<std::size_t>(fixed));
    for (int i = 0; i < fixed; ++i) {
      values[static_cast<std::size_t>(i)] =
          (mask & (std::uint32_t{1} << i)) ? 1 : 0;
    }
    const HPolytope cell = fix_coordinates(P, coords, values);
    if (hull.empty()) {
      if (lp_feasible(cell)) return false;
      continue;
    }
    VPolytope V;
    try {
      V = dd_convert_h_to_v(cell);
    } catch (const GuardError&) {
      return false;
    }
    for (const RatVector& w : V.vertices) {
      RatVector full(P.dim);
      for (int i = 0; i < fixed; ++i) {
        full(i) = values[static_cast<std::size_t>(i)];
      }
      for (int j = fixed; j < P.dim; ++j) full(j) = w(j - fixed);
      if (!conv_membership(full, hull).member) return false;
    }
  }
  return true;
}

}  // namespace

int balas_sequence(const HPolytope& P, int t, const Guards& guards) {
  validate(P);
  if (t < 1) throw ContractError("balas_sequence: t must be positive");
  (void)guards;
  const int n = P.dim;
  const VPolytope hull = integer_hull(P);

  // Round 0: is P already its own 0-1 hull?
  if (hull.empty()) {
    if (!lp_feasible(P)) return 0;
  } else {
    try {
      const VPolytope V = dd_convert_h_to_v(P);
      bool all_in = true;
      for (const RatVector& v : V.vertices) {
        if (!conv_membership(v, hull).member) {
          all_in = false;
          break;
        }
      }
      if (all_in) return 0;
    } catch (const GuardError&) {
      // Equality not verifiable at this size; the fixing rounds decide.
    }
  }

  const int rounds_max = (n + t - 1) / t;
  for (int k = 1; k < rounds_max; ++k) {
    if (fixing_round_reaches_hull(P, hull, k * t)) return k;
  }
  // With every coordinate fixed the cells are exactly the 0-1 points of P,
  // so round ceil(n/t) is the hull by construction.
  return rounds_max;
}

namespace {

void check_unit_box(const HPolytope& P) {
  for (int i = 0; i < P.dim; ++i) {
    RatVector e = RatVector::Zero(P.dim);
    e(i) = 1;
    const LpSolution lo = lp_optimize(P, e, LpSense::Min);
    if (!lo.feasible) return;  // empty polytope is inside every box
    const LpSolution hi = lp_optimize(P, e, LpSense::Max);
    if (lo.value < 0 || hi.value > 1) {
      throw ContractError(
          "rank_upper_bound: polytope leaves the unit box in coordinate " +
          std::to_string(i));
    }
  }
}

}  // namespace

RankBracket rank_upper_bound(const HPolytope& P, const FamilySpec& F,
                             int max_rounds, const Guards& guards) {
  validate(P);
  validate(F);
  if (F.dimension != P.dim) {
    throw ContractError("rank_upper_bound: family/polytope dimension mismatch");
  }
  if (max_rounds < 0) {
    throw ContractError("rank_upper_bound: negative max_rounds");
  }
  check_unit_box(P);
  const VPolytope hull = integer_hull(P);

  RankBracket out;
  HPolytope Q = P;
  if (same_vertex_set(dd_convert_h_to_v(Q), hull)) {
    out.reached = true;
    out.rounds = 0;
    return out;
  }
  for (int k = 1; k <= max_rounds; ++k) {
    Q = closure_round(Q, F, guards);
    const VPolytope V = dd_convert_h_to_v(Q);
    out.vertex_counts.push_back(V.vertices.size());
    if (same_vertex_set(V, hull)) {
      out.reached = true;
      out.rounds = k;
      return out;
    }
  }
  out.reached = false;
  out.rounds = max_rounds;
  return out;
}

RoundingWitness rounding_witness(const HalfIntegralPoint& x,
                                 const std::vector<RatVector>& pis) {
  const int t = static_cast<int>(pis.size());
  if (t < 1) throw ContractError("rounding_witness: no directions");
  for (const RatVector& pi : pis) {
    if (pi.size() != x.dim()) {
      throw ContractError("rounding_witness: direction dimension mismatch");
    }
    for (Eigen::Index i = 0; i < pi.size(); ++i) {
      if (!is_integer(pi(i))) {
        throw ContractError("rounding_witness: non-integer direction entry " +
                            format_rational(pi(i)));
      }
    }
  }
  const std::vector<int> E = x.fractional_support();
  if (static_cast<int>(E.size()) < t) {
    throw ContractError("rounding_witness: fractional support size " +
                        std::to_string(E.size()) +
                        " is below the direction count " + std::to_string(t));
  }

  // Parity data of the directions on the fractional support: entry parity
  // per column, and the fractionality of pi.x as right-hand side. Row sums
  // match the right-hand sides by construction, which is exactly the
  // hypothesis small_support_subset needs.
  ParitySystem S;
  S.nvars = static_cast<int>(E.size());
  for (int i = 0; i < t; ++i) {
    BitVec row(E.size(), 0);
    int parity = 0;
    for (std::size_t j = 0; j < E.size(); ++j) {
      const Rat& entry = pis[static_cast<std::size_t>(i)](E[j]);
      const bool odd = mpz_odd_p(entry.get_num_mpz_t()) != 0;
      row[j] = odd ? 1 : 0;
      parity ^= odd ? 1 : 0;
    }
    S.rows.push_back(std::move(row));
    S.rhs.push_back(static_cast<std::uint8_t>(parity));
  }

  const std::vector<int> local = small_support_subset(S, t);
  RoundingWitness out;
  for (int j : local) out.J.push_back(E[static_cast<std::size_t>(j)]);
  out.down = round_point(x, out.J, 0);
  out.up = round_point(x, out.J, 1);
  return out;
}

}  // namespace cutrank
