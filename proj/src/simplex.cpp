#include "cutrank/simplex.hpp"

#include <vector>

#include "cutrank/errors.hpp"

namespace cutrank {
namespace detail {

namespace {

// Dense tableau with basis bookkeeping. Column layout:
//   [0, nvars)                 decision variables (all >= 0)
//   [nvars, nvars + nslack)    slack variables
//   [art_begin, ncols)         artificial variables (phase 1 only)
// Rows are kept with nonnegative right-hand sides throughout. The objective
// row `obj` follows the z-row convention: it starts as [-c | 0] and basic
// columns are eliminated from it, so its rhs entry always equals the current
// objective value and a column may improve the objective iff its entry is
// negative.
struct Tableau {
  int ncols = 0;
  int art_begin = 0;  // first artificial column; == ncols when none
  std::vector<std::vector<Rat>> rows;  // each of length ncols + 1 (rhs last)
  std::vector<int> basis;              // basis[i] = basic column of row i
  std::vector<Rat> obj;                // length ncols + 1

  void pivot(int prow, int pcol) {
    std::vector<Rat>& pr = rows[prow];
    const Rat inv = 1 / pr[pcol];
    if (inv != 1) {
      for (Rat& v : pr) {
        if (v != 0) v *= inv;
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == prow) continue;
      eliminate(rows[r], pr, pcol);
    }
    eliminate(obj, pr, pcol);
    basis[prow] = pcol;
  }

  static void eliminate(std::vector<Rat>& target, const std::vector<Rat>& pr,
                        int pcol) {
    const Rat factor = target[pcol];
    if (factor == 0) return;
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (pr[j] != 0) target[j] -= factor * pr[j];
    }
  }

  // Runs Bland's rule to optimality (maximization). Columns at or past
  // col_limit never enter. Returns false iff an improving column was
  // unbounded.
  bool run(int col_limit) {
    const int rhs = ncols;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < col_limit; ++j) {
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;  // optimal

      int leave = -1;
      Rat best_ratio = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rat& a = rows[i][enter];
        if (a <= 0) continue;
        const Rat ratio = rows[i][rhs] / a;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace

StdResult solve_standard(const StdLp& lp, const RatVector& objective,
                         bool maximize) {
  if (objective.size() != lp.nvars) {
    throw ContractError("solve_standard: objective dimension mismatch");
  }
  const int n = lp.nvars;
  const int m = static_cast<int>(lp.rows.size());

  // Count slacks (one per inequality row).
  int nslack = 0;
  for (const LinearRow& row : lp.rows) {
    if (row.rel != Rel::Eq) ++nslack;
  }

  // First pass: build rows with slacks, flip signs to make rhs >= 0, and
  // decide which rows need an artificial (those whose slack coefficient is
  // not +1 after the sign flip, and all equality rows).
  std::vector<std::vector<Rat>> body(m);
  std::vector<int> slack_col(m, -1);
  std::vector<bool> needs_art(m, false);
  const int slack_begin = n;
  int next_slack = slack_begin;
  for (int i = 0; i < m; ++i) {
    const LinearRow& row = lp.rows[i];
    if (row.coeffs.size() != n) {
      throw ContractError("solve_standard: row dimension mismatch");
    }
    // Express as <= then attach the slack: a x + s = b.
    Rat sign = (row.rel == Rel::Ge) ? -1 : 1;
    Rat slack_coeff = (row.rel == Rel::Eq) ? 0 : 1;
    Rat b = sign * row.rhs;
    if (b < 0) {
      sign = -sign;
      slack_coeff = -slack_coeff;
      b = -b;
    }
    body[i].assign(n, Rat(0));
    for (int j = 0; j < n; ++j) {
      if (row.coeffs(j) != 0) body[i][j] = sign * row.coeffs(j);
    }
    if (row.rel != Rel::Eq) slack_col[i] = next_slack++;
    needs_art[i] = (row.rel == Rel::Eq) || slack_coeff != 1;
    body[i].push_back(b);          // temporarily store rhs; expanded below
    body[i].push_back(slack_coeff);
  }

  int nart = 0;
  for (int i = 0; i < m; ++i) {
    if (needs_art[i]) ++nart;
  }
  const int art_begin = n + nslack;
  const int ncols = art_begin + nart;

  Tableau t;
  t.ncols = ncols;
  t.art_begin = art_begin;
  t.rows.assign(m, {});
  t.basis.assign(m, -1);
  int next_art = art_begin;
  for (int i = 0; i < m; ++i) {
    const Rat b = body[i][n];
    const Rat slack_coeff = body[i][n + 1];
    std::vector<Rat>& r = t.rows[i];
    r.assign(ncols + 1, Rat(0));
    for (int j = 0; j < n; ++j) r[j] = body[i][j];
    if (slack_col[i] >= 0) r[slack_col[i]] = slack_coeff;
    if (needs_art[i]) {
      r[next_art] = 1;
      t.basis[i] = next_art++;
    } else {
      t.basis[i] = slack_col[i];
    }
    r[ncols] = b;
  }

  // Phase 1: maximize -(sum of artificials); feasible iff optimum is 0.
  if (nart > 0) {
    t.obj.assign(ncols + 1, Rat(0));
    for (int j = art_begin; j < ncols; ++j) t.obj[j] = 1;
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] >= art_begin) {
        Tableau::eliminate(t.obj, t.rows[i], t.basis[i]);
      }
    }
    t.run(art_begin);  // artificials never re-enter; cannot be unbounded
    if (t.obj[ncols] != 0) {
      StdResult res;
      res.feasible = false;
      return res;
    }
    // Pivot leftover artificials out of the basis where possible; rows that
    // cannot pivot are redundant and stay inert (every non-artificial
    // coefficient is zero).
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < art_begin) continue;
      for (int j = 0; j < art_begin; ++j) {
        if (t.rows[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2 objective (internally always maximization).
  t.obj.assign(ncols + 1, Rat(0));
  for (int j = 0; j < n; ++j) {
    t.obj[j] = maximize ? -objective(j) : objective(j);
  }
  for (int i = 0; i < m; ++i) {
    if (t.obj[t.basis[i]] != 0) {
      Tableau::eliminate(t.obj, t.rows[i], t.basis[i]);
    }
  }
  StdResult res;
  res.feasible = true;
  if (!t.run(art_begin)) {
    res.unbounded = true;
    return res;
  }

  res.point = RatVector::Zero(n);
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n) res.point(t.basis[i]) = t.rows[i][ncols];
  }
  res.value = maximize ? t.obj[ncols] : -t.obj[ncols];
  return res;
}

}  // namespace detail

namespace {

// True iff row pins variable j to be >= some nonnegative value on its own
// (single nonzero coefficient). Such rows let us treat x_j as a standard
// nonnegative variable directly instead of splitting it.
int nonneg_witness(const LinearRow& row) {
  int idx = -1;
  for (Eigen::Index j = 0; j < row.coeffs.size(); ++j) {
    if (row.coeffs(j) == 0) continue;
    if (idx >= 0) return -1;
    idx = static_cast<int>(j);
  }
  if (idx < 0) return -1;
  const Rat& a = row.coeffs(idx);
  const bool lower_bound =
      (row.rel == Rel::Ge && a > 0 && row.rhs >= 0) ||
      (row.rel == Rel::Le && a < 0 && row.rhs <= 0) ||
      (row.rel == Rel::Eq && ((a > 0 && row.rhs >= 0) || (a < 0 && row.rhs <= 0)));
  return lower_bound ? idx : -1;
}

}  // namespace

LpSolution lp_optimize(const HPolytope& P, const RatVector& objective,
                       LpSense sense) {
  validate(P);
  if (objective.size() != P.dim) {
    throw ContractError("lp_optimize: objective dimension != polytope dim");
  }
  const int n = P.dim;

  // Fast path: when every variable carries an explicit nonnegativity row
  // (true for every polytope this artifact constructs, all of which embed
  // 0 <= x <= 1), solve directly over nonnegative variables. Redundant
  // "x_j >= 0" rows are dropped; everything else is kept verbatim.
  std::vector<bool> has_lower(n, false);
  for (const LinearRow& row : P.rows) {
    const int j = nonneg_witness(row);
    if (j >= 0) has_lower[j] = true;
  }
  bool all_nonneg = true;
  for (int j = 0; j < n; ++j) {
    all_nonneg = all_nonneg && has_lower[j];
  }

  detail::StdLp lp;
  RatVector std_obj;
  if (all_nonneg) {
    lp.nvars = n;
    for (const LinearRow& row : P.rows) {
      const int j = nonneg_witness(row);
      const bool drop = j >= 0 && row.rel != Rel::Eq && row.rhs == 0;
      if (!drop) lp.rows.push_back(row);
    }
    std_obj = objective;
  } else {
    // General case: x = p - q with p, q >= 0.
    lp.nvars = 2 * n;
    for (const LinearRow& row : P.rows) {
      LinearRow wide;
      wide.coeffs = RatVector::Zero(2 * n);
      for (int j = 0; j < n; ++j) {
        wide.coeffs(j) = row.coeffs(j);
        wide.coeffs(n + j) = -row.coeffs(j);
      }
      wide.rel = row.rel;
      wide.rhs = row.rhs;
      lp.rows.push_back(std::move(wide));
    }
    std_obj = RatVector::Zero(2 * n);
    for (int j = 0; j < n; ++j) {
      std_obj(j) = objective(j);
      std_obj(n + j) = -objective(j);
    }
  }

  const detail::StdResult raw =
      detail::solve_standard(lp, std_obj, sense == LpSense::Max);
  LpSolution out;
  if (!raw.feasible) return out;
  if (raw.unbounded) {
    throw UnboundedError("lp_optimize: objective unbounded over polyhedron");
  }
  out.feasible = true;
  out.value = raw.value;
  out.point = RatVector::Zero(n);
  for (int j = 0; j < n; ++j) {
    out.point(j) = all_nonneg ? raw.point(j) : raw.point(j) - raw.point(n + j);
  }
  // Exactness self-check: the reported optimum is attained by the point.
  Rat attained = 0;
  for (int j = 0; j < n; ++j) {
    if (objective(j) != 0) attained += objective(j) * out.point(j);
  }
  if (attained != out.value) {
    throw Error("lp_optimize: internal exactness check failed");
  }
  return out;
}

bool lp_feasible(const HPolytope& P) {
  validate(P);
  return lp_optimize(P, RatVector::Zero(P.dim), LpSense::Max).feasible;
}

}  // namespace cutrank
