// cutrank: exact cutting-plane rank laboratory.
//
// Exact rational linear programming. A dense two-phase primal simplex with
// Bland's rule (anti-cycling, guaranteed termination) over mpq_class —
// no floating point, no tolerances. Infeasibility is a result value;
// an unbounded optimization direction throws UnboundedError.

#pragma once

#include "cutrank/polytope.hpp"

namespace cutrank {

enum class LpSense { Max, Min };

struct LpSolution {
  bool feasible = false;
  Rat value = 0;       // meaningful only when feasible
  RatVector point;     // attains value exactly; empty when infeasible
};

// Exact optimum of objective over P (variables unrestricted in sign; any
// bounds must appear as rows). Throws UnboundedError when the objective is
// unbounded over a nonempty P, ContractError on dimension mismatch.
LpSolution lp_optimize(const HPolytope& P, const RatVector& objective,
                       LpSense sense);

// Feasibility only (phase 1); cheaper than optimizing a dummy objective.
bool lp_feasible(const HPolytope& P);

namespace detail {

// Standard-form core: all variables constrained >= 0, rows as given.
// Returned point has lp.nvars entries. unbounded implies feasible.
struct StdLp {
  int nvars = 0;
  std::vector<LinearRow> rows;
};

struct StdResult {
  bool feasible = false;
  bool unbounded = false;
  Rat value = 0;
  RatVector point;
};

StdResult solve_standard(const StdLp& lp, const RatVector& objective,
                         bool maximize);

}  // namespace detail

}  // namespace cutrank
