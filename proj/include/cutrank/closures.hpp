// Closure rounds over finite disjunction families, rank brackets, the
// 0-1 integer hull, the unit-direction fixing sequence, and constructive
// t-rounding witnesses. Everything is exact; upper bounds come from
// iterated closures, and family restriction only ever weakens them, so a
// reported round count is always a valid upper bound on the true rank.
#ifndef CUTRANK_CLOSURES_HPP
#define CUTRANK_CLOSURES_HPP

#include <cstddef>
#include <vector>

#include "cutrank/disjunctions.hpp"
#include "cutrank/guards.hpp"
#include "cutrank/half_point.hpp"
#include "cutrank/polytope.hpp"
#include "cutrank/rational.hpp"

namespace cutrank {

struct ClosureOptions {
  // Testing knob: evaluate the family in reversed enumeration order. The
  // output must be identical either way (the final intersection is built
  // from the full, canonically sorted row set).
  bool reverse_family = false;
};

// One application of the closure operator restricted to the finite family
// F: the intersection over every disjunction in F of its exact hull,
// intersected with P itself. Split thresholds are instantiated per
// direction from the LP range of the direction over P. Deterministic and
// independent of evaluation order; an empty hull short-circuits to the
// canonical empty polytope. Throws GuardError with the offending count
// when the family exceeds guards.max_family.
HPolytope closure_round(const HPolytope& P, const FamilySpec& F,
                        const Guards& guards = default_guards(),
                        const ClosureOptions& options = {});

// Result of iterating closure_round until the integer hull is reached.
struct RankBracket {
  // True when some round's result equals integer_hull(P) exactly; the
  // true rank is then at most `rounds`.
  bool reached = false;
  // Rounds used when reached; equals max_rounds otherwise.
  int rounds = 0;
  // Vertex count of the iterate after each completed round.
  std::vector<std::size_t> vertex_counts;
};

// Iterates closure_round from P, comparing each iterate with the 0-1 hull
// by canonical vertex sets. Requires P inside the unit box.
RankBracket rank_upper_bound(const HPolytope& P, const FamilySpec& F,
                             int max_rounds,
                             const Guards& guards = default_guards());

// Convex hull of the 0-1 points of P, by exhaustive enumeration (every 0-1
// point inside P is a vertex of the hull). Guard: dim <= 20.
VPolytope integer_hull(const HPolytope& P);

// Fixes the listed coordinates to the given 0-1 values by substitution and
// returns the polytope over the remaining coordinates (original order
// preserved). Constant rows are checked on the spot; a violated one yields
// the canonical empty polytope in the reduced dimension.
HPolytope fix_coordinates(const HPolytope& P, const std::vector<int>& coords,
                          const std::vector<int>& values);

// Rounds of the unit-direction fixing sequence needed to reach the integer
// hull: round k applies the t-branch disjunction on unit directions
// kt+1..(k+1)t, which amounts to taking the hull over all 0-1 fixings of
// the first kt coordinates. Returns the first k at which equality with the
// hull is verified; at k = ceil(n/t) the cells are exactly the 0-1 points,
// so the bound ceil(n/t) always holds without further checking.
int balas_sequence(const HPolytope& P, int t,
                   const Guards& guards = default_guards());

// Constructive t-rounding data for a half-integral point: an index set J
// inside the fractional support with |J| <= t such that rounding J both
// ways keeps every pi-product integral. The two roundings straddle x as
// exact midpoint.
struct RoundingWitness {
  std::vector<int> J;       // coordinate indices, sorted ascending
  HalfIntegralPoint down;   // J set to 0
  HalfIntegralPoint up;     // J set to 1
};

// Requires |E(x)| >= t (with t = pis.size()) and integral directions.
RoundingWitness rounding_witness(const HalfIntegralPoint& x,
                                 const std::vector<RatVector>& pis);

}  // namespace cutrank

#endif  // CUTRANK_CLOSURES_HPP
