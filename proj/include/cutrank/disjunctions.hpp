// Disjunctions over integer directions and their exact hulls: two-sided
// splits, simultaneous t-branch splits, and integer-level lattice slices.
// Every hull is computed cell by cell in exact rational arithmetic and
// returned as a canonical vertex description.
#ifndef CUTRANK_DISJUNCTIONS_HPP
#define CUTRANK_DISJUNCTIONS_HPP

#include <cstdint>
#include <vector>

#include "cutrank/guards.hpp"
#include "cutrank/polytope.hpp"
#include "cutrank/rational.hpp"

namespace cutrank {

// Which finite disjunction family a closure round draws from.
enum class FamilyMode { Split, TBranch, Lattice };

// One two-sided split pi.x <= delta  OR  pi.x >= delta + 1.
// Canonical form: pi integral, not all zero, gcd 1, first nonzero entry
// positive; delta integral.
struct SplitDisjunction {
  RatVector pi;
  Rat delta = 0;
};

void validate(const SplitDisjunction& d);

// Canonical ordering: lexicographic on pi, then delta.
bool split_less(const SplitDisjunction& a, const SplitDisjunction& b);
bool split_equal(const SplitDisjunction& a, const SplitDisjunction& b);

// Simultaneous application of t splits: the intersection over terms of the
// two cells, hulled per sign pattern. Terms are kept sorted by split_less.
struct TBranchDisjunction {
  std::vector<SplitDisjunction> terms;

  int t() const { return static_cast<int>(terms.size()); }
};

void validate(const TBranchDisjunction& d);

// Integer-level slices: points of P where every pi.x is an integer. The
// directions are canonical (as above), lexicographically sorted, and never
// zero.
struct LatticeDisjunction {
  std::vector<RatVector> pis;

  int t() const { return static_cast<int>(pis.size()); }
};

void validate(const LatticeDisjunction& d);

// Finite restriction of a closure family: all canonical integer directions
// with max-norm at most coeff_bound, combined t at a time (tbranch/lattice)
// or with every useful integer threshold (split, t = 1).
struct FamilySpec {
  FamilyMode mode = FamilyMode::Split;
  int t = 1;
  int coeff_bound = 1;
  int dimension = 0;
};

void validate(const FamilySpec& f);

// All canonical directions with max-norm <= coeff_bound, lexicographically
// ascending: integral, gcd 1, first nonzero entry positive.
std::vector<RatVector> enumerate_directions(int dimension, int coeff_bound);

// Upper bound on the direction count before enumerating: half the nonzero
// points of the (2B+1)^n grid, saturating at int64 max. Exact for B = 1,
// where every nonzero sign vector already has gcd 1.
std::int64_t direction_count_estimate(int dimension, int coeff_bound);

// Exact hull of the union of the 2^t sign-pattern cells of P under the
// t-branch disjunction. Empty cells are skipped; all-empty yields the
// empty polytope. Guard: t <= 20.
VPolytope apply_tbranch(const HPolytope& P, const TBranchDisjunction& D,
                        const Guards& guards = default_guards());

// Exact hull of {x in P : pi.x integral for every direction}, sliced per
// combination of integer levels within each direction's LP range. The
// level-combination count is capped by guards.max_level_combos.
VPolytope apply_lattice(const HPolytope& P, const LatticeDisjunction& D,
                        const Guards& guards = default_guards());

}  // namespace cutrank

#endif  // CUTRANK_DISJUNCTIONS_HPP
