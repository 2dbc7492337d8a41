#include "cutrank/disjunctions.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cutrank/errors.hpp"
#include "cutrank/geometry.hpp"
#include "cutrank/simplex.hpp"

namespace cutrank {

namespace {

// Is pi a canonical direction: integral, not all zero, gcd 1, first
// nonzero entry positive?
void check_canonical_direction(const RatVector& pi, const char* who) {
  if (pi.size() == 0) throw ContractError(std::string(who) + ": empty direction");
  mpz_class gcd = 0;
  int first_nonzero = -1;
  for (Eigen::Index i = 0; i < pi.size(); ++i) {
    if (!is_integer(pi(i))) {
      throw ContractError(std::string(who) + ": non-integer direction entry " +
                          format_rational(pi(i)));
    }
    if (pi(i) != 0 && first_nonzero < 0) first_nonzero = static_cast<int>(i);
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), pi(i).get_num_mpz_t());
  }
  if (first_nonzero < 0) {
    throw ContractError(std::string(who) + ": zero direction");
  }
  if (pi(first_nonzero) < 0) {
    throw ContractError(std::string(who) +
                        ": first nonzero direction entry is negative");
  }
  if (gcd != 1) {
    throw ContractError(std::string(who) + ": direction entries have gcd " +
                        gcd.get_str());
  }
}

LinearRow direction_row(const RatVector& pi, Rel rel, const Rat& rhs) {
  LinearRow row;
  row.coeffs = pi;
  row.rel = rel;
  row.rhs = rhs;
  return row;
}

}  // namespace

void validate(const SplitDisjunction& d) {
  check_canonical_direction(d.pi, "SplitDisjunction");
  if (!is_integer(d.delta)) {
    throw ContractError("SplitDisjunction: non-integer threshold " +
                        format_rational(d.delta));
  }
}

bool split_less(const SplitDisjunction& a, const SplitDisjunction& b) {
  const int c = lex_compare(a.pi, b.pi);
  if (c != 0) return c < 0;
  return a.delta < b.delta;
}

bool split_equal(const SplitDisjunction& a, const SplitDisjunction& b) {
  return lex_compare(a.pi, b.pi) == 0 && a.delta == b.delta;
}

void validate(const TBranchDisjunction& d) {
  if (d.terms.empty()) throw ContractError("TBranchDisjunction: no terms");
  const Eigen::Index dim = d.terms.front().pi.size();
  for (const SplitDisjunction& term : d.terms) {
    validate(term);
    if (term.pi.size() != dim) {
      throw ContractError("TBranchDisjunction: mixed term dimensions");
    }
  }
  for (std::size_t i = 1; i < d.terms.size(); ++i) {
    if (split_less(d.terms[i], d.terms[i - 1])) {
      throw ContractError("TBranchDisjunction: terms not canonically sorted");
    }
  }
}

void validate(const LatticeDisjunction& d) {
  if (d.pis.empty()) throw ContractError("LatticeDisjunction: no directions");
  const Eigen::Index dim = d.pis.front().size();
  for (const RatVector& pi : d.pis) {
    check_canonical_direction(pi, "LatticeDisjunction");
    if (pi.size() != dim) {
      throw ContractError("LatticeDisjunction: mixed direction dimensions");
    }
  }
  for (std::size_t i = 1; i < d.pis.size(); ++i) {
    if (lex_compare(d.pis[i], d.pis[i - 1]) < 0) {
      throw ContractError(
          "LatticeDisjunction: directions not lexicographically sorted");
    }
  }
}

void validate(const FamilySpec& f) {
  if (f.dimension < 1) throw ContractError("FamilySpec: nonpositive dimension");
  if (f.coeff_bound < 1) {
    throw ContractError("FamilySpec: coefficient bound must be positive");
  }
  if (f.t < 1) throw ContractError("FamilySpec: t must be positive");
  if (f.mode == FamilyMode::Split && f.t != 1) {
    throw ContractError("FamilySpec: split mode requires t = 1");
  }
}

std::vector<RatVector> enumerate_directions(int dimension, int coeff_bound) {
  if (dimension < 1) {
    throw ContractError("enumerate_directions: nonpositive dimension");
  }
  if (coeff_bound < 1) {
    throw ContractError("enumerate_directions: nonpositive coefficient bound");
  }
  std::vector<RatVector> out;
  // Odometer over the grid [-B, B]^n in lexicographic order; keep the
  // canonical representatives. Callers guard the grid size beforehand.
  std::vector<long> entry(static_cast<std::size_t>(dimension), -coeff_bound);
  const long B = coeff_bound;
  for (;;) {
    int first_nonzero = -1;
    mpz_class gcd = 0;
    for (int i = 0; i < dimension; ++i) {
      if (entry[i] != 0 && first_nonzero < 0) first_nonzero = i;
      mpz_class e(entry[i]);
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), e.get_mpz_t());
    }
    const bool canonical =
        first_nonzero >= 0 && entry[first_nonzero] > 0 && gcd == 1;
    if (canonical) {
      RatVector pi(dimension);
      for (int i = 0; i < dimension; ++i) pi(i) = Rat(entry[i]);
      out.push_back(std::move(pi));
    }
    // Advance the odometer with the last coordinate fastest, which yields
    // lexicographic order on the emitted vectors.
    int pos = dimension - 1;
    while (pos >= 0 && entry[pos] == B) {
      entry[pos] = -B;
      --pos;
    }
    if (pos < 0) break;
    ++entry[pos];
  }
  return out;
}

std::int64_t direction_count_estimate(int dimension, int coeff_bound) {
  const std::int64_t limit = std::numeric_limits<std::int64_t>::max();
  std::int64_t grid = 1;
  const std::int64_t base = 2 * static_cast<std::int64_t>(coeff_bound) + 1;
  for (int i = 0; i < dimension; ++i) {
    if (grid > limit / base) return limit;
    grid *= base;
  }
  return (grid - 1) / 2;
}

VPolytope apply_tbranch(const HPolytope& P, const TBranchDisjunction& D,
                        const Guards& guards) {
  validate(P);
  validate(D);
  const int t = D.t();
  if (t > 20) {
    throw GuardError("apply_tbranch: " + std::to_string(t) +
                     " terms exceed the 2^t cell guard (20)");
  }
  for (const SplitDisjunction& term : D.terms) {
    if (term.pi.size() != P.dim) {
      throw ContractError("apply_tbranch: dimension mismatch");
    }
  }
  (void)guards;
  std::vector<VPolytope> cells;
  for (std::uint32_t pattern = 0; pattern < (std::uint32_t{1} << t);
       ++pattern) {
    HPolytope cell = P;
    for (int i = 0; i < t; ++i) {
      const SplitDisjunction& term = D.terms[static_cast<std::size_t>(i)];
      if (pattern & (std::uint32_t{1} << i)) {
        cell.rows.push_back(direction_row(term.pi, Rel::Ge, term.delta + 1));
      } else {
        cell.rows.push_back(direction_row(term.pi, Rel::Le, term.delta));
      }
    }
    VPolytope V = dd_convert_h_to_v(cell);
    if (!V.empty()) cells.push_back(std::move(V));
  }
  if (cells.empty()) {
    VPolytope out;
    out.dim = P.dim;
    return out;
  }
  return hull_of_union(cells);
}

VPolytope apply_lattice(const HPolytope& P, const LatticeDisjunction& D,
                        const Guards& guards) {
  validate(P);
  validate(D);
  for (const RatVector& pi : D.pis) {
    if (pi.size() != P.dim) {
      throw ContractError("apply_lattice: dimension mismatch");
    }
  }
  VPolytope empty;
  empty.dim = P.dim;

  // Integer level range of each direction over P.
  std::vector<long> level_lo, level_hi;
  for (const RatVector& pi : D.pis) {
    const LpSolution lo = lp_optimize(P, pi, LpSense::Min);
    if (!lo.feasible) return empty;
    const LpSolution hi = lp_optimize(P, pi, LpSense::Max);
    const long first = ceil_long(lo.value);
    const long last = floor_long(hi.value);
    if (first > last) return empty;  // no integer level in range
    level_lo.push_back(first);
    level_hi.push_back(last);
  }

  std::uint64_t combos = 1;
  for (std::size_t j = 0; j < level_lo.size(); ++j) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(level_hi[j] - level_lo[j]) + 1;
    if (combos > guards.max_level_combos / span) {
      throw GuardError(
          "apply_lattice: level combination count exceeds cap " +
          std::to_string(guards.max_level_combos));
    }
    combos *= span;
  }

  std::vector<long> level = level_lo;
  std::vector<VPolytope> cells;
  for (;;) {
    HPolytope cell = P;
    for (std::size_t j = 0; j < D.pis.size(); ++j) {
      cell.rows.push_back(
          direction_row(D.pis[j], Rel::Eq, Rat(level[j])));
    }
    VPolytope V = dd_convert_h_to_v(cell);
    if (!V.empty()) cells.push_back(std::move(V));
    // Next level combination, last direction fastest.
    int pos = static_cast<int>(level.size()) - 1;
    while (pos >= 0 && level[pos] == level_hi[static_cast<std::size_t>(pos)]) {
      level[pos] = level_lo[static_cast<std::size_t>(pos)];
      --pos;
    }
    if (pos < 0) break;
    ++level[static_cast<std::size_t>(pos)];
  }
  if (cells.empty()) return empty;
  return hull_of_union(cells);
}

}  // namespace cutrank
