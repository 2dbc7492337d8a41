// Closure machinery tests: direction enumeration, t-branch and lattice
// disjunction hulls on frozen small examples, closure rounds and rank
// brackets, the 0-1 hull, coordinate fixing, the unit-direction fixing
// sequence, and constructive rounding witnesses.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "cutrank/closures.hpp"
#include "cutrank/constructions.hpp"
#include "cutrank/disjunctions.hpp"
#include "cutrank/errors.hpp"
#include "cutrank/geometry.hpp"
#include "cutrank/graph.hpp"
#include "cutrank/half_point.hpp"
#include "cutrank/polytope.hpp"
#include "cutrank/rational.hpp"
#include "oracles.hpp"

using namespace cutrank;

namespace {

RatVector vec2(const Rat& a, const Rat& b) {
  RatVector v(2);
  v << a, b;
  return v;
}

VPolytope sorted_vertices(const HPolytope& P) {
  VPolytope V = dd_convert_h_to_v(P);
  canonicalize_vertices(&V);
  return V;
}

bool hrep_equal(const HPolytope& a, const HPolytope& b) {
  if (a.dim != b.dim || a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (!row_equal(a.rows[i], b.rows[i])) return false;
  }
  return true;
}

FamilySpec split_family(int dim, int coeff_bound = 1) {
  FamilySpec F;
  F.mode = FamilyMode::Split;
  F.t = 1;
  F.coeff_bound = coeff_bound;
  F.dimension = dim;
  return F;
}

}  // namespace

TEST_CASE("direction enumeration is canonical and lexicographic") {
  const std::vector<RatVector> dirs = enumerate_directions(2, 1);
  REQUIRE(dirs.size() == 4);
  CHECK(dirs[0] == vec2(0, 1));
  CHECK(dirs[1] == vec2(1, -1));
  CHECK(dirs[2] == vec2(1, 0));
  CHECK(dirs[3] == vec2(1, 1));

  // B = 1 count is exact: half the nonzero sign vectors
  CHECK(direction_count_estimate(2, 1) == 4);
  CHECK(direction_count_estimate(10, 1) == 29524);
  CHECK(static_cast<std::int64_t>(enumerate_directions(3, 2).size()) <=
        direction_count_estimate(3, 2));
  CHECK(direction_count_estimate(400, 9) ==
        std::numeric_limits<std::int64_t>::max());  // saturates, no overflow
}

TEST_CASE("split and family validation") {
  SplitDisjunction d;
  d.pi = vec2(Rat(1, 2), Rat(0));
  d.delta = 0;
  CHECK_THROWS_AS(validate(d), ContractError);  // fractional direction
  d.pi = vec2(0, 0);
  CHECK_THROWS_AS(validate(d), ContractError);  // zero direction
  d.pi = vec2(2, 4);
  CHECK_THROWS_AS(validate(d), ContractError);  // gcd 2
  d.pi = vec2(-1, 1);
  CHECK_THROWS_AS(validate(d), ContractError);  // sign convention
  d.pi = vec2(1, -1);
  CHECK_NOTHROW(validate(d));

  FamilySpec F = split_family(2);
  F.t = 2;  // split family is single-direction by definition
  CHECK_THROWS_AS(validate(F), ContractError);
}

TEST_CASE("t-branch hulls on the 2-dimensional cropped cube") {
  const HPolytope P = cropped_cube(2);
  const Rat h(1, 2);

  // one split on x1: the two cells are the left and right diamond tips
  TBranchDisjunction D1;
  SplitDisjunction s1;
  s1.pi = vec2(1, 0);
  s1.delta = 0;
  D1.terms = {s1};
  VPolytope H1 = apply_tbranch(P, D1);
  canonicalize_vertices(&H1);
  REQUIRE(H1.vertices.size() == 2);
  CHECK(H1.vertices[0] == vec2(0, h));
  CHECK(H1.vertices[1] == vec2(1, h));

  // branching on both unit directions at level 0 leaves only 0-1 corner
  // cells, all of which the cropping removed
  TBranchDisjunction D2;
  SplitDisjunction s2;
  s2.pi = vec2(0, 1);
  s2.delta = 0;
  D2.terms = {s2, s1};  // canonical term order
  CHECK(apply_tbranch(P, D2).empty());

  // unsorted terms violate the canonical-form contract
  TBranchDisjunction bad;
  bad.terms = {s1, s2};
  CHECK_THROWS_AS(apply_tbranch(P, bad), ContractError);
}

TEST_CASE("lattice hulls on the 2-dimensional cropped cube") {
  const HPolytope P = cropped_cube(2);

  // x1 + x2 integral slices the diamond along the level-1 chord
  LatticeDisjunction L1;
  L1.pis = {vec2(1, 1)};
  VPolytope H1 = apply_lattice(P, L1);
  canonicalize_vertices(&H1);
  REQUIRE(H1.vertices.size() == 2);
  CHECK(H1.vertices[0] == vec2(Rat(1, 4), Rat(3, 4)));
  CHECK(H1.vertices[1] == vec2(Rat(3, 4), Rat(1, 4)));

  // both coordinates integral would need a 0-1 point
  LatticeDisjunction L2;
  L2.pis = {vec2(0, 1), vec2(1, 0)};
  CHECK(apply_lattice(P, L2).empty());
}

TEST_CASE("closure rounds shrink the cropped cube to its center, then kill it") {
  const HPolytope P = cropped_cube(2);
  const FamilySpec F = split_family(2);

  const HPolytope C1 = closure_round(P, F);
  const VPolytope V1 = sorted_vertices(C1);
  REQUIRE(V1.vertices.size() == 1);
  CHECK(V1.vertices[0] == vec2(Rat(1, 2), Rat(1, 2)));

  const HPolytope C2 = closure_round(C1, F);
  CHECK(sorted_vertices(C2).vertices.empty());
}

TEST_CASE("closure rounds are independent of family evaluation order") {
  ClosureOptions reversed;
  reversed.reverse_family = true;
  for (const HPolytope& P :
       {cropped_cube(2), cropped_cube(3), tseitin_polytope(complete_graph(3))}) {
    const FamilySpec F = split_family(P.dim);
    CHECK(hrep_equal(closure_round(P, F), closure_round(P, F, default_guards(),
                                                        reversed)));
  }
  // and for a wider coefficient bound
  const HPolytope P = cropped_cube(2);
  CHECK(hrep_equal(closure_round(P, split_family(2, 2)),
                   closure_round(P, split_family(2, 2), default_guards(),
                                 reversed)));
}

TEST_CASE("rank bracket: cropped cubes need exactly n rounds for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const RankBracket B =
        rank_upper_bound(cropped_cube(n), split_family(n), n + 2);
    CHECK(B.reached);
    CHECK(B.rounds == n);
    REQUIRE(B.vertex_counts.size() == static_cast<std::size_t>(n));
    CHECK(B.vertex_counts.back() == 0);  // final iterate is empty, like the hull
  }

  // a polytope equal to its integer hull needs zero rounds
  const RankBracket B0 = rank_upper_bound(unit_box(2), split_family(2), 3);
  CHECK(B0.reached);
  CHECK(B0.rounds == 0);

  // an exhausted budget reports an open bracket
  const RankBracket Bopen =
      rank_upper_bound(cropped_cube(3), split_family(3), 1);
  CHECK(!Bopen.reached);
  CHECK(Bopen.rounds == 1);
}

TEST_CASE("integer hull by exhaustive 0-1 enumeration") {
  const VPolytope Hbox = integer_hull(unit_box(3));
  CHECK(Hbox.vertices.size() == 8);

  CHECK(integer_hull(cropped_cube(3)).empty());
  CHECK(integer_hull(tseitin_polytope(complete_graph(3))).empty());

  // K4: the odd-degree subgraph indicators, all vertices of the hull
  const VPolytope H4 = integer_hull(tseitin_polytope(complete_graph(4)));
  CHECK(H4.vertices.size() == 8);
  HPolytope big = unit_box(21);
  CHECK_THROWS_AS(integer_hull(big), GuardError);
}

TEST_CASE("coordinate fixing substitutes and reduces dimension") {
  const HPolytope box3 = unit_box(3);
  const HPolytope Q = fix_coordinates(box3, {0, 2}, {1, 0});
  CHECK(Q.dim == 1);
  const VPolytope V = sorted_vertices(Q);
  REQUIRE(V.vertices.size() == 2);
  CHECK(V.vertices[0](0) == Rat(0));
  CHECK(V.vertices[1](0) == Rat(1));

  // fixing against a constant row that becomes false yields the canonical
  // empty polytope in the reduced dimension
  HPolytope P = unit_box(2);
  LinearRow cap;
  cap.coeffs = vec2(1, 0);
  cap.rel = Rel::Le;
  cap.rhs = 0;
  P.rows.push_back(cap);
  const HPolytope E = fix_coordinates(P, {0}, {1});
  CHECK(hrep_equal(E, make_empty_hpolytope(1)));

  CHECK_THROWS_AS(fix_coordinates(box3, {0, 1}, {1}), ContractError);
  CHECK_THROWS_AS(fix_coordinates(box3, {3}, {0}), ContractError);
  CHECK_THROWS_AS(fix_coordinates(box3, {0, 0}, {1, 1}), ContractError);
  CHECK_THROWS_AS(fix_coordinates(box3, {0}, {2}), ContractError);
  CHECK_THROWS_AS(fix_coordinates(box3, {0, 1, 2}, {1, 1, 1}), ContractError);
}

TEST_CASE("unit-direction fixing sequence round counts") {
  CHECK(balas_sequence(unit_box(2), 1) == 0);
  CHECK(balas_sequence(cropped_cube(1), 1) == 1);
  CHECK(balas_sequence(cropped_cube(2), 1) == 2);
  CHECK(balas_sequence(cropped_cube(4), 2) == 2);
  CHECK(balas_sequence(tseitin_polytope(complete_graph(3)), 1) == 1);
  CHECK_THROWS_AS(balas_sequence(cropped_cube(2), 0), ContractError);
}

TEST_CASE("rounding witnesses round a small set both ways integrally") {
  // forced one-coordinate witness: direction x1 over the all-half square
  const HalfIntegralPoint x = all_half(2);
  RoundingWitness W = rounding_witness(x, {vec2(1, 0)});
  CHECK(W.J == std::vector<int>{0});
  CHECK(W.down.values == std::vector<HalfVal>{HalfVal::Zero, HalfVal::Half});
  CHECK(W.up.values == std::vector<HalfVal>{HalfVal::One, HalfVal::Half});

  // even column sum admits the empty set: both roundings are x itself
  W = rounding_witness(x, {vec2(1, 1)});
  CHECK(W.J.empty());
  CHECK(W.down == x);
  CHECK(W.up == x);

  // witness laws on a seeded batch, against the defining property
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int t = 1 + static_cast<int>(rng() % 2);
    HalfIntegralPoint y = all_half(n);
    for (int i = 0; i < n - 2 * t; ++i) {
      y.values[static_cast<std::size_t>(rng() % static_cast<unsigned>(n))] =
          (rng() & 1) ? HalfVal::One : HalfVal::Zero;
    }
    if (static_cast<int>(y.fractional_support().size()) < t) continue;
    std::vector<RatVector> pis;
    for (int i = 0; i < t; ++i) {
      RatVector pi(n);
      for (int j = 0; j < n; ++j) {
        pi(j) = Rat(static_cast<int>(rng() % 7) - 3);
      }
      pis.push_back(pi);
    }
    const RoundingWitness Y = rounding_witness(y, pis);
    CHECK(static_cast<int>(Y.J.size()) <= t);
    CHECK(std::is_sorted(Y.J.begin(), Y.J.end()));
    const std::vector<int> supp = y.fractional_support();
    for (int j : Y.J) {
      CHECK(std::find(supp.begin(), supp.end(), j) != supp.end());
    }
    const RatVector mid =
        (Y.down.to_ratvector() + Y.up.to_ratvector()) / Rat(2);
    CHECK(mid == y.to_ratvector());
    for (const RatVector& pi : pis) {
      CHECK(is_integer(pi.dot(Y.down.to_ratvector())));
      CHECK(is_integer(pi.dot(Y.up.to_ratvector())));
    }
  }

  // fractional support must cover the direction count
  HalfIntegralPoint tight;
  tight.values = {HalfVal::Half, HalfVal::One};
  CHECK_THROWS_AS(rounding_witness(tight, {vec2(1, 0), vec2(0, 1)}),
                  ContractError);
  CHECK_THROWS_AS(rounding_witness(x, {vec2(Rat(1, 2), Rat(1))}),
                  ContractError);
}

TEST_CASE("family size guard rejects high-dimensional split closures") {
  const HPolytope big = unit_box(10);
  CHECK_THROWS_AS(closure_round(big, split_family(10)), GuardError);

  // a box is already its own hull, so the bracket returns before any round;
  // a shaved simplex is not, and the first round must hit the family guard
  HPolytope simplex = unit_box(10);
  LinearRow sum;
  sum.coeffs = RatVector::Constant(10, Rat(1));
  sum.rel = Rel::Le;
  sum.rhs = Rat(1, 2);
  simplex.rows.push_back(sum);
  CHECK_THROWS_AS(rank_upper_bound(simplex, split_family(10), 2), GuardError);
}
