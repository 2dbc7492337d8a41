// Exact-arithmetic kernel tests: rationals, H/V polytope plumbing, the
// rational simplex, and double-description conversions, checked against the
// brute-force oracles in oracles.hpp.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cutrank/errors.hpp"
#include "cutrank/geometry.hpp"
#include "cutrank/polytope.hpp"
#include "cutrank/rational.hpp"
#include "cutrank/simplex.hpp"
#include "oracles.hpp"

using namespace cutrank;

namespace {

RatVector vec(std::initializer_list<const char*> entries) {
  RatVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const char* e : entries) v(i++) = parse_rational(e);
  return v;
}

LinearRow row(std::initializer_list<const char*> coeffs, Rel rel,
              const char* rhs) {
  LinearRow r;
  r.coeffs = vec(coeffs);
  r.rel = rel;
  r.rhs = parse_rational(rhs);
  return r;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(format_rational(parse_rational("2/4")) == "1/2");
  CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
  CHECK(format_rational(parse_rational("7")) == "7");
  CHECK(format_rational(parse_rational("0/5")) == "0");
  CHECK(parse_rational("1/3") + parse_rational("2/3") == Rat(1));
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("floor, ceil, integrality") {
  CHECK(floor_long(parse_rational("7/2")) == 3);
  CHECK(ceil_long(parse_rational("7/2")) == 4);
  CHECK(floor_long(parse_rational("-7/2")) == -4);
  CHECK(ceil_long(parse_rational("-7/2")) == -3);
  CHECK(floor_long(Rat(5)) == 5);
  CHECK(ceil_long(Rat(5)) == 5);
  CHECK(is_integer(Rat(-3)));
  CHECK(!is_integer(parse_rational("1/2")));
  CHECK(rat_floor(parse_rational("-1/2")) == Rat(-1));
  CHECK(rat_ceil(parse_rational("-1/2")) == Rat(0));
}

TEST_CASE("lexicographic comparison") {
  CHECK(lex_compare(vec({"1", "2"}), vec({"1", "3"})) < 0);
  CHECK(lex_compare(vec({"2", "0"}), vec({"1", "9"})) > 0);
  CHECK(lex_compare(vec({"1/2", "1/2"}), vec({"1/2", "1/2"})) == 0);
  CHECK(lex_less(vec({"0", "1"}), vec({"1", "0"})));
}

TEST_CASE("row normalization clears denominators and fixes sign") {
  // x/2 + y/3 <= 1/6  ->  3x + 2y <= 1
  const LinearRow n = normalize_row(row({"1/2", "1/3"}, Rel::Le, "1/6"));
  CHECK(n.coeffs == vec({"3", "2"}));
  CHECK(n.rhs == Rat(1));
  CHECK(n.rel == Rel::Le);
  // scaling a row by any positive rational normalizes identically
  const LinearRow doubled = normalize_row(row({"1", "2/3"}, Rel::Le, "1/3"));
  CHECK(doubled.coeffs == n.coeffs);
  CHECK(doubled.rhs == n.rhs);
}

TEST_CASE("canonicalize_rows sorts and collapses exact duplicates") {
  HPolytope P = unit_box(2);
  const std::size_t box_rows = P.rows.size();
  P.rows.push_back(row({"2", "0"}, Rel::Le, "2"));  // duplicate of x <= 1
  canonicalize_rows(&P);
  CHECK(P.rows.size() == box_rows);
  CHECK(std::is_sorted(P.rows.begin(), P.rows.end(), row_less));
}

TEST_CASE("unit box membership") {
  const HPolytope B = unit_box(3);
  CHECK(hrep_contains(B, vec({"1/2", "1/2", "1/2"})));
  CHECK(hrep_contains(B, vec({"0", "1", "0"})));
  CHECK(!hrep_contains(B, vec({"1/2", "1/2", "3/2"})));
  CHECK(!hrep_contains(B, vec({"-1/10", "0", "0"})));
}

TEST_CASE("empty polytope plumbing") {
  const HPolytope E = make_empty_hpolytope(2);
  CHECK(!lp_feasible(E));
  CHECK(dd_convert_h_to_v(E).vertices.empty());
  CHECK(!hrep_contains(E, vec({"0", "0"})));
}

TEST_CASE("LP on the unit box") {
  const HPolytope B = unit_box(4);
  const RatVector ones = vec({"1", "1", "1", "1"});
  const LpSolution mx = lp_optimize(B, ones, LpSense::Max);
  REQUIRE(mx.feasible);
  CHECK(mx.value == Rat(4));
  CHECK(hrep_contains(B, mx.point));
  const LpSolution mn = lp_optimize(B, ones, LpSense::Min);
  REQUIRE(mn.feasible);
  CHECK(mn.value == Rat(0));
}

TEST_CASE("LP with equality rows") {
  HPolytope P = unit_box(2);
  P.rows.push_back(row({"1", "1"}, Rel::Eq, "1"));
  const LpSolution mx = lp_optimize(P, vec({"1", "0"}), LpSense::Max);
  REQUIRE(mx.feasible);
  CHECK(mx.value == Rat(1));
  const LpSolution mn = lp_optimize(P, vec({"1", "0"}), LpSense::Min);
  CHECK(mn.value == Rat(0));
}

TEST_CASE("LP against the vertex-enumeration oracle on seeded polytopes") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng(seed);
    const int dim = 2 + static_cast<int>(seed % 3);
    const HPolytope P = oracle::random_box_polytope(dim, 3, rng);
    RatVector c(dim);
    for (int i = 0; i < dim; ++i) c(i) = oracle::random_rat(rng, 4, 3);
    const auto expect_max = oracle::optimum(P, c, true);
    const auto expect_min = oracle::optimum(P, c, false);
    REQUIRE(expect_max.has_value());  // box center always feasible
    const LpSolution mx = lp_optimize(P, c, LpSense::Max);
    const LpSolution mn = lp_optimize(P, c, LpSense::Min);
    REQUIRE(mx.feasible);
    REQUIRE(mn.feasible);
    CHECK(mx.value == *expect_max);
    CHECK(mn.value == *expect_min);
    CHECK(hrep_contains(P, mx.point));
    CHECK(hrep_contains(P, mn.point));
    CHECK(oracle::dot(c, mx.point) == mx.value);
  }
}

TEST_CASE("DD on a triangle") {
  HPolytope P = unit_box(2);
  P.rows.push_back(row({"1", "1"}, Rel::Le, "1"));
  VPolytope V = dd_convert_h_to_v(P);
  canonicalize_vertices(&V);
  REQUIRE(V.vertices.size() == 3);
  CHECK(V.vertices[0] == vec({"0", "0"}));
  CHECK(V.vertices[1] == vec({"0", "1"}));
  CHECK(V.vertices[2] == vec({"1", "0"}));
}

TEST_CASE("DD handles equality rows (segment)") {
  HPolytope P = unit_box(2);
  P.rows.push_back(row({"1", "1"}, Rel::Eq, "1"));
  VPolytope V = dd_convert_h_to_v(P);
  canonicalize_vertices(&V);
  REQUIRE(V.vertices.size() == 2);
  CHECK(V.vertices[0] == vec({"0", "1"}));
  CHECK(V.vertices[1] == vec({"1", "0"}));
}

TEST_CASE("DD on a single point") {
  HPolytope P = unit_box(2);
  P.rows.push_back(row({"1", "0"}, Rel::Eq, "1/2"));
  P.rows.push_back(row({"0", "1"}, Rel::Eq, "1/2"));
  const VPolytope V = dd_convert_h_to_v(P);
  REQUIRE(V.vertices.size() == 1);
  CHECK(V.vertices[0] == vec({"1/2", "1/2"}));
}

TEST_CASE("DD matches the tight-row enumeration oracle on seeded polytopes") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    std::mt19937_64 rng(seed);
    const int dim = 2 + static_cast<int>(seed % 3);
    const HPolytope P = oracle::random_box_polytope(dim, 3, rng);
    VPolytope V = dd_convert_h_to_v(P);
    canonicalize_vertices(&V);
    const std::vector<RatVector> expect = oracle::vertices(P);
    REQUIRE(V.vertices.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
      CHECK(V.vertices[i] == expect[i]);
    }
  }
}

TEST_CASE("DD roundtrip V -> H -> V is the identity on vertex sets") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    std::mt19937_64 rng(seed);
    const int dim = 2 + static_cast<int>(seed % 3);
    const HPolytope P = oracle::random_box_polytope(dim, 3, rng);
    const VPolytope V = dd_convert_h_to_v(P);
    if (V.vertices.empty()) continue;
    const HPolytope H2 = dd_convert_v_to_h(V);
    const VPolytope V2 = dd_convert_h_to_v(H2);
    CHECK(same_vertex_set(V, V2));
  }
}

TEST_CASE("conv_membership against the Caratheodory oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 2 + trial % 3;
    VPolytope Q;
    Q.dim = dim;
    const int npts = 3 + trial % 4;
    for (int p = 0; p < npts; ++p) {
      RatVector v(dim);
      for (int i = 0; i < dim; ++i) v(i) = oracle::random_rat(rng, 2, 3);
      Q.vertices.push_back(std::move(v));
    }
    // probe: random convex combination (member) and a far point (not)
    RatVector probe = RatVector::Constant(dim, Rat(0));
    Rat total = 0;
    std::vector<Rat> w;
    for (int p = 0; p < npts; ++p) {
      const Rat wi(std::uniform_int_distribution<int>(0, 3)(rng));
      w.push_back(wi);
      total += wi;
    }
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    for (int p = 0; p < npts; ++p) {
      for (int i = 0; i < dim; ++i) probe(i) += w[static_cast<std::size_t>(p)] / total * Q.vertices[static_cast<std::size_t>(p)](i);
    }
    const ConvCertificate inside = conv_membership(probe, Q);
    CHECK(inside.member);
    CHECK(oracle::in_hull(probe, Q.vertices));
    if (inside.member) {
      // the returned multipliers really reconstruct the probe
      REQUIRE(inside.multipliers.size() == Q.vertices.size());
      Rat lam_total = 0;
      RatVector recon = RatVector::Constant(dim, Rat(0));
      for (std::size_t p = 0; p < Q.vertices.size(); ++p) {
        CHECK(inside.multipliers[p] >= 0);
        lam_total += inside.multipliers[p];
        for (int i = 0; i < dim; ++i) recon(i) += inside.multipliers[p] * Q.vertices[p](i);
      }
      CHECK(lam_total == Rat(1));
      CHECK(recon == probe);
    }

    RatVector outside = Q.vertices[0];
    outside(0) += Rat(10);  // beyond every coordinate bound of the cloud
    CHECK(!conv_membership(outside, Q).member);
    CHECK(!oracle::in_hull(outside, Q.vertices));
  }
}

TEST_CASE("extreme_points drops interior and duplicate points") {
  std::vector<RatVector> cloud = {
      vec({"0", "0"}), vec({"1", "0"}), vec({"0", "1"}), vec({"1", "1"}),
      vec({"1/2", "1/2"}),  // interior
      vec({"1/2", "0"}),    // edge midpoint
      vec({"1", "1"}),      // duplicate
  };
  const std::vector<RatVector> ext = extreme_points(std::move(cloud));
  CHECK(ext.size() == 4);
  for (const RatVector& v : ext) {
    CHECK(is_integer(v(0)));
    CHECK(is_integer(v(1)));
  }
}

TEST_CASE("hull_of_union covers both parts") {
  VPolytope A;
  A.dim = 2;
  A.vertices = {vec({"0", "0"}), vec({"1", "0"})};
  VPolytope B;
  B.dim = 2;
  B.vertices = {vec({"0", "1"})};
  VPolytope U = hull_of_union({A, B});
  canonicalize_vertices(&U);
  REQUIRE(U.vertices.size() == 3);
  CHECK(U.vertices[0] == vec({"0", "0"}));
  CHECK(U.vertices[1] == vec({"0", "1"}));
  CHECK(U.vertices[2] == vec({"1", "0"}));

  // an empty part contributes nothing
  VPolytope E;
  E.dim = 2;
  VPolytope U2 = hull_of_union({A, E});
  CHECK(same_vertex_set(U2, hull_of_union({A})));
}

TEST_CASE("intersect merges rows and eliminates redundant ones") {
  HPolytope box = unit_box(2);
  HPolytope half;
  half.dim = 2;
  half.rows.push_back(row({"1", "1"}, Rel::Le, "1"));
  const HPolytope I = intersect({box, half});
  // x <= 1 and y <= 1 are implied by x + y <= 1 with x, y >= 0 and drop out
  CHECK(I.rows.size() == 3);
  CHECK(hrep_contains(I, vec({"1/2", "1/2"})));
  CHECK(!hrep_contains(I, vec({"1", "1"})));
  // ...without changing the point set
  HPolytope naive = box;
  naive.rows.push_back(half.rows[0]);
  VPolytope VI = dd_convert_h_to_v(I);
  VPolytope VN = dd_convert_h_to_v(naive);
  canonicalize_vertices(&VI);
  canonicalize_vertices(&VN);
  CHECK(same_vertex_set(VI, VN));
}

TEST_CASE("same_vertex_set compares canonicalized lists") {
  VPolytope A;
  A.dim = 2;
  A.vertices = {vec({"1", "0"}), vec({"0", "1"})};
  VPolytope B;
  B.dim = 2;
  B.vertices = {vec({"0", "1"}), vec({"1", "0"})};
  canonicalize_vertices(&A);
  canonicalize_vertices(&B);
  CHECK(same_vertex_set(A, B));
  B.vertices.push_back(vec({"1", "1"}));
  CHECK(!same_vertex_set(A, B));
}

TEST_CASE("validation rejects malformed polytopes") {
  HPolytope P;
  P.dim = 2;
  P.rows.push_back(row({"1"}, Rel::Le, "1"));  // wrong arity
  CHECK_THROWS_AS(validate(P), ContractError);
  VPolytope Q;
  Q.dim = 0;
  CHECK_THROWS_AS(validate(Q), ContractError);
}
