// Instance generator tests: Tseitin polytopes (duplicate-preserving row
// law, membership shortcut, vertex parity system), cropped cubes, graphs,
// and half-integral point plumbing.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cutrank/constructions.hpp"
#include "cutrank/errors.hpp"
#include "cutrank/geometry.hpp"
#include "cutrank/graph.hpp"
#include "cutrank/half_point.hpp"
#include "cutrank/parity.hpp"
#include "cutrank/polytope.hpp"
#include "cutrank/rational.hpp"
#include "oracles.hpp"

using namespace cutrank;

namespace {

// expected Tseitin row count: one row per vertex and even-size neighborhood
// subset, plus two box rows per edge
std::size_t tseitin_row_law(const Graph& G) {
  const auto inc = incident_edges(G);
  std::size_t total = 0;
  for (int u = 0; u < G.n; ++u) {
    const std::size_t deg = inc[static_cast<std::size_t>(u)].size();
    total += std::size_t{1} << (deg == 0 ? 0 : deg - 1);
  }
  return total + 2 * static_cast<std::size_t>(G.edge_count());
}

HalfIntegralPoint point_from_mask(int m, std::uint64_t trits) {
  HalfIntegralPoint x;
  for (int i = 0; i < m; ++i) {
    switch (trits % 3) {
      case 0: x.values.push_back(HalfVal::Zero); break;
      case 1: x.values.push_back(HalfVal::Half); break;
      default: x.values.push_back(HalfVal::One); break;
    }
    trits /= 3;
  }
  return x;
}

std::uint64_t pow3(int m) {
  std::uint64_t r = 1;
  for (int i = 0; i < m; ++i) r *= 3;
  return r;
}

}  // namespace

TEST_CASE("graph validation and helpers") {
  const Graph K4 = complete_graph(4);
  CHECK(K4.edge_count() == 6);
  const auto adj = adjacency_lists(K4);
  for (int u = 0; u < 4; ++u) CHECK(adj[static_cast<std::size_t>(u)].size() == 3);

  Graph loop;
  loop.n = 2;
  loop.edges = {{0, 0}};
  CHECK_THROWS_AS(validate(loop), ContractError);
  Graph dup;
  dup.n = 2;
  dup.edges = {{0, 1}, {0, 1}};
  CHECK_THROWS_AS(validate(dup), ContractError);
}

TEST_CASE("random regular graphs are regular and deterministic") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph G = random_regular_graph(8, 3, seed);
    CHECK(G.edge_count() == 12);
    const auto adj = adjacency_lists(G);
    for (int u = 0; u < G.n; ++u) CHECK(adj[static_cast<std::size_t>(u)].size() == 3);
    const Graph H = random_regular_graph(8, 3, seed);
    CHECK(G.edges == H.edges);
  }
  CHECK_THROWS_AS(random_regular_graph(5, 3, 1), ContractError);  // nd odd
}

TEST_CASE("edge expansion agrees with the subset-scan oracle") {
  const Graph K5 = complete_graph(5);
  const ExpansionReport rep = edge_expansion(K5);
  CHECK(rep.expansion == Rat(3));
  CHECK(rep.witness == std::vector<int>{0, 1});
  CHECK(rep.expansion == oracle::edge_expansion(K5));

  const Graph K2 = complete_graph(2);
  CHECK(edge_expansion(K2).expansion == Rat(1));

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph G = random_regular_graph(8, 3, seed + 1);
    CHECK(edge_expansion(G).expansion == oracle::edge_expansion(G));
  }
}

TEST_CASE("Tseitin row-count law preserves duplicate rows") {
  // K2's two vertex rows coincide (x_e >= 1 twice): the law only holds if
  // construction does not deduplicate
  const Graph K2 = complete_graph(2);
  const HPolytope P2 = tseitin_polytope(K2);
  CHECK(P2.rows.size() == tseitin_row_law(K2));
  CHECK(P2.rows.size() == 4);

  for (int n = 3; n <= 5; ++n) {
    const Graph K = complete_graph(n);
    CHECK(tseitin_polytope(K).rows.size() == tseitin_row_law(K));
  }
  const Graph R = random_regular_graph(6, 3, 7);
  CHECK(tseitin_polytope(R).rows.size() == tseitin_row_law(R));
}

TEST_CASE("Tseitin polytope rejects isolated vertices") {
  Graph G;
  G.n = 3;
  G.edges = {{0, 1}};  // vertex 2 isolated: its empty-subset row reads 0 >= 1
  CHECK_THROWS_AS(tseitin_polytope(G), ContractError);
}

TEST_CASE("triangle Tseitin polytope is the single point (1/2,1/2,1/2)") {
  const Graph K3 = complete_graph(3);
  const HPolytope P = tseitin_polytope(K3);
  const VPolytope V = dd_convert_h_to_v(P);
  REQUIRE(V.vertices.size() == 1);
  const Rat half(1, 2);
  for (int i = 0; i < 3; ++i) CHECK(V.vertices[0](i) == half);
  // no 0-1 points at all
  CHECK(oracle::integer_points(P).empty());
}

TEST_CASE("K2 Tseitin polytope is the single point (1)") {
  const HPolytope P = tseitin_polytope(complete_graph(2));
  const VPolytope V = dd_convert_h_to_v(P);
  REQUIRE(V.vertices.size() == 1);
  CHECK(V.vertices[0](0) == Rat(1));
}

TEST_CASE("membership shortcut matches the inequality system pointwise") {
  // over every half-integral point of the edge cube
  for (const Graph& G : {complete_graph(2), complete_graph(3), complete_graph(4)}) {
    const HPolytope P = tseitin_polytope(G);
    const int m = G.edge_count();
    for (std::uint64_t code = 0; code < pow3(m); ++code) {
      const HalfIntegralPoint x = point_from_mask(m, code);
      CHECK(tseitin_membership(G, x) == hrep_contains(P, x.to_ratvector()));
    }
  }
}

TEST_CASE("half_edge_vertices lists the endpoints of fractional edges") {
  const Graph K3 = complete_graph(3);  // edges (0,1), (0,2), (1,2)
  HalfIntegralPoint x;
  x.values = {HalfVal::Half, HalfVal::One, HalfVal::Zero};
  CHECK(half_edge_vertices(K3, x) == std::vector<int>{0, 1});
  x.values = {HalfVal::One, HalfVal::One, HalfVal::Zero};
  CHECK(half_edge_vertices(K3, x).empty());
  x.values = {HalfVal::Half, HalfVal::Half, HalfVal::Half};
  CHECK(half_edge_vertices(K3, x) == std::vector<int>{0, 1, 2});
}

TEST_CASE("vertex parity system: odd graphs infeasible, K4 solutions are the 0-1 points") {
  const Graph K3 = complete_graph(3);
  CHECK(!solve_parity(tseitin_parity_system(K3)).has_value());

  const Graph K4 = complete_graph(4);
  const ParitySystem S = tseitin_parity_system(K4);
  const std::vector<BitVec> sols = enumerate_parity_solutions(S, 1 << 10);
  // all-odd-degree subgraphs of K4: 3 perfect matchings, 4 claw stars, and
  // the full edge set (2^{|E| - n + 1} for a connected graph)
  CHECK(sols.size() == 8);
  const std::vector<RatVector> pts = oracle::integer_points(tseitin_polytope(K4));
  REQUIRE(pts.size() == sols.size());
  for (const BitVec& s : sols) {
    RatVector v(K4.edge_count());
    for (int e = 0; e < K4.edge_count(); ++e) v(e) = Rat(static_cast<int>(s[static_cast<std::size_t>(e)]));
    CHECK(std::any_of(pts.begin(), pts.end(),
                      [&](const RatVector& p) { return p == v; }));
  }
}

TEST_CASE("cropped cube row count and frozen n=1, n=2 shapes") {
  for (int n = 1; n <= 4; ++n) {
    const HPolytope P = cropped_cube(n);
    CHECK(P.rows.size() == (std::size_t{1} << n) + 2 * static_cast<std::size_t>(n));
  }
  // n=1 collapses to the single point 1/2
  const VPolytope V1 = dd_convert_h_to_v(cropped_cube(1));
  REQUIRE(V1.vertices.size() == 1);
  CHECK(V1.vertices[0](0) == Rat(1, 2));

  // n=2 is the diamond with the four edge midpoints as vertices
  VPolytope V2 = dd_convert_h_to_v(cropped_cube(2));
  canonicalize_vertices(&V2);
  REQUIRE(V2.vertices.size() == 4);
  const Rat h(1, 2);
  CHECK(V2.vertices[0] == (RatVector(2) << Rat(0), h).finished());
  CHECK(V2.vertices[1] == (RatVector(2) << h, Rat(0)).finished());
  CHECK(V2.vertices[2] == (RatVector(2) << h, Rat(1)).finished());
  CHECK(V2.vertices[3] == (RatVector(2) << Rat(1), h).finished());
}

TEST_CASE("cropped cube keeps exactly the points with a half coordinate") {
  for (int n = 1; n <= 3; ++n) {
    const HPolytope P = cropped_cube(n);
    for (std::uint64_t code = 0; code < pow3(n); ++code) {
      const HalfIntegralPoint x = point_from_mask(n, code);
      const bool has_half = !x.fractional_support().empty();
      CHECK(hrep_contains(P, x.to_ratvector()) == has_half);
    }
    CHECK(oracle::integer_points(P).empty());
  }
}

TEST_CASE("cropped cube guard and validation") {
  CHECK_THROWS_AS(cropped_cube(0), ContractError);
  CHECK_THROWS_AS(cropped_cube(21), GuardError);
}

TEST_CASE("half-integral point plumbing") {
  HalfIntegralPoint x;
  x.values = {HalfVal::Zero, HalfVal::Half, HalfVal::One};
  CHECK(x.dim() == 3);
  CHECK(x.fractional_support() == std::vector<int>{1});
  CHECK(!x.is_integral());
  const RatVector v = x.to_ratvector();
  CHECK(v(0) == Rat(0));
  CHECK(v(1) == Rat(1, 2));
  CHECK(v(2) == Rat(1));
  CHECK(from_ratvector(v) == x);
  CHECK_THROWS_AS(from_ratvector((RatVector(1) << Rat(1, 3)).finished()),
                  ContractError);

  const HalfIntegralPoint down = round_point(x, {1}, 0);
  CHECK(down.values == std::vector<HalfVal>{HalfVal::Zero, HalfVal::Zero, HalfVal::One});
  const HalfIntegralPoint up = round_point(x, {1}, 1);
  CHECK(up.values == std::vector<HalfVal>{HalfVal::Zero, HalfVal::One, HalfVal::One});
  CHECK(all_half(2).values == std::vector<HalfVal>{HalfVal::Half, HalfVal::Half});
}
