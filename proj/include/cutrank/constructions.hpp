// cutrank: exact cutting-plane rank laboratory.
//
// The polytope families under study. A Tseitin polytope demands odd parity
// around every vertex of a graph (one row per vertex and even-cardinality
// flip set over its neighborhood, plus box rows); a cropped cube shaves
// every 0-1 corner of [0,1]^n by half a unit. Membership of half-integral
// points in a Tseitin polytope has a purely combinatorial characterization
// (two half-edges at every fractional vertex; an odd number of 1-edges at
// every integral one) which is exercised against the H-representation.

#pragma once

#include "cutrank/graph.hpp"
#include "cutrank/half_point.hpp"
#include "cutrank/parity.hpp"
#include "cutrank/polytope.hpp"

namespace cutrank {

// H-representation over R^{|E|}: for every vertex u and every even-size
// F ⊆ N(u), the row sum_{v in N(u)\F} x_uv + sum_{v in F} (1 - x_uv) >= 1,
// plus 0 <= x_e <= 1. Rows are normalized and canonically sorted with
// duplicates preserved, so the row count is exactly
// sum_u 2^{deg(u)-1} + 2|E|. Isolated vertices are a ContractError.
HPolytope tseitin_polytope(const Graph& G);

// Combinatorial membership test for half-integral points: every vertex
// incident to a half edge has at least two of them, and every other vertex
// touches an odd number of 1-edges. Agrees with hrep_contains on the
// H-representation.
bool tseitin_membership(const Graph& G, const HalfIntegralPoint& x);

// The vertices incident to at least one half edge of x (V(x)).
std::vector<int> half_edge_vertices(const Graph& G,
                                    const HalfIntegralPoint& x);

// The odd-parity system of G: per vertex, the incident edge variables sum
// to 1 mod 2. Its 0-1 solutions are exactly the integral points of the Tseitin
// polytope.
ParitySystem tseitin_parity_system(const Graph& G);

// H-representation of the cropped cube: 2^n rows
// sum_{i in J} x_i + sum_{i not in J} (1 - x_i) >= 1/2 over all J, plus
// bounds. Guard: n <= 20.
HPolytope cropped_cube(int n);

}  // namespace cutrank
