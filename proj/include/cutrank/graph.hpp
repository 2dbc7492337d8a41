// cutrank: exact cutting-plane rank laboratory.
//
// Simple undirected graphs with a frozen edge order (the coordinate order
// of every derived polytope), exact edge expansion with witness, and
// deterministic random regular graph generation.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cutrank/rational.hpp"

namespace cutrank {

struct Graph {
  int n = 0;
  // Unordered pairs stored as (min, max); the sequence order is the
  // coordinate order of all derived objects and is part of the value.
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Throws ContractError on loops, parallel edges or out-of-range endpoints.
void validate(const Graph& G);

// Neighbor vertex lists, in edge order.
std::vector<std::vector<int>> adjacency_lists(const Graph& G);

// Incident edge indices per vertex, in edge order.
std::vector<std::vector<int>> incident_edges(const Graph& G);

// K_n with edges in lexicographic order.
Graph complete_graph(int n);

struct ExpansionReport {
  Rat expansion = 0;          // e(S, V\S) / |S|, exact
  std::vector<int> witness;   // the minimizing S, sorted
  std::uint64_t ratios_examined = 0;
};

// Exact minimum of e(S,V\S)/|S| over nonempty S with 2|S| <= n, by
// exhaustive enumeration (guard: n <= 22). Ties break toward smaller |S|,
// then lexicographically smaller S.
ExpansionReport edge_expansion(const Graph& G);

// Configuration-model pairing with whole-attempt rejection of loops and
// parallel edges. Deterministic per seed (std::mt19937_64 with explicit
// rejection sampling; no platform-dependent distributions). Requires
// n*d even and d < n; throws Error when the retry budget is exhausted.
Graph random_regular_graph(int n, int d, std::uint64_t seed);

}  // namespace cutrank
