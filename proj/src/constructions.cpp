#include "cutrank/constructions.hpp"

#include <algorithm>

#include "cutrank/errors.hpp"

namespace cutrank {

namespace {

// Normalizes and sorts rows deterministically while preserving duplicates
// (the documented row-count laws are exact, so nothing may collapse).
void normalize_and_sort(HPolytope* P) {
  for (LinearRow& row : P->rows) row = normalize_row(row);
  std::stable_sort(P->rows.begin(), P->rows.end(), row_less);
}

void append_box_rows(int n, HPolytope* P) {
  for (int i = 0; i < n; ++i) {
    LinearRow lo;
    lo.coeffs = RatVector::Zero(n);
    lo.coeffs(i) = 1;
    lo.rel = Rel::Ge;
    lo.rhs = 0;
    P->rows.push_back(std::move(lo));
    LinearRow hi;
    hi.coeffs = RatVector::Zero(n);
    hi.coeffs(i) = 1;
    hi.rel = Rel::Le;
    hi.rhs = 1;
    P->rows.push_back(std::move(hi));
  }
}

}  // namespace

HPolytope tseitin_polytope(const Graph& G) {
  validate(G);
  const int m = G.edge_count();
  const auto inc = incident_edges(G);
  for (int u = 0; u < G.n; ++u) {
    if (inc[u].empty()) {
      throw ContractError(
          "tseitin_polytope: isolated vertex " + std::to_string(u) +
          " (its F = empty-set row reads 0 >= 1)");
    }
  }

  HPolytope P;
  P.dim = m;
  for (int u = 0; u < G.n; ++u) {
    const std::vector<int>& around = inc[u];
    const int deg = static_cast<int>(around.size());
    // All even-cardinality flip sets F over the incident edges.
    for (std::uint32_t F = 0; F < (std::uint32_t{1} << deg); ++F) {
      if (__builtin_popcount(F) % 2 != 0) continue;
      LinearRow row;
      row.coeffs = RatVector::Zero(m);
      int flipped = 0;
      for (int k = 0; k < deg; ++k) {
        const bool in_F = F & (std::uint32_t{1} << k);
        row.coeffs(around[k]) = in_F ? -1 : 1;
        if (in_F) ++flipped;
      }
      row.rel = Rel::Ge;
      row.rhs = Rat(1 - flipped);
      P.rows.push_back(std::move(row));
    }
  }
  append_box_rows(m, &P);
  normalize_and_sort(&P);
  return P;
}

std::vector<int> half_edge_vertices(const Graph& G,
                                    const HalfIntegralPoint& x) {
  if (x.dim() != G.edge_count()) {
    throw ContractError("half_edge_vertices: point dimension != edge count");
  }
  std::vector<bool> in(G.n, false);
  for (std::size_t e = 0; e < G.edges.size(); ++e) {
    if (x.values[e] == HalfVal::Half) {
      in[G.edges[e].first] = true;
      in[G.edges[e].second] = true;
    }
  }
  std::vector<int> out;
  for (int u = 0; u < G.n; ++u) {
    if (in[u]) out.push_back(u);
  }
  return out;
}

bool tseitin_membership(const Graph& G, const HalfIntegralPoint& x) {
  validate(G);
  if (x.dim() != G.edge_count()) {
    throw ContractError("tseitin_membership: point dimension != edge count");
  }
  std::vector<int> half_count(G.n, 0);
  std::vector<int> one_count(G.n, 0);
  for (std::size_t e = 0; e < G.edges.size(); ++e) {
    const auto& [u, v] = G.edges[e];
    if (x.values[e] == HalfVal::Half) {
      ++half_count[u];
      ++half_count[v];
    } else if (x.values[e] == HalfVal::One) {
      ++one_count[u];
      ++one_count[v];
    }
  }
  for (int u = 0; u < G.n; ++u) {
    if (half_count[u] >= 1) {
      if (half_count[u] < 2) return false;  // a lone half edge
    } else {
      if (one_count[u] % 2 == 0) return false;  // even 1-degree
    }
  }
  return true;
}

ParitySystem tseitin_parity_system(const Graph& G) {
  validate(G);
  ParitySystem S;
  S.nvars = G.edge_count();
  for (int u = 0; u < G.n; ++u) {
    BitVec row(static_cast<std::size_t>(S.nvars), 0);
    for (std::size_t e = 0; e < G.edges.size(); ++e) {
      if (G.edges[e].first == u || G.edges[e].second == u) row[e] = 1;
    }
    S.rows.push_back(std::move(row));
    S.rhs.push_back(1);
  }
  return S;
}

HPolytope cropped_cube(int n) {
  if (n < 1) throw ContractError("cropped_cube: n must be positive");
  if (n > 20) {
    throw GuardError("cropped_cube: n = " + std::to_string(n) +
                     " exceeds the 2^n row guard (20)");
  }
  HPolytope P;
  P.dim = n;
  for (std::uint32_t J = 0; J < (std::uint32_t{1} << n); ++J) {
    LinearRow row;
    row.coeffs = RatVector::Zero(n);
    int outside = 0;
    for (int i = 0; i < n; ++i) {
      const bool in_J = J & (std::uint32_t{1} << i);
      row.coeffs(i) = in_J ? 1 : -1;
      if (!in_J) ++outside;
    }
    row.rel = Rel::Ge;
    row.rhs = Rat(1, 2) - Rat(outside);
    P.rows.push_back(std::move(row));
  }
  append_box_rows(n, &P);
  normalize_and_sort(&P);
  return P;
}

}  // namespace cutrank
