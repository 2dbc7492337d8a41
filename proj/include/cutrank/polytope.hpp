// cutrank: exact cutting-plane rank laboratory.
//
// Polytope value types. An HPolytope is a finite list of exact linear rows
// (<=, >=, =) over [0,1]^n-style ambient space; a VPolytope is a finite
// vertex list. Both are plain immutable-after-construction values. Canonical
// forms (normalized rows sorted by a fixed key; vertices lexicographically
// sorted and deduplicated) make outputs deterministic and comparable.
//
// Empty polytopes are first-class values: an empty VPolytope has no
// vertices, and make_empty_hpolytope yields the canonical infeasible row
// 0 <= -1.

#pragma once

#include <string>
#include <vector>

#include "cutrank/rational.hpp"

namespace cutrank {

enum class Rel { Le, Ge, Eq };

std::string rel_symbol(Rel r);

struct LinearRow {
  RatVector coeffs;
  Rel rel = Rel::Le;
  Rat rhs = 0;
};

struct HPolytope {
  int dim = 0;
  std::vector<LinearRow> rows;
};

struct VPolytope {
  int dim = 0;
  std::vector<RatVector> vertices;

  bool empty() const { return vertices.empty(); }
};

// Throws ContractError unless every row's coefficient vector has length dim
// and dim >= 1.
void validate(const HPolytope& P);
void validate(const VPolytope& Q);

// Exact dot of a row's coefficients with a point.
Rat eval_row(const LinearRow& row, const RatVector& x);

// Exact satisfaction of one row.
bool row_satisfied(const LinearRow& row, const RatVector& x);

// True iff x satisfies every row exactly. Throws ContractError on dimension
// mismatch.
bool hrep_contains(const HPolytope& P, const RatVector& x);

// The canonical empty polytope in ambient dimension dim: single row 0 <= -1.
HPolytope make_empty_hpolytope(int dim);

// The rows 0 <= x_i <= 1 for all i, in canonical order.
HPolytope unit_box(int n);

// Scales the row so all coefficients and the rhs are coprime integers.
// Inequality rows scale by positive factors only (the relation is part of
// the value); equality rows additionally orient the first nonzero
// coefficient positive. All-zero rows normalize the rhs to -1, 0 or 1.
LinearRow normalize_row(const LinearRow& row);

// Fixed total order on normalized rows: (#nonzeros, coeffs lex, relation,
// rhs). Deterministic tie-breaking for all row-sorted outputs.
bool row_less(const LinearRow& a, const LinearRow& b);
bool row_equal(const LinearRow& a, const LinearRow& b);

// Normalizes every row and sorts by row_less; exact duplicates collapse.
void canonicalize_rows(HPolytope* P);

// Lexicographic sort + exact dedupe of the vertex list (canonical V-form
// modulo extremality, which conversion routines establish separately).
void canonicalize_vertices(VPolytope* Q);

// Exact equality of canonicalized vertex lists.
bool same_vertex_set(const VPolytope& a, const VPolytope& b);

}  // namespace cutrank
