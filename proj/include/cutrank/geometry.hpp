// cutrank: exact cutting-plane rank laboratory.
//
// Exact polyhedral conversions and hull operations on bounded rational
// polytopes:
//   - dd_convert_h_to_v: incremental double description (halfspace
//     insertion with combinatorial adjacency) seeded from the exact
//     bounding box.
//   - dd_convert_v_to_h: affine-hull reduction + polar duality; facets of
//     the full-dimensional reduction are vertices of the polar body.
//   - conv_membership / hull_of_union / intersect: LP-backed membership,
//     union hulls with extremality filtering, and irredundant row
//     intersection.
// Everything is exact; empty polytopes flow through as values.

#pragma once

#include <vector>

#include "cutrank/polytope.hpp"

namespace cutrank {

// Vertex set of a bounded H-polytope, lexicographically sorted. An empty
// (infeasible) input yields an empty vertex list, not an error. Throws
// UnboundedError for unbounded input and GuardError when the bounding box
// has more than 16 non-degenerate dimensions.
VPolytope dd_convert_h_to_v(const HPolytope& P);

// Vertex enumeration like dd_convert_h_to_v, but seeded from a caller
// supplied box already known to contain the feasible region, skipping the
// per-axis LP bounding pass. Returns an empty vertex list when the
// feasible region is empty.
VPolytope dd_convert_h_to_v_within(const HPolytope& P, const RatVector& lo,
                                   const RatVector& hi);

// Irredundant inequality description of conv(Q.vertices): one row per facet
// of the hull (relative to its affine span) plus one equality row per
// codimension of the span. Q must be nonempty (ContractError otherwise).
HPolytope dd_convert_v_to_h(const VPolytope& Q);

struct ConvCertificate {
  bool member = false;
  // Aligned with Q.vertices; nonnegative, sums to 1, reproduces x exactly.
  std::vector<Rat> multipliers;
};

// Is x a convex combination of Q's vertices? Exact LP feasibility in
// multiplier space; the certificate is returned when member.
ConvCertificate conv_membership(const RatVector& x, const VPolytope& Q);

// Canonical vertex description of conv(union of parts). Empty parts are
// allowed; all-empty yields the empty VPolytope.
VPolytope hull_of_union(const std::vector<VPolytope>& parts);

// Concatenates rows (normalized, exact duplicates collapsed keeping the
// first occurrence), then removes redundant rows sequentially: a row is
// redundant iff optimizing its left-hand side over the remaining rows stays
// within its rhs. An infeasible intersection yields the canonical empty
// polytope.
HPolytope intersect(const std::vector<HPolytope>& parts);

// The extreme points among `points`: p survives iff p is not a convex
// combination of the others. Order and duplicates are normalized away
// (lexicographic sort, exact dedupe) before filtering.
std::vector<RatVector> extreme_points(std::vector<RatVector> points);

}  // namespace cutrank
