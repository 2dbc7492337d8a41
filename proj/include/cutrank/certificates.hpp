// Half-integral certificate DAGs: red children follow roundings of small
// index sets, blue children are exact convex decompositions, and the
// minimum number of red edges on any root-to-leaf path lower-bounds how
// many closure rounds a family with the rounding property needs before it
// can cut the root label off.
//
// The builder materializes the quotient DAG (one node per (label, budget)
// pair) instead of the exponentially redundant tree; path-minimum red
// counts agree on the quotient. Construction is sequential, but node
// content depends only on (label, budget), so any evaluation schedule
// would produce the same DAG.
#ifndef CUTRANK_CERTIFICATES_HPP
#define CUTRANK_CERTIFICATES_HPP

#include <map>
#include <string>
#include <vector>

#include "cutrank/graph.hpp"
#include "cutrank/guards.hpp"
#include "cutrank/half_point.hpp"
#include "cutrank/polytope.hpp"

namespace cutrank {

enum class NodeKind { Root, Internal, Leaf };
enum class EdgeColor { Red, Blue };

struct CertEdge {
  int child = -1;
  EdgeColor color = EdgeColor::Red;
  // Red edges only: the rounded index set (sorted coordinates) and the
  // common value the entries were set to.
  std::vector<int> J;
  int a = 0;
};

struct CertNode {
  HalfIntegralPoint label;
  int ell = 0;  // remaining blue budget
  NodeKind kind = NodeKind::Leaf;
  std::vector<CertEdge> children;
};

// What the certificate certifies membership against: either the derived
// polytope of a graph's parity relaxation (with the fast combinatorial
// membership test) or an explicit inequality description.
struct CertReference {
  enum class Kind { Tseitin, Polytope };
  Kind kind = Kind::Polytope;
  Graph graph;         // Kind::Tseitin
  HPolytope polytope;  // Kind::Polytope
};

struct CertDAG {
  std::vector<CertNode> nodes;  // id = index
  int root = -1;
  CertReference reference;
  int t = 1;

  // Builder bookkeeping, not serialized: the vertex set behind each blue
  // expansion, and the budget-exhausting set at each leaf that would have
  // spent the final budget (its children are pruned, making the parent a
  // leaf while keeping every path's red count intact).
  std::map<int, std::vector<int>> blue_sets;
  std::map<int, std::vector<int>> terminal_sets;
};

struct VerifyFailure {
  int node = -1;
  std::string rule;
};

struct VerifyReport {
  bool valid = false;
  int min_red_count = 0;  // meaningful only when valid
  std::vector<VerifyFailure> failures;
};

// Builds the certificate DAG for the graph's parity relaxation. Root label
// all-half with budget |V|/2 (floored); a node expands red when every
// vertex subset within its budget has strictly more than (t+1)|U| crossing
// half-edges, and blue otherwise via the parity solutions over the chosen
// maximal low-expansion set's half-edges. Requires odd |V| and t >= 1;
// exceeding a guard (node count, subset search, blue fan-out) throws
// GuardError naming the bottleneck.
CertDAG build_certificate(const Graph& G, int t,
                          const Guards& guards = default_guards());

// Checks, per node: (a) label inside P; (b) red nodes carry a complete
// child set (both roundings of every nonempty J within the fractional
// support, |J| <= t) with correctly rounded labels and |E(label)| >= t;
// (c) blue nodes contain their label in the children's convex hull but not
// among the children; (d) the DAG is acyclic. Rule violations are
// reported, never thrown. min_red_count is the minimum number of red
// edges over all root-to-leaf paths.
VerifyReport verify_certificate(const CertDAG& C, const HPolytope& P, int t);

// Same rules with the membership test picked by the reference kind: the
// combinatorial test for graph references, inequality evaluation for
// explicit polytopes.
VerifyReport verify_certificate(const CertDAG& C);

// min_red_count after re-verifying; a failed verification is a
// ContractError naming the first failure. A valid certificate witnesses
// rank >= lower_bound(C) + 1 for any family with the t-rounding property.
int lower_bound(const CertDAG& C);

// The uniform all-red certificate for the corner-sliced cube: every node
// with more than t fractional entries gets the full red child set, nodes
// with 1..t fractional entries are leaves. Its minimum red count is
// ceil(n/t) - 1, certifying rank >= ceil(n/t). Requires 1 <= t <= n.
CertDAG cropped_cube_certificate(int n, int t,
                                 const Guards& guards = default_guards());

// DOT rendering: red/blue edges with J/a labels on red ones, node labels
// showing the fractional support.
std::string dot_export(const CertDAG& C);

}  // namespace cutrank

#endif  // CUTRANK_CERTIFICATES_HPP
