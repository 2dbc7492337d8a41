#include "cutrank/certificates.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

#include "cutrank/constructions.hpp"
#include "cutrank/errors.hpp"
#include "cutrank/geometry.hpp"
#include "cutrank/parity.hpp"

namespace cutrank {

namespace {

// Lexicographic index combinations of {0,..,n-1} of size k; emit returns
// false to stop early.
template <typename Emit>
void combinations(std::size_t n, std::size_t k, Emit emit) {
  if (k == 0 || k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!emit(idx)) return;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

std::string set_to_string(const std::vector<int>& S) {
  std::string out = "{";
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(S[i]);
  }
  out += "}";
  return out;
}

// Shared DAG-building machinery: nodes interned by (label, budget), ids
// assigned in creation order, pending ids processed in that same order.
struct DagBuilder {
  CertDAG dag;
  const Guards& guards;
  std::map<std::pair<std::vector<HalfVal>, int>, int> memo;

  explicit DagBuilder(const Guards& g) : guards(g) {}

  int intern(const HalfIntegralPoint& label, int ell) {
    auto key = std::make_pair(label.values, ell);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (dag.nodes.size() >= guards.max_nodes) {
      throw GuardError("certificate build: node count exceeds cap " +
                       std::to_string(guards.max_nodes));
    }
    const int id = static_cast<int>(dag.nodes.size());
    CertNode node;
    node.label = label;
    node.ell = ell;
    dag.nodes.push_back(std::move(node));
    memo.emplace(std::move(key), id);
    return id;
  }

  void finish_kinds() {
    for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
      CertNode& node = dag.nodes[i];
      if (static_cast<int>(i) == dag.root) {
        node.kind = NodeKind::Root;
      } else if (node.children.empty()) {
        node.kind = NodeKind::Leaf;
      } else {
        node.kind = NodeKind::Internal;
      }
    }
  }
};

// The inclusion-maximal low-expansion subset within the budget: sizes are
// scanned downward, so the first hit is a violator of maximum size (hence
// inclusion-maximal: any strict violating superset would be larger), and
// lexicographic combination order makes it the lexicographically smallest
// of that size. Returns positions into `vertices`.
std::optional<std::vector<std::size_t>> maximal_violator(
    std::size_t vertex_count,
    const std::vector<std::pair<std::size_t, std::size_t>>& half_edges,
    int ell, int t, const Guards& guards) {
  std::uint64_t examined = 0;
  const std::size_t smax =
      std::min<std::size_t>(static_cast<std::size_t>(ell), vertex_count);
  std::vector<char> in_U(vertex_count, 0);
  std::optional<std::vector<std::size_t>> best;
  for (std::size_t s = smax; s >= 1 && !best; --s) {
    combinations(vertex_count, s, [&](const std::vector<std::size_t>& idx) {
      if (++examined > guards.max_subset_search) {
        throw GuardError(
            "build_certificate: violator subset search exceeds cap " +
            std::to_string(guards.max_subset_search));
      }
      std::fill(in_U.begin(), in_U.end(), 0);
      for (std::size_t p : idx) in_U[p] = 1;
      std::uint64_t cut = 0;
      for (const auto& [pu, pv] : half_edges) {
        if (in_U[pu] != in_U[pv]) ++cut;
      }
      if (cut <= static_cast<std::uint64_t>(t + 1) * s) {
        best = idx;
        return false;  // first hit at the largest size wins
      }
      return true;
    });
  }
  return best;
}

}  // namespace

CertDAG build_certificate(const Graph& G, int t, const Guards& guards) {
  validate(G);
  if (t < 1) throw ContractError("build_certificate: t must be positive");
  if (G.n % 2 == 0) {
    throw ContractError("build_certificate: vertex count " +
                        std::to_string(G.n) + " must be odd");
  }
  const auto incident = incident_edges(G);
  for (int u = 0; u < G.n; ++u) {
    if (incident[static_cast<std::size_t>(u)].empty()) {
      throw ContractError("build_certificate: isolated vertex " +
                          std::to_string(u));
    }
  }

  DagBuilder b(guards);
  b.dag.t = t;
  b.dag.reference.kind = CertReference::Kind::Tseitin;
  b.dag.reference.graph = G;
  b.dag.root = b.intern(all_half(G.edge_count()), G.n / 2);

  for (int id = 0; id < static_cast<int>(b.dag.nodes.size()); ++id) {
    // Copy label and budget: interning children may grow the node store.
    const HalfIntegralPoint x = b.dag.nodes[static_cast<std::size_t>(id)].label;
    const int ell = b.dag.nodes[static_cast<std::size_t>(id)].ell;
    const std::vector<int> E = x.fractional_support();
    if (ell == 0 || E.empty()) continue;  // leaf

    const std::vector<int> Vx = half_edge_vertices(G, x);
    std::vector<int> position(static_cast<std::size_t>(G.n), -1);
    for (std::size_t p = 0; p < Vx.size(); ++p) {
      position[static_cast<std::size_t>(Vx[p])] = static_cast<int>(p);
    }
    std::vector<std::pair<std::size_t, std::size_t>> half_edges;
    for (int e : E) {
      const auto& [u, v] = G.edges[static_cast<std::size_t>(e)];
      half_edges.emplace_back(
          static_cast<std::size_t>(position[static_cast<std::size_t>(u)]),
          static_cast<std::size_t>(position[static_cast<std::size_t>(v)]));
    }

    const auto violator =
        maximal_violator(Vx.size(), half_edges, ell, t, guards);
    if (!violator) {
      // Red expansion: both roundings of every nonempty index set within
      // the fractional support, up to size t, budget unchanged.
      std::vector<CertEdge> edges;
      const std::size_t jmax =
          std::min<std::size_t>(static_cast<std::size_t>(t), E.size());
      std::uint64_t examined = 0;
      for (std::size_t s = 1; s <= jmax; ++s) {
        combinations(E.size(), s, [&](const std::vector<std::size_t>& idx) {
          if (++examined > guards.max_subset_search) {
            throw GuardError(
                "build_certificate: red child enumeration exceeds cap " +
                std::to_string(guards.max_subset_search));
          }
          std::vector<int> J;
          for (std::size_t p : idx) J.push_back(E[p]);
          for (int a = 0; a <= 1; ++a) {
            CertEdge edge;
            edge.child = b.intern(round_point(x, J, a), ell);
            edge.color = EdgeColor::Red;
            edge.J = J;
            edge.a = a;
            edges.push_back(std::move(edge));
          }
          return true;
        });
      }
      b.dag.nodes[static_cast<std::size_t>(id)].children = std::move(edges);
      continue;
    }

    std::vector<int> U;
    for (std::size_t p : *violator) U.push_back(Vx[p]);
    if (static_cast<int>(U.size()) == ell) {
      // Spending the whole budget here would not keep the children inside
      // the polytope; prune them and let this node be a leaf. Every path's
      // red count is unaffected. The set is recorded for the accounting
      // checks.
      b.dag.terminal_sets[id] = U;
      continue;
    }

    // Blue expansion: all parity solutions over the half-edges incident to
    // U, which exist and average back to x because U is maximal.
    std::vector<char> in_U(static_cast<std::size_t>(G.n), 0);
    for (int u : U) in_U[static_cast<std::size_t>(u)] = 1;
    std::vector<int> touched;  // absolute edge indices, ascending
    for (int e : E) {
      const auto& [u, v] = G.edges[static_cast<std::size_t>(e)];
      if (in_U[static_cast<std::size_t>(u)] ||
          in_U[static_cast<std::size_t>(v)]) {
        touched.push_back(e);
      }
    }
    ParitySystem S;
    S.nvars = static_cast<int>(touched.size());
    for (int u : U) {
      BitVec row(touched.size(), 0);
      int ones = 0;
      for (int e : incident[static_cast<std::size_t>(u)]) {
        if (x.values[static_cast<std::size_t>(e)] == HalfVal::One) ++ones;
      }
      for (std::size_t j = 0; j < touched.size(); ++j) {
        const auto& [a, c] = G.edges[static_cast<std::size_t>(touched[j])];
        if (a == u || c == u) row[j] = 1;
      }
      S.rows.push_back(std::move(row));
      S.rhs.push_back(static_cast<std::uint8_t>((1 + ones) & 1));
    }
    const std::vector<BitVec> sols =
        enumerate_parity_solutions(S, guards.max_blue_children);
    if (sols.empty()) {
      throw Error(
          "build_certificate: parity system for the blue children of node " +
          std::to_string(id) +
          " is infeasible; the maximality invariant is broken");
    }
    std::vector<CertEdge> edges;
    for (const BitVec& sol : sols) {
      HalfIntegralPoint child = x;
      for (std::size_t j = 0; j < touched.size(); ++j) {
        child.values[static_cast<std::size_t>(touched[j])] =
            sol[j] ? HalfVal::One : HalfVal::Zero;
      }
      CertEdge edge;
      edge.child = b.intern(child, ell - static_cast<int>(U.size()));
      edge.color = EdgeColor::Blue;
      edges.push_back(std::move(edge));
    }
    b.dag.nodes[static_cast<std::size_t>(id)].children = std::move(edges);
    b.dag.blue_sets[id] = U;
  }

  b.finish_kinds();
  return b.dag;
}

namespace {

VerifyReport verify_impl(
    const CertDAG& C, int t,
    const std::function<bool(const HalfIntegralPoint&)>& member) {
  if (t < 1) throw ContractError("verify_certificate: t must be positive");
  VerifyReport rep;
  const int count = static_cast<int>(C.nodes.size());
  const auto fail = [&rep](int node, std::string rule) {
    rep.failures.push_back(VerifyFailure{node, std::move(rule)});
  };
  if (C.root < 0 || C.root >= count) {
    fail(-1, "root id out of range");
    rep.valid = false;
    return rep;
  }

  for (int id = 0; id < count; ++id) {
    const CertNode& node = C.nodes[static_cast<std::size_t>(id)];
    if (!member(node.label)) {
      fail(id, "label outside the reference polytope");
    }
    bool ids_ok = true;
    int reds = 0;
    int blues = 0;
    for (const CertEdge& e : node.children) {
      if (e.child < 0 || e.child >= count) {
        fail(id, "child id out of range");
        ids_ok = false;
      }
      if (e.color == EdgeColor::Red) {
        ++reds;
      } else {
        ++blues;
      }
    }
    if (!ids_ok) continue;
    if (reds > 0 && blues > 0) fail(id, "mixed red and blue children");

    if (reds > 0 && blues == 0) {
      const std::vector<int> E = node.label.fractional_support();
      if (static_cast<int>(E.size()) < t) {
        fail(id, "red node with fractional support smaller than t");
      }
      std::map<std::pair<std::vector<int>, int>, int> seen;
      for (const CertEdge& e : node.children) {
        const bool sorted_unique =
            std::is_sorted(e.J.begin(), e.J.end()) &&
            std::adjacent_find(e.J.begin(), e.J.end()) == e.J.end();
        const bool inside = std::all_of(e.J.begin(), e.J.end(), [&](int j) {
          return std::binary_search(E.begin(), E.end(), j);
        });
        if (e.J.empty() || static_cast<int>(e.J.size()) > t ||
            !sorted_unique || !inside) {
          fail(id, "red child with malformed index set " + set_to_string(e.J));
          continue;
        }
        if (e.a != 0 && e.a != 1) {
          fail(id, "red child with rounding value outside {0,1}");
          continue;
        }
        const auto key = std::make_pair(e.J, e.a);
        if (seen.count(key)) {
          fail(id, "duplicate red child (J=" + set_to_string(e.J) +
                       ", a=" + std::to_string(e.a) + ")");
          continue;
        }
        seen.emplace(key, e.child);
        if (C.nodes[static_cast<std::size_t>(e.child)].label !=
            round_point(node.label, e.J, e.a)) {
          fail(id, "red child label does not match rounding (J=" +
                       set_to_string(e.J) + ", a=" + std::to_string(e.a) + ")");
        }
      }
      // Completeness: both roundings of every nonempty J up to size t.
      const std::size_t jmax =
          std::min<std::size_t>(static_cast<std::size_t>(t), E.size());
      for (std::size_t s = 1; s <= jmax; ++s) {
        combinations(E.size(), s, [&](const std::vector<std::size_t>& idx) {
          std::vector<int> J;
          for (std::size_t p : idx) J.push_back(E[p]);
          for (int a = 0; a <= 1; ++a) {
            if (!seen.count(std::make_pair(J, a))) {
              fail(id, "missing red child (J=" + set_to_string(J) +
                           ", a=" + std::to_string(a) + ")");
            }
          }
          return true;
        });
      }
    }

    if (blues > 0 && reds == 0) {
      VPolytope Y;
      Y.dim = node.label.dim();
      bool self_listed = false;
      for (const CertEdge& e : node.children) {
        const CertNode& child = C.nodes[static_cast<std::size_t>(e.child)];
        if (child.label == node.label) self_listed = true;
        Y.vertices.push_back(child.label.to_ratvector());
      }
      if (self_listed) {
        fail(id, "blue node label among its children");
      } else if (!conv_membership(node.label.to_ratvector(), Y).member) {
        fail(id, "blue node label outside the children's hull");
      }
    }
  }

  // Acyclicity by Kahn's algorithm; the topological order doubles as the
  // evaluation order for the path DP.
  std::vector<int> indegree(static_cast<std::size_t>(count), 0);
  for (const CertNode& node : C.nodes) {
    for (const CertEdge& e : node.children) {
      ++indegree[static_cast<std::size_t>(e.child)];
    }
  }
  std::vector<int> order;
  for (int id = 0; id < count; ++id) {
    if (indegree[static_cast<std::size_t>(id)] == 0) order.push_back(id);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    const CertNode& node = C.nodes[static_cast<std::size_t>(order[head])];
    for (const CertEdge& e : node.children) {
      if (--indegree[static_cast<std::size_t>(e.child)] == 0) {
        order.push_back(e.child);
      }
    }
  }
  bool acyclic = static_cast<int>(order.size()) == count;
  if (!acyclic) {
    for (int id = 0; id < count; ++id) {
      if (indegree[static_cast<std::size_t>(id)] > 0) {
        fail(id, "on a cycle");
        break;
      }
    }
  }

  // Minimum red edges over all root-to-leaf paths: leaves cost 0, red
  // edges cost 1, blue edges cost 0; children are final before parents in
  // reverse topological order.
  if (acyclic) {
    std::vector<int> value(static_cast<std::size_t>(count), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const CertNode& node = C.nodes[static_cast<std::size_t>(*it)];
      if (node.children.empty()) continue;
      int best = INT_MAX;
      for (const CertEdge& e : node.children) {
        const int step = value[static_cast<std::size_t>(e.child)] +
                         (e.color == EdgeColor::Red ? 1 : 0);
        best = std::min(best, step);
      }
      value[static_cast<std::size_t>(*it)] = best;
    }
    rep.min_red_count = value[static_cast<std::size_t>(C.root)];
  }
  rep.valid = rep.failures.empty();
  return rep;
}

}  // namespace

VerifyReport verify_certificate(const CertDAG& C, const HPolytope& P, int t) {
  validate(P);
  for (const CertNode& node : C.nodes) {
    if (node.label.dim() != P.dim) {
      throw ContractError("verify_certificate: label dimension " +
                          std::to_string(node.label.dim()) +
                          " != polytope dimension " + std::to_string(P.dim));
    }
  }
  return verify_impl(C, t, [&P](const HalfIntegralPoint& x) {
    return hrep_contains(P, x.to_ratvector());
  });
}

VerifyReport verify_certificate(const CertDAG& C) {
  if (C.reference.kind == CertReference::Kind::Tseitin) {
    const Graph& G = C.reference.graph;
    validate(G);
    for (const CertNode& node : C.nodes) {
      if (node.label.dim() != G.edge_count()) {
        throw ContractError(
            "verify_certificate: label dimension does not match the "
            "reference graph's edge count");
      }
    }
    return verify_impl(C, C.t, [&G](const HalfIntegralPoint& x) {
      return tseitin_membership(G, x);
    });
  }
  return verify_certificate(C, C.reference.polytope, C.t);
}

int lower_bound(const CertDAG& C) {
  const VerifyReport rep = verify_certificate(C);
  if (!rep.valid) {
    const VerifyFailure& first = rep.failures.front();
    throw ContractError("lower_bound: certificate is invalid (node " +
                        std::to_string(first.node) + ": " + first.rule + ")");
  }
  return rep.min_red_count;
}

CertDAG cropped_cube_certificate(int n, int t, const Guards& guards) {
  if (n < 1) {
    throw ContractError("cropped_cube_certificate: n must be positive");
  }
  if (t < 1 || t > n) {
    throw ContractError("cropped_cube_certificate: requires 1 <= t <= n");
  }

  DagBuilder b(guards);
  b.dag.t = t;
  b.dag.reference.kind = CertReference::Kind::Polytope;
  b.dag.reference.polytope = cropped_cube(n);

  const auto budget = [t](std::size_t support) {
    return static_cast<int>((support + static_cast<std::size_t>(t) - 1) /
                            static_cast<std::size_t>(t)) -
           1;
  };
  b.dag.root = b.intern(all_half(n), budget(static_cast<std::size_t>(n)));

  for (int id = 0; id < static_cast<int>(b.dag.nodes.size()); ++id) {
    const HalfIntegralPoint x = b.dag.nodes[static_cast<std::size_t>(id)].label;
    const std::vector<int> E = x.fractional_support();
    if (static_cast<int>(E.size()) <= t) continue;  // leaf, still fractional

    std::vector<CertEdge> edges;
    const std::size_t jmax = static_cast<std::size_t>(t);
    for (std::size_t s = 1; s <= jmax; ++s) {
      combinations(E.size(), s, [&](const std::vector<std::size_t>& idx) {
        std::vector<int> J;
        for (std::size_t p : idx) J.push_back(E[p]);
        for (int a = 0; a <= 1; ++a) {
          CertEdge edge;
          const HalfIntegralPoint child = round_point(x, J, a);
          edge.child = b.intern(
              child, budget(child.fractional_support().size()));
          edge.color = EdgeColor::Red;
          edge.J = J;
          edge.a = a;
          edges.push_back(std::move(edge));
        }
        return true;
      });
    }
    b.dag.nodes[static_cast<std::size_t>(id)].children = std::move(edges);
  }

  b.finish_kinds();
  return b.dag;
}

std::string dot_export(const CertDAG& C) {
  std::ostringstream os;
  os << "digraph certificate {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t id = 0; id < C.nodes.size(); ++id) {
    const CertNode& node = C.nodes[id];
    std::string values;
    for (HalfVal v : node.label.values) {
      values += v == HalfVal::Zero ? '0' : (v == HalfVal::One ? '1' : 'h');
    }
    os << "  n" << id << " [label=\"x=" << values
       << "\\nE=" << set_to_string(node.label.fractional_support())
       << "\\nell=" << node.ell << "\"";
    if (static_cast<int>(id) == C.root) os << ", penwidth=2";
    os << "];\n";
  }
  for (std::size_t id = 0; id < C.nodes.size(); ++id) {
    for (const CertEdge& e : C.nodes[id].children) {
      os << "  n" << id << " -> n" << e.child;
      if (e.color == EdgeColor::Red) {
        os << " [color=red, label=\"J=" << set_to_string(e.J)
           << " a=" << e.a << "\"];\n";
      } else {
        os << " [color=blue];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cutrank
