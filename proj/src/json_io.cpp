// cutrank: exact cutting-plane rank laboratory.
//
// JSON / DIMACS serialization. All rational numbers travel as "p/q" strings
// so files are exact and diff-friendly; dump_json fixes key order and
// indentation so equal objects serialize byte-identically.

#include "cutrank/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cutrank/errors.hpp"
#include "cutrank/rational.hpp"

namespace cutrank {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) {
    bad(std::string("expected an object carrying field \"") + key + "\"");
  }
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_number_integer()) {
    bad(std::string("field \"") + key + "\" must be an integer");
  }
  return f.get<int>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_string()) {
    bad(std::string("field \"") + key + "\" must be a string");
  }
  return f.get<std::string>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_array()) bad(std::string("field \"") + key + "\" must be an array");
  return f;
}

Rat rat_from_json(const Json& j, const char* where) {
  if (!j.is_string()) {
    bad(std::string(where) + ": rationals are \"p/q\" strings");
  }
  return parse_rational(j.get<std::string>());
}

Json ratvector_to_json(const RatVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    a.push_back(format_rational(v(i)));
  }
  return a;
}

RatVector ratvector_from_json(const Json& j, const char* where) {
  if (!j.is_array()) {
    bad(std::string(where) + ": expected an array of \"p/q\" strings");
  }
  RatVector v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index k = 0;
  for (const Json& e : j) v(k++) = rat_from_json(e, where);
  return v;
}

Rel rel_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "<=") return Rel::Le;
    if (s == ">=") return Rel::Ge;
    if (s == "=") return Rel::Eq;
  }
  bad("field \"rel\" must be one of \"<=\", \">=\", \"=\"");
}

}  // namespace

Json hpolytope_to_json(const HPolytope& P) {
  Json rows = Json::array();
  for (const LinearRow& row : P.rows) {
    rows.push_back(Json{{"coeffs", ratvector_to_json(row.coeffs)},
                        {"rel", rel_symbol(row.rel)},
                        {"rhs", format_rational(row.rhs)}});
  }
  return Json{{"dim", P.dim}, {"rows", std::move(rows)}};
}

HPolytope hpolytope_from_json(const Json& j) {
  HPolytope P;
  P.dim = int_field(j, "dim");
  for (const Json& r : array_field(j, "rows")) {
    LinearRow row;
    row.coeffs = ratvector_from_json(field(r, "coeffs"), "field \"coeffs\"");
    row.rel = rel_from_json(field(r, "rel"));
    row.rhs = rat_from_json(field(r, "rhs"), "field \"rhs\"");
    P.rows.push_back(std::move(row));
  }
  try {
    validate(P);
  } catch (const ContractError& e) {
    bad(e.what());
  }
  return P;
}

Json vpolytope_to_json(const VPolytope& Q) {
  Json verts = Json::array();
  for (const RatVector& v : Q.vertices) verts.push_back(ratvector_to_json(v));
  return Json{{"dim", Q.dim}, {"vertices", std::move(verts)}};
}

VPolytope vpolytope_from_json(const Json& j) {
  VPolytope Q;
  Q.dim = int_field(j, "dim");
  for (const Json& v : array_field(j, "vertices")) {
    Q.vertices.push_back(ratvector_from_json(v, "field \"vertices\""));
  }
  try {
    validate(Q);
  } catch (const ContractError& e) {
    bad(e.what());
  }
  return Q;
}

Json parity_to_json(const ParitySystem& S) {
  Json rows = Json::array();
  for (const BitVec& row : S.rows) {
    Json bits = Json::array();
    for (std::uint8_t b : row) bits.push_back(b ? 1 : 0);
    rows.push_back(std::move(bits));
  }
  Json rhs = Json::array();
  for (std::uint8_t b : S.rhs) rhs.push_back(b ? 1 : 0);
  return Json{{"rows", std::move(rows)}, {"rhs", std::move(rhs)}};
}

namespace {

// Reads one 0/1 entry of a parity row or right-hand side.
bool bit_from_json(const Json& j, const char* where) {
  if (j.is_number_integer()) {
    const int v = j.get<int>();
    if (v == 0) return false;
    if (v == 1) return true;
  }
  bad(std::string(where) + ": entries must be 0 or 1");
}

}  // namespace

ParitySystem parity_from_json(const Json& j) {
  const Json& rows = array_field(j, "rows");
  const Json& rhs = array_field(j, "rhs");
  if (rhs.size() != rows.size()) {
    bad("parity system: \"rhs\" length must equal the number of rows");
  }
  ParitySystem S;
  S.rhs.assign(rows.size(), 0);
  std::size_t r = 0;
  for (const Json& row : rows) {
    if (!row.is_array()) bad("parity system: each row must be a 0/1 array");
    if (r == 0) {
      S.nvars = static_cast<int>(row.size());
    } else if (row.size() != static_cast<std::size_t>(S.nvars)) {
      bad("parity system: rows must all have the same length");
    }
    BitVec bits;
    bits.reserve(row.size());
    for (const Json& e : row) {
      bits.push_back(bit_from_json(e, "parity row") ? 1 : 0);
    }
    S.rows.push_back(std::move(bits));
    S.rhs[r] = bit_from_json(rhs[r], "parity right-hand side") ? 1 : 0;
    ++r;
  }
  try {
    validate(S);
  } catch (const ContractError& e) {
    bad(e.what());
  }
  return S;
}

Json graph_to_json(const Graph& G) {
  Json edges = Json::array();
  for (const auto& [u, v] : G.edges) edges.push_back(Json::array({u, v}));
  return Json{{"n", G.n}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  Graph G;
  G.n = int_field(j, "n");
  for (const Json& e : array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      bad("graph edges must be [u, v] integer pairs");
    }
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    G.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  try {
    validate(G);
  } catch (const ContractError& e) {
    bad(e.what());
  }
  return G;
}

Graph graph_from_dimacs(const std::string& text) {
  Graph G;
  bool have_header = false;
  std::size_t declared_edges = 0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;  // blank line or comment
    const std::string at = " (line " + std::to_string(lineno) + ")";
    if (tag == "p") {
      std::string kind;
      int n = 0;
      long m = 0;
      if (have_header) bad("duplicate DIMACS \"p\" line" + at);
      if (!(ls >> kind >> n >> m) || kind != "edge") {
        bad("malformed DIMACS header; expected \"p edge n m\"" + at);
      }
      if (n < 1 || m < 0) bad("DIMACS header counts out of range" + at);
      have_header = true;
      G.n = n;
      declared_edges = static_cast<std::size_t>(m);
    } else if (tag == "e") {
      int u = 0;
      int v = 0;
      if (!have_header) bad("DIMACS \"e\" line before \"p\" header" + at);
      if (!(ls >> u >> v)) bad("malformed DIMACS edge line" + at);
      if (u < 1 || u > G.n || v < 1 || v > G.n) {
        bad("DIMACS edge endpoint out of range" + at);
      }
      --u;  // DIMACS vertices are 1-indexed
      --v;
      G.edges.emplace_back(std::min(u, v), std::max(u, v));
    } else {
      bad("unrecognized DIMACS line tag \"" + tag + "\"" + at);
    }
  }
  if (!have_header) bad("DIMACS input has no \"p edge n m\" header");
  if (G.edges.size() != declared_edges) {
    bad("DIMACS header declares " + std::to_string(declared_edges) +
        " edges but " + std::to_string(G.edges.size()) + " were given");
  }
  try {
    validate(G);
  } catch (const ContractError& e) {
    bad(e.what());
  }
  return G;
}

Graph read_graph_file(const std::string& path) {
  const std::string text = read_text_file(path);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return graph_from_json(parse_json_text(text));
  }
  return graph_from_dimacs(text);
}

Json half_point_to_json(const HalfIntegralPoint& x) {
  Json a = Json::array();
  for (HalfVal v : x.values) {
    switch (v) {
      case HalfVal::Zero: a.push_back("0"); break;
      case HalfVal::Half: a.push_back("1/2"); break;
      case HalfVal::One: a.push_back("1"); break;
    }
  }
  return a;
}

HalfIntegralPoint half_point_from_json(const Json& j) {
  if (!j.is_array()) {
    bad("half-integral point: expected an array of \"0\"|\"1/2\"|\"1\"");
  }
  HalfIntegralPoint x;
  for (const Json& e : j) {
    if (e.is_string()) {
      const std::string s = e.get<std::string>();
      if (s == "0") {
        x.values.push_back(HalfVal::Zero);
        continue;
      }
      if (s == "1/2") {
        x.values.push_back(HalfVal::Half);
        continue;
      }
      if (s == "1") {
        x.values.push_back(HalfVal::One);
        continue;
      }
    }
    bad("half-integral point entries must be \"0\", \"1/2\", or \"1\"");
  }
  return x;
}

namespace {

const char* mode_name(FamilyMode mode) {
  switch (mode) {
    case FamilyMode::Split: return "split";
    case FamilyMode::TBranch: return "tbranch";
    case FamilyMode::Lattice: return "lattice";
  }
  return "?";
}

}  // namespace

Json family_to_json(const FamilySpec& F) {
  return Json{{"mode", mode_name(F.mode)},
              {"t", F.t},
              {"coeff_bound", F.coeff_bound}};
}

FamilySpec family_from_json(const Json& j, int dimension) {
  FamilySpec F;
  const std::string mode = string_field(j, "mode");
  if (mode == "split") {
    F.mode = FamilyMode::Split;
  } else if (mode == "tbranch") {
    F.mode = FamilyMode::TBranch;
  } else if (mode == "lattice") {
    F.mode = FamilyMode::Lattice;
  } else {
    bad("field \"mode\" must be \"split\", \"tbranch\", or \"lattice\"");
  }
  F.t = int_field(j, "t");
  F.coeff_bound = int_field(j, "coeff_bound");
  F.dimension = dimension;
  try {
    validate(F);
  } catch (const ContractError& e) {
    bad(e.what());
  }
  return F;
}

Json certificate_to_json(const CertDAG& C) {
  Json nodes = Json::array();
  for (std::size_t id = 0; id < C.nodes.size(); ++id) {
    const CertNode& node = C.nodes[id];
    Json children = Json::array();
    for (const CertEdge& e : node.children) {
      Json child{{"id", e.child},
                 {"color", e.color == EdgeColor::Red ? "red" : "blue"}};
      if (e.color == EdgeColor::Red) {
        child["J"] = e.J;
        child["a"] = e.a;
      }
      children.push_back(std::move(child));
    }
    nodes.push_back(Json{{"id", static_cast<int>(id)},
                         {"label", half_point_to_json(node.label)},
                         {"ell", node.ell},
                         {"children", std::move(children)}});
  }
  Json reference;
  if (C.reference.kind == CertReference::Kind::Tseitin) {
    reference = Json{{"kind", "tseitin"},
                     {"graph", graph_to_json(C.reference.graph)}};
  } else {
    reference = Json{{"kind", "hpolytope"},
                     {"polytope", hpolytope_to_json(C.reference.polytope)}};
  }
  return Json{{"t", C.t},
              {"reference", std::move(reference)},
              {"nodes", std::move(nodes)},
              {"root", C.root}};
}

CertDAG certificate_from_json(const Json& j) {
  CertDAG C;
  C.t = int_field(j, "t");
  C.root = int_field(j, "root");

  const Json& reference = field(j, "reference");
  const std::string kind = string_field(reference, "kind");
  if (kind == "tseitin") {
    C.reference.kind = CertReference::Kind::Tseitin;
    C.reference.graph = graph_from_json(field(reference, "graph"));
  } else if (kind == "hpolytope") {
    C.reference.kind = CertReference::Kind::Polytope;
    C.reference.polytope = hpolytope_from_json(field(reference, "polytope"));
  } else {
    bad("field \"kind\" must be \"tseitin\" or \"hpolytope\"");
  }

  // Node ids must be exactly 0..N-1; the array itself may list them in any
  // order. Child ids are *not* range-checked here — the verifier reports
  // dangling references as rule failures rather than parse errors.
  const Json& nodes = array_field(j, "nodes");
  const std::size_t count = nodes.size();
  C.nodes.resize(count);
  std::vector<bool> seen(count, false);
  for (const Json& nj : nodes) {
    const int id = int_field(nj, "id");
    if (id < 0 || static_cast<std::size_t>(id) >= count) {
      bad("node id " + std::to_string(id) + " outside 0.." +
          std::to_string(count == 0 ? 0 : count - 1));
    }
    if (seen[static_cast<std::size_t>(id)]) {
      bad("duplicate node id " + std::to_string(id));
    }
    seen[static_cast<std::size_t>(id)] = true;
    CertNode node;
    node.label = half_point_from_json(field(nj, "label"));
    node.ell = int_field(nj, "ell");
    for (const Json& cj : array_field(nj, "children")) {
      CertEdge edge;
      edge.child = int_field(cj, "id");
      const std::string color = string_field(cj, "color");
      if (color == "red") {
        edge.color = EdgeColor::Red;
        for (const Json& idx : array_field(cj, "J")) {
          if (!idx.is_number_integer()) {
            bad("field \"J\" must be an array of integers");
          }
          edge.J.push_back(idx.get<int>());
        }
        edge.a = int_field(cj, "a");
      } else if (color == "blue") {
        edge.color = EdgeColor::Blue;
      } else {
        bad("field \"color\" must be \"red\" or \"blue\"");
      }
      node.children.push_back(std::move(edge));
    }
    C.nodes[static_cast<std::size_t>(id)] = std::move(node);
  }

  for (std::size_t id = 0; id < count; ++id) {
    if (!seen[id]) bad("missing node id " + std::to_string(id));
    CertNode& node = C.nodes[id];
    if (static_cast<int>(id) == C.root) {
      node.kind = NodeKind::Root;
    } else if (node.children.empty()) {
      node.kind = NodeKind::Leaf;
    } else {
      node.kind = NodeKind::Internal;
    }
  }
  return C;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("read failed: " + path);
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw Error("write failed: " + path);
}

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) bad("invalid JSON");
  return j;
}

Json read_json_file(const std::string& path) {
  return parse_json_text(read_text_file(path));
}

std::string dump_json(const Json& j) {
  // nlohmann::json objects keep keys sorted, so this is byte-deterministic.
  return j.dump(2) + "\n";
}

}  // namespace cutrank
