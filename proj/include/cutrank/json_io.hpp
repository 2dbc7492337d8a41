// Serialization: JSON forms for every artifact type (rationals as exact
// "p/q" strings, never decimals), a DIMACS-style edge-list reader, and the
// DOT-ready certificate schema. Readers throw ParseError on malformed
// input; writers emit canonical, byte-reproducible documents (sorted keys,
// fixed indentation).
#ifndef CUTRANK_JSON_IO_HPP
#define CUTRANK_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "cutrank/certificates.hpp"
#include "cutrank/disjunctions.hpp"
#include "cutrank/graph.hpp"
#include "cutrank/half_point.hpp"
#include "cutrank/parity.hpp"
#include "cutrank/polytope.hpp"

namespace cutrank {

using Json = nlohmann::json;

// {"dim": int, "rows": [{"coeffs": ["p/q",...], "rel": "<="|">="|"=",
//  "rhs": "p/q"}, ...]}
Json hpolytope_to_json(const HPolytope& P);
HPolytope hpolytope_from_json(const Json& j);

// {"dim": int, "vertices": [["p/q",...], ...]}
Json vpolytope_to_json(const VPolytope& Q);
VPolytope vpolytope_from_json(const Json& j);

// {"rows": [[0,1,...], ...], "rhs": [0,1,...]}
Json parity_to_json(const ParitySystem& S);
ParitySystem parity_from_json(const Json& j);

// {"n": int, "edges": [[u,v], ...]}
Json graph_to_json(const Graph& G);
Graph graph_from_json(const Json& j);

// DIMACS-like edge list: "c" comments, one "p edge <n> <m>" header,
// "e <u> <v>" lines with 1-indexed endpoints.
Graph graph_from_dimacs(const std::string& text);

// Reads either format, sniffing JSON by a leading '{'.
Graph read_graph_file(const std::string& path);

// ["0"|"1/2"|"1", ...]
Json half_point_to_json(const HalfIntegralPoint& x);
HalfIntegralPoint half_point_from_json(const Json& j);

// {"mode": "split"|"tbranch"|"lattice", "t": int, "coeff_bound": int}.
// The dimension is contextual (it comes from the instance), so the reader
// takes it as a parameter.
Json family_to_json(const FamilySpec& F);
FamilySpec family_from_json(const Json& j, int dimension);

// {"t": int, "reference": {"kind": "tseitin", "graph": {...}} |
//  {"kind": "hpolytope", "polytope": {...}},
//  "nodes": [{"id": int, "label": [...], "ell": int,
//             "children": [{"id": int, "color": "red"|"blue",
//                           "J": [int,...] (red), "a": 0|1 (red)}]}],
//  "root": int}
Json certificate_to_json(const CertDAG& C);
CertDAG certificate_from_json(const Json& j);

// File plumbing used by the command-line front end.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
Json parse_json_text(const std::string& text);  // ParseError on bad input
Json read_json_file(const std::string& path);

// Canonical rendering: sorted keys (the object representation is ordered),
// two-space indentation, trailing newline.
std::string dump_json(const Json& j);

}  // namespace cutrank

#endif  // CUTRANK_JSON_IO_HPP
