// cutrank command-line front end.
//
// Subcommands: gen-graph, tseitin, cropped-cube, expansion, closure, rank,
// certify, verify. All numeric output is exact rational ("p/q"); artifacts
// go to --out files or standard output, logs go to standard error, and
// identical inputs produce byte-identical outputs.
//
// Exit codes: 0 success (rank: bracket agreement; verify: certificate
// valid), 2 rank bracket open, 3 malformed input (files or flag usage),
// 1 any other error (guard limits, contract violations, invalid
// certificate).
//
// Option precedence: built-in defaults < CUTRANK_GUARD_* environment
// < --config JSON < command-line flags.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutrank/certificates.hpp"
#include "cutrank/closures.hpp"
#include "cutrank/constructions.hpp"
#include "cutrank/disjunctions.hpp"
#include "cutrank/errors.hpp"
#include "cutrank/geometry.hpp"
#include "cutrank/graph.hpp"
#include "cutrank/guards.hpp"
#include "cutrank/json_io.hpp"
#include "cutrank/polytope.hpp"
#include "cutrank/rational.hpp"

namespace {

using namespace cutrank;

// ---------------------------------------------------------------------------
// Config file support. A config JSON object may carry "seed", "t",
// "coeff_bound", "mode", "max_rounds", "format", and a "guards" object with
// any of the Guards fields. Flags given on the command line win.

Guards cfg_guards(const Json& cfg);

Json load_config(const std::string& path) {
  if (path.empty()) return Json();
  const Json j = read_json_file(path);
  if (!j.is_object()) throw ParseError("config file must hold a JSON object");
  static const char* known[] = {"seed",       "t",      "coeff_bound", "mode",
                                "max_rounds", "format", "guards"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ParseError("unknown config key \"" + key + "\"");
  }
  cfg_guards(j);  // reject malformed guard entries up front
  return j;
}

int cfg_int(const Json& cfg, const char* key, int fallback) {
  if (!cfg.is_object() || !cfg.contains(key)) return fallback;
  const Json& v = cfg[key];
  if (!v.is_number_integer()) {
    throw ParseError(std::string("config key \"") + key +
                     "\" must be an integer");
  }
  return v.get<int>();
}

std::uint64_t cfg_u64(const Json& cfg, const char* key,
                      std::uint64_t fallback) {
  if (!cfg.is_object() || !cfg.contains(key)) return fallback;
  const Json& v = cfg[key];
  if (!v.is_number_unsigned() && !v.is_number_integer()) {
    throw ParseError(std::string("config key \"") + key +
                     "\" must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::string cfg_str(const Json& cfg, const char* key,
                    const std::string& fallback) {
  if (!cfg.is_object() || !cfg.contains(key)) return fallback;
  const Json& v = cfg[key];
  if (!v.is_string()) {
    throw ParseError(std::string("config key \"") + key +
                     "\" must be a string");
  }
  return v.get<std::string>();
}

// Defaults-plus-environment guards, then config overrides.
Guards cfg_guards(const Json& cfg) {
  Guards g = default_guards();
  if (!cfg.is_object() || !cfg.contains("guards")) return g;
  const Json& gj = cfg["guards"];
  if (!gj.is_object()) throw ParseError("config key \"guards\" must be an object");
  for (const auto& [key, value] : gj.items()) {
    if (!value.is_number_unsigned() && !value.is_number_integer()) {
      throw ParseError("config guard \"" + key + "\" must be an integer");
    }
    const std::uint64_t v = value.get<std::uint64_t>();
    if (key == "max_family") {
      g.max_family = v;
    } else if (key == "max_nodes") {
      g.max_nodes = v;
    } else if (key == "max_level_combos") {
      g.max_level_combos = v;
    } else if (key == "max_subset_search") {
      g.max_subset_search = v;
    } else if (key == "max_blue_children") {
      g.max_blue_children = v;
    } else {
      throw ParseError("unknown config guard \"" + key + "\"");
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Shared helpers.

void emit_artifact(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  write_text_file(out_path, text);
  std::cerr << "wrote " << out_path << "\n";
}

FamilyMode parse_mode(const std::string& mode) {
  if (mode == "split") return FamilyMode::Split;
  if (mode == "tbranch") return FamilyMode::TBranch;
  if (mode == "lattice") return FamilyMode::Lattice;
  throw ParseError("--mode must be split, tbranch, or lattice (got \"" +
                   mode + "\")");
}

FamilySpec make_family(const std::string& mode, int t, int coeff_bound,
                       int dimension) {
  FamilySpec F;
  F.mode = parse_mode(mode);
  if (F.mode == FamilyMode::Split && t != 1) {
    throw ParseError("split mode fixes t = 1; use tbranch or lattice for t > 1");
  }
  F.t = t;
  F.coeff_bound = coeff_bound;
  F.dimension = dimension;
  try {
    validate(F);
  } catch (const ContractError& e) {
    throw ParseError(e.what());
  }
  return F;
}

std::string format_set(const std::vector<int>& S) {
  std::string s = "{";
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(S[i]);
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Instance selection for closure/rank: exactly one of --in (H-rep JSON),
// --tseitin (graph file), --cropped-cube N.

struct InstanceFlags {
  std::string in_path;
  std::string tseitin_path;
  int cropped_n = 0;
  CLI::Option* in_opt = nullptr;
  CLI::Option* tseitin_opt = nullptr;
  CLI::Option* cropped_opt = nullptr;

  void add_to(CLI::App* cmd) {
    in_opt = cmd->add_option("--in", in_path,
                             "polytope file (H-representation JSON)");
    tseitin_opt = cmd->add_option(
        "--tseitin", tseitin_path,
        "graph file (JSON or DIMACS); uses its Tseitin polytope");
    cropped_opt = cmd->add_option("--cropped-cube", cropped_n,
                                  "cropped n-cube instance");
  }
};

struct Instance {
  enum class Kind { Generic, Tseitin, CroppedCube };
  Kind kind = Kind::Generic;
  HPolytope P;
  Graph graph;  // Kind::Tseitin
  int n = 0;    // Kind::CroppedCube
};

Instance load_instance(const InstanceFlags& f) {
  const int given = (f.in_opt->count() > 0 ? 1 : 0) +
                    (f.tseitin_opt->count() > 0 ? 1 : 0) +
                    (f.cropped_opt->count() > 0 ? 1 : 0);
  if (given != 1) {
    throw ParseError(
        "exactly one of --in, --tseitin, --cropped-cube is required");
  }
  Instance inst;
  if (f.in_opt->count() > 0) {
    inst.kind = Instance::Kind::Generic;
    inst.P = hpolytope_from_json(read_json_file(f.in_path));
  } else if (f.tseitin_opt->count() > 0) {
    inst.kind = Instance::Kind::Tseitin;
    inst.graph = read_graph_file(f.tseitin_path);
    inst.P = tseitin_polytope(inst.graph);
  } else {
    inst.kind = Instance::Kind::CroppedCube;
    inst.n = f.cropped_n;
    inst.P = cropped_cube(inst.n);
  }
  return inst;
}

// ---------------------------------------------------------------------------
// gen-graph

struct GenGraphCmd {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string config;
  CLI::Option* seed_opt = nullptr;

  int run() {
    const Json cfg = load_config(config);
    const std::uint64_t use_seed =
        seed_opt->count() > 0 ? seed : cfg_u64(cfg, "seed", 1);
    if (n < 1 || d < 1 || (static_cast<long>(n) * d) % 2 != 0) {
      throw ParseError("gen-graph: need n >= 1, d >= 1, and n*d even");
    }
    const Graph G = random_regular_graph(n, d, use_seed);
    std::cerr << "gen-graph: n=" << G.n << " d=" << d
              << " edges=" << G.edge_count() << " seed=" << use_seed << "\n";
    emit_artifact(dump_json(graph_to_json(G)), out);
    return 0;
  }
};

// ---------------------------------------------------------------------------
// tseitin / cropped-cube: emit instance polytopes.

struct TseitinCmd {
  std::string graph_path;
  std::string out;
  std::string config;

  int run() {
    const Graph G = read_graph_file(graph_path);
    const HPolytope P = tseitin_polytope(G);
    std::cerr << "tseitin: n=" << G.n << " edges=" << G.edge_count()
              << " rows=" << P.rows.size() << "\n";
    emit_artifact(dump_json(hpolytope_to_json(P)), out);
    return 0;
  }
};

struct CroppedCubeCmd {
  int n = 0;
  std::string out;
  std::string config;

  int run() {
    const HPolytope P = cropped_cube(n);
    std::cerr << "cropped-cube: n=" << n << " rows=" << P.rows.size() << "\n";
    emit_artifact(dump_json(hpolytope_to_json(P)), out);
    return 0;
  }
};

// ---------------------------------------------------------------------------
// expansion: exact edge expansion plus the certificate-size bound
// ceil((c - (t+1)) * floor(n/2) / t) when --t is supplied.

struct ExpansionCmd {
  std::string graph_path;
  int t = 0;
  std::string config;
  CLI::Option* t_opt = nullptr;

  int run() {
    const Json cfg = load_config(config);
    const int use_t = t_opt->count() > 0 ? t : cfg_int(cfg, "t", 0);
    const Graph G = read_graph_file(graph_path);
    const ExpansionReport rep = edge_expansion(G);
    std::cerr << "expansion: examined " << rep.ratios_examined
              << " cut ratios\n";
    std::cout << "expansion = " << format_rational(rep.expansion) << "\n";
    std::cout << "witness = " << format_set(rep.witness) << "\n";
    if (use_t >= 1) {
      const Rat c = rep.expansion;
      if (c <= Rat(use_t + 1)) {
        std::cerr << "warning: expansion " << format_rational(c)
                  << " does not exceed t+1 = " << use_t + 1
                  << "; the rank lower-bound hypothesis fails and the bound "
                     "is clamped to 0\n";
      }
      Rat raw = (c - Rat(use_t + 1)) * Rat(G.n / 2) / Rat(use_t);
      long bound = ceil_long(raw);
      if (bound < 0) bound = 0;
      std::cout << "bound = " << bound << "\n";
    }
    return 0;
  }
};

// ---------------------------------------------------------------------------
// closure: one closure round, emitted as {"hrep": ..., "vrep": ...}.

struct ClosureCmd {
  InstanceFlags inst;
  std::string mode = "split";
  int t = 1;
  int coeff_bound = 1;
  std::string out;
  std::string config;
  CLI::Option* mode_opt = nullptr;
  CLI::Option* t_opt = nullptr;
  CLI::Option* bound_opt = nullptr;

  int run() {
    const Json cfg = load_config(config);
    const Guards guards = cfg_guards(cfg);
    const std::string use_mode =
        mode_opt->count() > 0 ? mode : cfg_str(cfg, "mode", "split");
    const int use_t = t_opt->count() > 0 ? t : cfg_int(cfg, "t", 1);
    const int use_bound =
        bound_opt->count() > 0 ? coeff_bound : cfg_int(cfg, "coeff_bound", 1);
    const Instance in = load_instance(inst);
    const FamilySpec F = make_family(use_mode, use_t, use_bound, in.P.dim);
    const HPolytope C = closure_round(in.P, F, guards);
    const VPolytope V = dd_convert_h_to_v(C);
    std::cerr << "closure: " << C.rows.size() << " rows, "
              << V.vertices.size() << " vertices\n";
    emit_artifact(dump_json(Json{{"hrep", hpolytope_to_json(C)},
                                 {"vrep", vpolytope_to_json(V)}}),
                  out);
    return 0;
  }
};

// ---------------------------------------------------------------------------
// rank: upper bound from closure iteration (split mode) and from the
// coordinate-fixing round count; lower bound from a certificate.

struct RankCmd {
  InstanceFlags inst;
  std::string mode = "split";
  int t = 1;
  int coeff_bound = 1;
  int max_rounds = 8;
  std::string certificate_path;
  std::string config;
  CLI::Option* mode_opt = nullptr;
  CLI::Option* t_opt = nullptr;
  CLI::Option* bound_opt = nullptr;
  CLI::Option* rounds_opt = nullptr;

  int run() {
    const Json cfg = load_config(config);
    const Guards guards = cfg_guards(cfg);
    const std::string use_mode =
        mode_opt->count() > 0 ? mode : cfg_str(cfg, "mode", "split");
    const int use_t = t_opt->count() > 0 ? t : cfg_int(cfg, "t", 1);
    const int use_bound =
        bound_opt->count() > 0 ? coeff_bound : cfg_int(cfg, "coeff_bound", 1);
    const int use_rounds =
        rounds_opt->count() > 0 ? max_rounds : cfg_int(cfg, "max_rounds", 8);
    const Instance in = load_instance(inst);
    const FamilySpec F = make_family(use_mode, use_t, use_bound, in.P.dim);

    // Upper bound. Iterating the requested closure is affordable for the
    // single-term split family; for tbranch/lattice the t-fold combination
    // blow-up makes the coordinate-fixing bound the practical one, and it is
    // valid for every family mode with parameter t.
    int upper = -1;
    if (F.mode == FamilyMode::Split) {
      try {
        const RankBracket rb = rank_upper_bound(in.P, F, use_rounds, guards);
        for (std::size_t i = 0; i < rb.vertex_counts.size(); ++i) {
          std::cout << "round " << i + 1 << ": " << rb.vertex_counts[i]
                    << " vertices\n";
        }
        if (rb.reached) upper = rb.rounds;
      } catch (const GuardError& e) {
        std::cerr << "split closure iteration skipped: " << e.what() << "\n";
      }
    }
    const int balas = balas_sequence(in.P, F.t, guards);
    std::cout << "balas rounds = " << balas << "\n";
    if (upper < 0 || balas < upper) upper = balas;

    int lower = 0;
    if (upper == 0) {
      lower = 0;  // the instance already equals its 0-1 hull
    } else if (!certificate_path.empty()) {
      const CertDAG C = certificate_from_json(read_json_file(certificate_path));
      if (!C.nodes.empty() &&
          static_cast<int>(C.nodes.front().label.values.size()) != in.P.dim) {
        throw ContractError("rank: certificate dimension " +
                            std::to_string(C.nodes.front().label.values.size()) +
                            " does not match instance dimension " +
                            std::to_string(in.P.dim));
      }
      lower = lower_bound(C) + 1;
      std::cerr << "lower bound from supplied certificate (verified against "
                   "its embedded reference)\n";
    } else if (in.kind == Instance::Kind::Tseitin && in.graph.n % 2 == 1) {
      const CertDAG C = build_certificate(in.graph, F.t, guards);
      lower = lower_bound(C) + 1;
      std::cerr << "lower bound from built certificate (" << C.nodes.size()
                << " nodes)\n";
    } else if (in.kind == Instance::Kind::CroppedCube) {
      const CertDAG C = cropped_cube_certificate(in.n, F.t, guards);
      lower = lower_bound(C) + 1;
      std::cerr << "lower bound from cropped-cube certificate ("
                << C.nodes.size() << " nodes)\n";
    } else {
      lower = 1;  // not the hull, so at least one round is needed
      std::cerr << "no certificate available; trivial lower bound\n";
    }

    std::cout << "upper = " << upper << "\n";
    std::cout << "lower = " << lower << "\n";
    if (upper == lower) {
      std::cout << "rank = " << upper << "\n";
      return 0;
    }
    std::cout << "rank in [" << lower << ", " << upper << "]\n";
    return 2;
  }
};

// ---------------------------------------------------------------------------
// certify: build a certificate, report min_red_count and the implied bound.

struct CertifyCmd {
  std::string graph_path;
  int cropped_n = 0;
  int t = 1;
  std::string format = "json";
  std::string out;
  std::string config;
  CLI::Option* graph_opt = nullptr;
  CLI::Option* cropped_opt = nullptr;
  CLI::Option* t_opt = nullptr;
  CLI::Option* format_opt = nullptr;

  int run() {
    const Json cfg = load_config(config);
    const Guards guards = cfg_guards(cfg);
    const int use_t = t_opt->count() > 0 ? t : cfg_int(cfg, "t", 1);
    const std::string use_format =
        format_opt->count() > 0 ? format : cfg_str(cfg, "format", "json");
    if (use_format != "json" && use_format != "dot") {
      throw ParseError("certify: --format must be json or dot");
    }
    const int given = (graph_opt->count() > 0 ? 1 : 0) +
                      (cropped_opt->count() > 0 ? 1 : 0);
    if (given != 1) {
      throw ParseError("certify: exactly one of --graph, --cropped-cube is required");
    }
    CertDAG C;
    if (graph_opt->count() > 0) {
      const Graph G = read_graph_file(graph_path);
      C = build_certificate(G, use_t, guards);
    } else {
      C = cropped_cube_certificate(cropped_n, use_t, guards);
    }
    const int red = lower_bound(C);  // re-verifies the built object
    const std::string artifact = use_format == "dot"
                                     ? dot_export(C)
                                     : dump_json(certificate_to_json(C));
    std::cerr << "certify: " << C.nodes.size() << " nodes, t=" << use_t
              << "\n";
    if (out.empty()) {
      std::cout << artifact;
      std::cerr << "min_red_count = " << red << "\n";
      std::cerr << "rank lower bound = " << red + 1 << "\n";
    } else {
      emit_artifact(artifact, out);
      std::cout << "min_red_count = " << red << "\n";
      std::cout << "rank lower bound = " << red + 1 << "\n";
    }
    return 0;
  }
};

// ---------------------------------------------------------------------------
// verify: check a certificate file; exit 0 iff valid.

struct VerifyCmd {
  std::string certificate_path;
  std::string in_path;
  int t = 0;
  std::string config;
  CLI::Option* in_opt = nullptr;
  CLI::Option* t_opt = nullptr;

  int run() {
    const Json cfg = load_config(config);
    CertDAG C = certificate_from_json(read_json_file(certificate_path));
    const int use_t = t_opt->count() > 0 ? t : cfg_int(cfg, "t", C.t);
    VerifyReport rep;
    if (in_opt->count() > 0) {
      const HPolytope P = hpolytope_from_json(read_json_file(in_path));
      rep = verify_certificate(C, P, use_t);
    } else if (use_t == C.t) {
      rep = verify_certificate(C);
    } else {
      C.t = use_t;
      rep = verify_certificate(C);
    }
    if (rep.valid) {
      std::cout << "valid\n";
      std::cout << "min_red_count = " << rep.min_red_count << "\n";
      std::cout << "rank lower bound = " << rep.min_red_count + 1 << "\n";
      return 0;
    }
    const VerifyFailure& first = rep.failures.front();
    std::cout << "invalid\n";
    std::cout << "node " << first.node << ": " << first.rule << "\n";
    std::cerr << "verify: " << rep.failures.size() << " rule failure(s)\n";
    return 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cutrank: exact cutting-plane closures, rank brackets, and rounding "
      "certificates on 0-1 cube polytopes"};
  app.set_version_flag("--version", "cutrank 0.1.0");
  app.require_subcommand(1);

  GenGraphCmd gen;
  {
    CLI::App* c = app.add_subcommand(
        "gen-graph", "generate a random d-regular graph (configuration model)");
    c->add_option("--n", gen.n, "vertex count")->required();
    c->add_option("--d", gen.d, "degree")->required();
    gen.seed_opt = c->add_option("--seed", gen.seed, "RNG seed");
    c->add_option("--out", gen.out, "output file (default: stdout)");
    c->add_option("--config", gen.config, "experiment config JSON");
  }

  TseitinCmd tse;
  {
    CLI::App* c = app.add_subcommand(
        "tseitin", "emit the Tseitin polytope of a graph as H-rep JSON");
    c->add_option("--graph", tse.graph_path, "graph file (JSON or DIMACS)")
        ->required();
    c->add_option("--out", tse.out, "output file (default: stdout)");
    c->add_option("--config", tse.config, "experiment config JSON");
  }

  CroppedCubeCmd cc;
  {
    CLI::App* c = app.add_subcommand(
        "cropped-cube", "emit the cropped n-cube as H-rep JSON");
    c->add_option("--n", cc.n, "dimension")->required();
    c->add_option("--out", cc.out, "output file (default: stdout)");
    c->add_option("--config", cc.config, "experiment config JSON");
  }

  ExpansionCmd exp;
  {
    CLI::App* c = app.add_subcommand(
        "expansion", "exact edge expansion by exhaustive cut enumeration");
    c->add_option("--graph", exp.graph_path, "graph file (JSON or DIMACS)")
        ->required();
    exp.t_opt = c->add_option(
        "--t", exp.t, "also evaluate the rank lower-bound formula for this t");
    c->add_option("--config", exp.config, "experiment config JSON");
  }

  ClosureCmd clo;
  {
    CLI::App* c = app.add_subcommand(
        "closure", "one closure round; emits {\"hrep\", \"vrep\"} JSON");
    clo.inst.add_to(c);
    clo.mode_opt =
        c->add_option("--mode", clo.mode, "split | tbranch | lattice");
    clo.t_opt = c->add_option("--t", clo.t, "branching parameter t");
    clo.bound_opt = c->add_option("--coeff-bound", clo.coeff_bound,
                                  "max |entry| of direction vectors");
    c->add_option("--out", clo.out, "output file (default: stdout)");
    c->add_option("--config", clo.config, "experiment config JSON");
  }

  RankCmd rank;
  {
    CLI::App* c = app.add_subcommand(
        "rank", "bracket the closure rank of an instance");
    rank.inst.add_to(c);
    rank.mode_opt =
        c->add_option("--mode", rank.mode, "split | tbranch | lattice");
    rank.t_opt = c->add_option("--t", rank.t, "branching parameter t");
    rank.bound_opt = c->add_option("--coeff-bound", rank.coeff_bound,
                                   "max |entry| of direction vectors");
    rank.rounds_opt = c->add_option("--max-rounds", rank.max_rounds,
                                    "closure iteration cap (split mode)");
    c->add_option("--certificate", rank.certificate_path,
                  "use this certificate file for the lower bound");
    c->add_option("--config", rank.config, "experiment config JSON");
  }

  CertifyCmd cert;
  {
    CLI::App* c = app.add_subcommand(
        "certify", "build a rounding certificate and report its bound");
    cert.graph_opt = c->add_option("--graph", cert.graph_path,
                                   "odd-vertex graph file (JSON or DIMACS)");
    cert.cropped_opt = c->add_option("--cropped-cube", cert.cropped_n,
                                     "cropped n-cube certificate");
    cert.t_opt = c->add_option("--t", cert.t, "rounding parameter t");
    cert.format_opt = c->add_option("--format", cert.format, "json | dot");
    c->add_option("--out", cert.out, "certificate output file");
    c->add_option("--config", cert.config, "experiment config JSON");
  }

  VerifyCmd ver;
  {
    CLI::App* c = app.add_subcommand(
        "verify", "check a certificate file; exit 0 iff valid");
    c->add_option("--certificate", ver.certificate_path, "certificate JSON")
        ->required();
    ver.in_opt = c->add_option(
        "--in", ver.in_path,
        "verify against this H-rep polytope instead of the embedded reference");
    ver.t_opt = c->add_option("--t", ver.t,
                              "override the certificate's rounding parameter");
    c->add_option("--config", ver.config, "experiment config JSON");
  }

  int rc = 0;
  app.get_subcommand("gen-graph")->callback([&] { rc = gen.run(); });
  app.get_subcommand("tseitin")->callback([&] { rc = tse.run(); });
  app.get_subcommand("cropped-cube")->callback([&] { rc = cc.run(); });
  app.get_subcommand("expansion")->callback([&] { rc = exp.run(); });
  app.get_subcommand("closure")->callback([&] { rc = clo.run(); });
  app.get_subcommand("rank")->callback([&] { rc = rank.run(); });
  app.get_subcommand("certify")->callback([&] { rc = cert.run(); });
  app.get_subcommand("verify")->callback([&] { rc = ver.run(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const cutrank::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const cutrank::GuardError& e) {
    std::cerr << "guard limit: " << e.what() << "\n";
    return 1;
  } catch (const cutrank::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
