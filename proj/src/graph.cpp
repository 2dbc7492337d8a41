#include "cutrank/graph.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cutrank/errors.hpp"

namespace cutrank {

void validate(const Graph& G) {
  if (G.n < 1) throw ContractError("Graph: vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : G.edges) {
    if (u < 0 || v < 0 || u >= G.n || v >= G.n) {
      throw ContractError("Graph: endpoint out of range");
    }
    if (u == v) throw ContractError("Graph: loop edge");
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      throw ContractError("Graph: parallel edge");
    }
  }
}

std::vector<std::vector<int>> adjacency_lists(const Graph& G) {
  std::vector<std::vector<int>> adj(G.n);
  for (const auto& [u, v] : G.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<std::vector<int>> incident_edges(const Graph& G) {
  std::vector<std::vector<int>> inc(G.n);
  for (std::size_t e = 0; e < G.edges.size(); ++e) {
    inc[G.edges[e].first].push_back(static_cast<int>(e));
    inc[G.edges[e].second].push_back(static_cast<int>(e));
  }
  return inc;
}

Graph complete_graph(int n) {
  Graph G;
  G.n = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) G.edges.emplace_back(u, v);
  }
  return G;
}

ExpansionReport edge_expansion(const Graph& G) {
  validate(G);
  if (G.n > 22) {
    throw GuardError(
        "edge_expansion: n = " + std::to_string(G.n) +
        " exceeds the exhaustive guard (22); the certificate builder's "
        "bounded violator search covers larger graphs");
  }
  const int n = G.n;
  std::vector<std::uint32_t> edge_mask;
  edge_mask.reserve(G.edges.size());
  for (const auto& [u, v] : G.edges) {
    edge_mask.push_back((std::uint32_t{1} << u) | (std::uint32_t{1} << v));
  }

  ExpansionReport best;
  bool have_best = false;
  long long best_cut = 0, best_size = 1;
  std::uint32_t best_mask = 0;

  auto lex_smaller_set = [n](std::uint32_t a, std::uint32_t b) {
    for (int v = 0; v < n; ++v) {
      const bool in_a = a & (std::uint32_t{1} << v);
      const bool in_b = b & (std::uint32_t{1} << v);
      if (in_a != in_b) return in_a;  // v present only in a => a smaller
    }
    return false;
  };

  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const int size = __builtin_popcount(mask);
    if (2 * size > n) continue;
    ++best.ratios_examined;
    long long cut = 0;
    for (const std::uint32_t em : edge_mask) {
      if (__builtin_popcount(mask & em) == 1) ++cut;
    }
    // Compare cut/size with best exactly: cut*bs <=> bc*size.
    bool better = false;
    if (!have_best) {
      better = true;
    } else {
      const long long lhs = cut * best_size;
      const long long rhs = best_cut * static_cast<long long>(size);
      if (lhs != rhs) {
        better = lhs < rhs;
      } else if (size != best_size) {
        better = size < best_size;
      } else {
        better = lex_smaller_set(mask, best_mask);
      }
    }
    if (better) {
      have_best = true;
      best_cut = cut;
      best_size = size;
      best_mask = mask;
    }
  }

  best.expansion = Rat(static_cast<long>(best_cut)) /
                   Rat(static_cast<long>(best_size));
  for (int v = 0; v < n; ++v) {
    if (best_mask & (std::uint32_t{1} << v)) best.witness.push_back(v);
  }
  return best;
}

namespace {

// Uniform integer in [0, bound) from the raw 64-bit stream, by rejection.
// mt19937_64's output sequence is pinned by the standard, so this is
// bit-reproducible across platforms (unlike uniform_int_distribution).
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace

Graph random_regular_graph(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) {
    throw ContractError("random_regular_graph: n and d must be positive");
  }
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw ContractError("random_regular_graph: n*d must be even");
  }
  if (d >= n) {
    throw ContractError("random_regular_graph: need d < n for a simple graph");
  }

  std::mt19937_64 rng(seed);
  const int stubs_total = n * d;
  constexpr int kMaxAttempts = 2000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<int> stubs(stubs_total);
    for (int i = 0; i < stubs_total; ++i) stubs[i] = i / d;
    // Fisher–Yates with the deterministic bounded draw.
    for (int i = stubs_total - 1; i > 0; --i) {
      const auto j = static_cast<int>(
          bounded_draw(rng, static_cast<std::uint64_t>(i) + 1));
      std::swap(stubs[i], stubs[j]);
    }
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (int i = 0; i < stubs_total && ok; i += 2) {
      const int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
      } else {
        ok = seen.emplace(std::min(u, v), std::max(u, v)).second;
      }
    }
    if (!ok) continue;
    Graph G;
    G.n = n;
    G.edges.assign(seen.begin(), seen.end());  // lexicographic edge order
    return G;
  }
  throw Error("random_regular_graph: pairing rejected " +
              std::to_string(kMaxAttempts) +
              " times; retry with a different seed");
}

}  // namespace cutrank
