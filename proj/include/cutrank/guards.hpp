// cutrank: exact cutting-plane rank laboratory.
//
// Resource guards. Exponential enumerations (disjunction families, level
// combinations, certificate nodes, subset searches) must fail loudly with
// the offending count instead of hanging; these caps are configuration
// values with conservative defaults, overridable via environment variables
// and per-run config.

#pragma once

#include <cstdint>

namespace cutrank {

struct Guards {
  // Maximum number of disjunctions a closure family may enumerate.
  // Environment override: CUTRANK_GUARD_FAMILY.
  std::uint64_t max_family = 20000;

  // Maximum number of certificate DAG nodes a build may create.
  // Environment override: CUTRANK_GUARD_NODES.
  std::uint64_t max_nodes = 200000;

  // Maximum number of integer-level combinations in apply_lattice.
  std::uint64_t max_level_combos = 4096;

  // Maximum number of subsets the violator search in build_certificate may
  // visit per node.
  std::uint64_t max_subset_search = 1u << 22;

  // Cap for enumerate_parity_solutions calls made internally (blue children).
  std::uint64_t max_blue_children = 4096;
};

// Defaults with environment overrides applied. Invalid or absent variables
// leave the built-in default untouched.
Guards default_guards();

}  // namespace cutrank
