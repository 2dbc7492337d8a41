// cutrank: exact cutting-plane rank laboratory.
//
// Linear algebra over GF(2): solve and enumerate 0-1 parity systems,
// find small-support column subsets summing to a target, and compute
// solution-set coordinate averages structurally (a coordinate touched by
// the null space averages 1/2; any other is a forced constant).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cutrank/rational.hpp"

namespace cutrank {

// A 0-1 vector; also the value type for parity solutions.
using BitVec = std::vector<std::uint8_t>;

// A·y ≡ b (mod 2): r rows over n columns.
struct ParitySystem {
  int nvars = 0;
  std::vector<BitVec> rows;  // each of length nvars, entries 0/1
  BitVec rhs;                // length rows.size()
};

// Throws ContractError unless dimensions line up and entries are bits.
void validate(const ParitySystem& S);

// One solution via exact Gaussian elimination (free variables set to 0),
// or nullopt when the system is infeasible.
std::optional<BitVec> solve_parity(const ParitySystem& S);

// All solutions, lexicographically sorted. Infeasible systems yield the
// empty sequence; a solution count above cap throws GuardError. The count
// is always 2^(n - rank) when feasible.
std::vector<BitVec> enumerate_parity_solutions(const ParitySystem& S,
                                               std::uint64_t cap);

// Smallest-support column subset J (|J| <= t) whose columns sum to b
// mod 2; ties broken lexicographically. Requires S to have exactly t rows
// and A·1 ≡ b (mod 2) — the hypothesis guaranteeing existence — and throws
// ContractError otherwise. Exhaustive search over subsets of size 0..t.
std::vector<int> small_support_subset(const ParitySystem& S, int t);

// Coordinate-wise average of the full solution set, computed structurally
// (never by enumeration), or nullopt when infeasible.
std::optional<RatVector> solutions_average(const ParitySystem& S);

}  // namespace cutrank
