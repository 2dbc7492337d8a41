#include "cutrank/parity.hpp"

#include <algorithm>
#include <string>

#include "cutrank/bitset.hpp"
#include "cutrank/errors.hpp"

namespace cutrank {

void validate(const ParitySystem& S) {
  if (S.nvars < 0) throw ContractError("ParitySystem: negative column count");
  if (S.rhs.size() != S.rows.size()) {
    throw ContractError("ParitySystem: rhs length != row count");
  }
  for (const BitVec& row : S.rows) {
    if (static_cast<int>(row.size()) != S.nvars) {
      throw ContractError("ParitySystem: row length != nvars");
    }
    for (const auto bit : row) {
      if (bit > 1) throw ContractError("ParitySystem: entries must be bits");
    }
  }
  for (const auto bit : S.rhs) {
    if (bit > 1) throw ContractError("ParitySystem: rhs must be bits");
  }
}

namespace {

// Packed row-reduced form. Column n holds the rhs bit.
struct Eliminated {
  int nvars = 0;
  bool feasible = true;
  std::vector<Bitset> rows;    // reduced, nonzero, one pivot each
  std::vector<int> pivot_col;  // pivot column of rows[i]
  std::vector<bool> is_pivot;  // per column
};

Eliminated eliminate(const ParitySystem& S) {
  validate(S);
  Eliminated e;
  e.nvars = S.nvars;
  e.is_pivot.assign(S.nvars, false);

  std::vector<Bitset> work;
  for (std::size_t i = 0; i < S.rows.size(); ++i) {
    Bitset row(S.nvars + 1);
    for (int j = 0; j < S.nvars; ++j) {
      if (S.rows[i][j]) row.set(j);
    }
    if (S.rhs[i]) row.set(S.nvars);
    work.push_back(std::move(row));
  }

  for (Bitset& row : work) {
    // Reduce against the pivots collected so far.
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (row.test(e.pivot_col[r])) row ^= e.rows[r];
    }
    const std::size_t lead = row.first_set();
    if (lead == row.size()) continue;  // all-zero row
    if (static_cast<int>(lead) == S.nvars) {
      e.feasible = false;  // 0 = 1
      continue;
    }
    // Back-substitute into existing rows to keep full reduction.
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (e.rows[r].test(lead)) e.rows[r] ^= row;
    }
    e.pivot_col.push_back(static_cast<int>(lead));
    e.is_pivot[lead] = true;
    e.rows.push_back(std::move(row));
  }
  return e;
}

BitVec particular_solution(const Eliminated& e) {
  // Free variables zero; pivot variables take their row's rhs bit.
  BitVec y(e.nvars, 0);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    y[e.pivot_col[r]] = e.rows[r].test(e.nvars) ? 1 : 0;
  }
  return y;
}

}  // namespace

std::optional<BitVec> solve_parity(const ParitySystem& S) {
  const Eliminated e = eliminate(S);
  if (!e.feasible) return std::nullopt;
  return particular_solution(e);
}

std::vector<BitVec> enumerate_parity_solutions(const ParitySystem& S,
                                               std::uint64_t cap) {
  if (cap == 0) throw ContractError("enumerate_parity_solutions: cap must be positive");
  const Eliminated e = eliminate(S);
  std::vector<BitVec> out;
  if (!e.feasible) return out;

  std::vector<int> free_cols;
  for (int j = 0; j < e.nvars; ++j) {
    if (!e.is_pivot[j]) free_cols.push_back(j);
  }
  if (free_cols.size() >= 64 ||
      (std::uint64_t{1} << free_cols.size()) > cap) {
    throw GuardError("enumerate_parity_solutions: 2^" +
                     std::to_string(free_cols.size()) +
                     " solutions exceed cap " + std::to_string(cap));
  }

  const BitVec base = particular_solution(e);
  const std::uint64_t total = std::uint64_t{1} << free_cols.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    BitVec y = base;
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
      if (mask & (std::uint64_t{1} << f)) y[free_cols[f]] ^= 1;
    }
    // Pivot variables respond to the chosen free values.
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      std::uint8_t acc = e.rows[r].test(e.nvars) ? 1 : 0;
      for (std::size_t f = 0; f < free_cols.size(); ++f) {
        if (e.rows[r].test(free_cols[f]) && y[free_cols[f]]) acc ^= 1;
      }
      y[e.pivot_col[r]] = acc;
    }
    out.push_back(std::move(y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> small_support_subset(const ParitySystem& S, int t) {
  validate(S);
  if (t < 1) throw ContractError("small_support_subset: t must be positive");
  if (static_cast<int>(S.rows.size()) != t) {
    throw ContractError("small_support_subset: system must have exactly t rows");
  }
  // Hypothesis: A·1 ≡ b (mod 2) — guarantees a solution of support <= t.
  for (int i = 0; i < t; ++i) {
    std::uint8_t acc = 0;
    for (int j = 0; j < S.nvars; ++j) acc ^= S.rows[i][j];
    if (acc != S.rhs[i]) {
      throw ContractError(
          "small_support_subset: A*1 != b (mod 2); hypothesis violated");
    }
  }

  // Exhaustive search by cardinality, lexicographic within each size.
  auto column_sum_matches = [&](const std::vector<int>& J) {
    for (int i = 0; i < t; ++i) {
      std::uint8_t acc = 0;
      for (const int j : J) acc ^= S.rows[i][j];
      if (acc != S.rhs[i]) return false;
    }
    return true;
  };
  std::vector<int> stack;
  for (int size = 0; size <= t; ++size) {
    // Lexicographically ordered size-`size` subsets via recursion.
    std::vector<int> found;
    bool done = false;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
      if (done) return;
      if (remaining == 0) {
        if (column_sum_matches(stack)) {
          found = stack;
          done = true;
        }
        return;
      }
      for (int j = start; j <= S.nvars - remaining && !done; ++j) {
        stack.push_back(j);
        self(self, j + 1, remaining - 1);
        stack.pop_back();
      }
    };
    rec(rec, 0, size);
    if (done) return found;
  }
  throw Error(
      "small_support_subset: no subset of size <= t found; "
      "hypothesis guarantees one (internal error)");
}

std::optional<RatVector> solutions_average(const ParitySystem& S) {
  const Eliminated e = eliminate(S);
  if (!e.feasible) return std::nullopt;

  // The solution set is base + span(null basis). Coordinate j averages 1/2
  // iff some null-basis vector touches j (then both values occur equally
  // often); otherwise it is frozen at the base value. Null basis vectors:
  // one per free column f, with support {f} ∪ {pivots whose row hits f}.
  const BitVec base = particular_solution(e);
  std::vector<bool> balanced(e.nvars, false);
  for (int f = 0; f < e.nvars; ++f) {
    if (e.is_pivot[f]) continue;
    balanced[f] = true;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (e.rows[r].test(f)) balanced[e.pivot_col[r]] = true;
    }
  }
  RatVector avg(e.nvars);
  for (int j = 0; j < e.nvars; ++j) {
    avg(j) = balanced[j] ? Rat(1, 2) : Rat(static_cast<int>(base[j]));
  }
  return avg;
}

}  // namespace cutrank
