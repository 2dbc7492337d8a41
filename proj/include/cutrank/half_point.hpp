// cutrank: exact cutting-plane rank laboratory.
//
// Points with entries in {0, 1/2, 1}: the label alphabet of certificate
// trees and the rounding operations on their fractional supports.

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cutrank/rational.hpp"

namespace cutrank {

enum class HalfVal : std::uint8_t { Zero = 0, Half = 1, One = 2 };

struct HalfIntegralPoint {
  std::vector<HalfVal> values;

  int dim() const { return static_cast<int>(values.size()); }

  // Indices where the entry is exactly 1/2 (the fractional support E(x)).
  std::vector<int> fractional_support() const;

  bool is_integral() const;

  RatVector to_ratvector() const;

  auto operator<=>(const HalfIntegralPoint&) const = default;
};

// All-1/2 point of the given dimension.
HalfIntegralPoint all_half(int n);

// Converts an exact point with entries in {0, 1/2, 1}; anything else is a
// ContractError.
HalfIntegralPoint from_ratvector(const RatVector& x);

// Entries of J set to a (0 or 1), everything else unchanged. Requires J to
// be a subset of the fractional support of x — rounding an already integral
// entry is a ContractError.
HalfIntegralPoint round_point(const HalfIntegralPoint& x,
                              const std::vector<int>& J, int a);

}  // namespace cutrank
