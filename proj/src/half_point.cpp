#include "cutrank/half_point.hpp"

#include "cutrank/errors.hpp"

namespace cutrank {

std::vector<int> HalfIntegralPoint::fractional_support() const {
  std::vector<int> support;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == HalfVal::Half) support.push_back(static_cast<int>(i));
  }
  return support;
}

bool HalfIntegralPoint::is_integral() const {
  for (const HalfVal v : values) {
    if (v == HalfVal::Half) return false;
  }
  return true;
}

RatVector HalfIntegralPoint::to_ratvector() const {
  RatVector x(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    switch (values[i]) {
      case HalfVal::Zero: x(static_cast<Eigen::Index>(i)) = 0; break;
      case HalfVal::Half: x(static_cast<Eigen::Index>(i)) = Rat(1, 2); break;
      case HalfVal::One: x(static_cast<Eigen::Index>(i)) = 1; break;
    }
  }
  return x;
}

HalfIntegralPoint all_half(int n) {
  HalfIntegralPoint x;
  x.values.assign(static_cast<std::size_t>(n), HalfVal::Half);
  return x;
}

HalfIntegralPoint from_ratvector(const RatVector& x) {
  HalfIntegralPoint out;
  out.values.reserve(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) == 0) {
      out.values.push_back(HalfVal::Zero);
    } else if (x(i) == Rat(1, 2)) {
      out.values.push_back(HalfVal::Half);
    } else if (x(i) == 1) {
      out.values.push_back(HalfVal::One);
    } else {
      throw ContractError("from_ratvector: entry " + format_rational(x(i)) +
                          " is not in {0, 1/2, 1}");
    }
  }
  return out;
}

HalfIntegralPoint round_point(const HalfIntegralPoint& x,
                              const std::vector<int>& J, int a) {
  if (a != 0 && a != 1) throw ContractError("round_point: a must be 0 or 1");
  HalfIntegralPoint y = x;
  for (const int j : J) {
    if (j < 0 || j >= x.dim()) {
      throw ContractError("round_point: index out of range");
    }
    if (x.values[static_cast<std::size_t>(j)] != HalfVal::Half) {
      throw ContractError(
          "round_point: J must lie inside the fractional support");
    }
    y.values[static_cast<std::size_t>(j)] =
        (a == 0) ? HalfVal::Zero : HalfVal::One;
  }
  return y;
}

}  // namespace cutrank
