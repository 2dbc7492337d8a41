// cutrank: exact cutting-plane rank laboratory.
//
// Exact rational scalars and dense rational linear algebra. The scalar is
// GMP's mpq_class (always canonical: lowest terms, positive denominator);
// vectors and matrices are Eigen dense types over that scalar, so the rest
// of the code base writes ordinary expression-style linear algebra while
// every intermediate value stays exact. No floating point anywhere.

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace Eigen {

// Teach Eigen about mpq_class. Costs are rough relative weights; exactness
// means epsilon and dummy_precision are literally zero.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace cutrank {

using Rat = mpq_class;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Parses "p/q" or "p" (decimal, optional leading '-', q > 0) into a
// canonical rational. Throws ParseError on anything else, including q = 0.
Rat parse_rational(const std::string& text);

// Formats canonically: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rat& value);

// True iff value has denominator 1.
bool is_integer(const Rat& value);

// Largest integer <= value / smallest integer >= value, as exact rationals.
Rat rat_floor(const Rat& value);
Rat rat_ceil(const Rat& value);

// floor/ceil as machine integers; throws ContractError if out of long range.
long floor_long(const Rat& value);
long ceil_long(const Rat& value);

// Three-way lexicographic comparison of equal-length vectors: -1, 0, +1.
int lex_compare(const RatVector& a, const RatVector& b);

// Strict lexicographic order for sorting vertex lists.
bool lex_less(const RatVector& a, const RatVector& b);

// Formats a vector as "(a, b, c)" with canonical rational entries.
std::string format_vector(const RatVector& v);

}  // namespace cutrank
