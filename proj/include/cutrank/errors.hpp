// cutrank: exact cutting-plane rank laboratory.
//
// Error hierarchy. Every thrown condition is one of these; callers that need
// to distinguish "bad input file" from "resource guard tripped" catch the
// specific subclass. Infeasibility of an LP or parity system is *not* an
// error — those are ordinary result values.

#pragma once

#include <stdexcept>
#include <string>

namespace cutrank {

// Base class for all cutrank errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation was violated by the caller
// (dimension mismatch, even vertex count, index out of range, ...).
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(what) {}
};

// Malformed external input: JSON/DIMACS files, rational literals, CLI
// configs. The CLI maps this class to exit code 3.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A configured resource cap was exceeded (family size, node count,
// enumeration width). The message names the bottleneck and the count so an
// operator can decide whether raising the cap is sane.
class GuardError : public Error {
 public:
  explicit GuardError(const std::string& what) : Error(what) {}
};

// An LP was unbounded in the optimization direction. Cannot occur for the
// box-bounded polytopes this artifact constructs, but external H-rep input
// may describe unbounded sets.
class UnboundedError : public Error {
 public:
  explicit UnboundedError(const std::string& what) : Error(what) {}
};

}  // namespace cutrank
