#pragma once

#include <stdexcept>
#include <string>

namespace ipts {

/// Malformed input file or token stream.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Base class for mathematically meaningful failures (as opposed to misuse).
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// The term order is not bounded below on some fiber: a nonzero nonnegative
/// kernel direction does not strictly increase the cost.
class UnboundedOrderError : public MathError {
 public:
  explicit UnboundedOrderError(const std::string& what) : MathError(what) {}
};

/// The fiber {u >= 0 : A u = b} has a nonzero nonnegative recession
/// direction, so enumeration would not terminate.
class UnboundedFiberError : public MathError {
 public:
  explicit UnboundedFiberError(const std::string& what) : MathError(what) {}
};

/// No nonnegative integer table attains the given marginal vector.
class InfeasibleMarginalsError : public MathError {
 public:
  explicit InfeasibleMarginalsError(const std::string& what) : MathError(what) {}
};

/// Generator count exceeds the configured inclusion-exclusion limit.
class TooManyGeneratorsError : public MathError {
 public:
  explicit TooManyGeneratorsError(const std::string& what) : MathError(what) {}
};

/// An auxiliary LP that is assumed bounded turned out unbounded.
class UnboundedAuxLpError : public MathError {
 public:
  explicit UnboundedAuxLpError(const std::string& what) : MathError(what) {}
};

}  // namespace ipts
