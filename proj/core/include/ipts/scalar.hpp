#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ipts {

/// Arbitrary-precision integer. All core arithmetic is exact; there is no
/// fixed-width fast path.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the backend.
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace ipts
