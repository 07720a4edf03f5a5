#pragma once

#include <string>
#include <vector>

#include "ipts/vector.hpp"

namespace ipts {

/// Textual encodings of a test-set element g = g+ - g-.
enum class RenderStyle {
  vector,    ///< signed integers, space separated: "0 3 -4 1"
  binomial,  ///< monomial difference: "n^3*q - d^4"
  doubled,   ///< one monomial, two alphabets: lower case carries the positive
             ///< part, upper case the negative part: "n^3*D^4*q"
};

std::string render(const IntVector& g, RenderStyle style,
                   const std::vector<std::string>& names);

}  // namespace ipts
