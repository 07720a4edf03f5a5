#include "ipts/render.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ipts {

namespace {

std::string upper(const std::string& s) {
  std::string r = s;
  for (char& c : r) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return r;
}

void append_factor(std::ostringstream& out, bool& first, const std::string& name,
                   const Int& exponent) {
  if (!first) out << "*";
  first = false;
  out << name;
  if (exponent != 1) out << "^" << exponent;
}

std::string monomial(const IntVector& exponents,
                     const std::vector<std::string>& names) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) append_factor(out, first, names[i], exponents[i]);
  return first ? "1" : out.str();
}

}  // namespace

std::string render(const IntVector& g, RenderStyle style,
                   const std::vector<std::string>& names) {
  if (style != RenderStyle::vector && names.size() != g.size())
    throw std::invalid_argument("render: name count does not match length");
  switch (style) {
    case RenderStyle::vector: {
      std::ostringstream out;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) out << " ";
        out << g[i];
      }
      return out.str();
    }
    case RenderStyle::binomial: {
      if (g.is_zero()) return "0";
      auto [pos, neg] = g.decompose();
      return monomial(pos, names) + " - " + monomial(neg, names);
    }
    case RenderStyle::doubled: {
      std::ostringstream out;
      bool first = true;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] > 0)
          append_factor(out, first, names[i], g[i]);
        else if (g[i] < 0)
          append_factor(out, first, upper(names[i]), -g[i]);
      }
      return first ? "1" : out.str();
    }
  }
  throw std::logic_error("render: unknown style");
}

}  // namespace ipts
