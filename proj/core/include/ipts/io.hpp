#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ipts/matrix.hpp"
#include "ipts/staircase.hpp"
#include "ipts/tables.hpp"
#include "ipts/vector.hpp"

namespace ipts {

/// Matrix file format: a two-integer header followed by the entries, all
/// whitespace separated. The default header convention is (ncols, nrows);
/// `modern_header` swaps it to (nrows, ncols) for interoperability with
/// tools that use that order. The writer emits space-separated entries, one
/// row per line, with a trailing newline.
IntMatrix parse_matrix(const std::string& text, bool modern_header = false);
std::string format_matrix(const IntMatrix& m, bool modern_header = false);
IntMatrix read_matrix(const std::string& path, bool modern_header = false);
void write_matrix(const std::string& path, const IntMatrix& m,
                  bool modern_header = false);

/// Cost files use the one-row matrix convention ("n 1" header).
IntVector read_cost(const std::string& path, bool modern_header = false);
void write_cost(const std::string& path, const IntVector& c,
                bool modern_header = false);

/// Constraint system in LattE format: header (nrows, ncols), rows encoding
/// b_i - a_i . u >= 0 as [b_i | -a_i], an optional trailing line
/// "k i_1 ... i_k" marking equality rows (1-based), and an optional final
/// cost row of n entries.
struct LatteSystem {
  IntMatrix matrix;           // the rows a_i, sign already restored
  IntVector rhs;              // the b_i
  std::set<std::size_t> equalities;  // 0-based row indices
  std::optional<IntVector> cost;
};

LatteSystem parse_latte(const std::string& text);
LatteSystem read_latte(const std::string& path);

/// Maximally optimal points file: a 2n-column matrix, each row holding the
/// point followed by a 0/1 increase-set indicator.
std::string format_maxopt(const std::vector<MaxOptimal>& points,
                          std::size_t dimension);
std::vector<MaxOptimal> parse_maxopt(const std::string& text);

/// Polynomial file: an (n+1)-column matrix, each row a coefficient followed
/// by the exponent vector.
std::string format_polynomial(const Polynomial& p, std::size_t dimension);
Polynomial parse_polynomial(const std::string& text);

/// Table file: header (d_n, number of slower index combinations), then one
/// line per combination of the slower indices. Entries may be rational
/// ("p/q").
Table parse_table(const std::string& text, const TableShape& shape);
Table read_table(const std::string& path, const TableShape& shape);
std::string format_table(const Table& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Derived file names around a base path P.
struct ProjectFiles {
  std::string base;

  std::string matrix() const { return base; }
  std::string cost() const { return base + ".cost"; }
  std::string gro() const { return base + ".gro"; }
  std::string hil() const { return base + ".hil"; }
  std::string gra() const { return base + ".gra"; }
  std::string maxopt() const { return base + ".maxopt"; }
  std::string series() const { return base + ".series"; }
  std::string bounds() const { return base + ".bounds"; }
};

}  // namespace ipts
