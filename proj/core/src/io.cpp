#include "ipts/io.hpp"

#include <fstream>
#include <sstream>

#include "ipts/errors.hpp"

namespace ipts {

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

Int parse_int(const std::string& tok) {
  try {
    return Int(tok);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + tok + "'");
  }
}

Rat parse_rat(const std::string& tok) {
  try {
    return Rat(tok);
  } catch (const std::exception&) {
    throw ParseError("not a rational: '" + tok + "'");
  }
}

std::size_t parse_size(const std::string& tok) {
  Int v = parse_int(tok);
  if (v < 0) throw ParseError("expected a nonnegative count, got '" + tok + "'");
  return v.convert_to<std::size_t>();
}

}  // namespace

IntMatrix parse_matrix(const std::string& text, bool modern_header) {
  std::vector<std::string> toks = tokens_of(text);
  if (toks.size() < 2) throw ParseError("matrix file: missing header");
  std::size_t first = parse_size(toks[0]);
  std::size_t second = parse_size(toks[1]);
  std::size_t ncols = modern_header ? second : first;
  std::size_t nrows = modern_header ? first : second;
  const std::size_t body = toks.size() - 2;
  if (body != nrows * ncols) {
    std::ostringstream msg;
    msg << "matrix file: header (" << toks[0] << " " << toks[1] << ") implies "
        << nrows << " rows x " << ncols << " cols = " << nrows * ncols
        << " entries under the " << (modern_header ? "(nrows, ncols)" : "(ncols, nrows)")
        << " convention, but the body has " << body << " entries";
    if (body == first * second && first != second)
      msg << "; the " << (modern_header ? "(ncols, nrows)" : "(nrows, ncols)")
          << " reading would need " << (modern_header ? second : first) << " rows x "
          << (modern_header ? first : second) << " cols, which also matches -- "
          << "check which convention produced this file";
    throw ParseError(msg.str());
  }
  if (nrows == 0 || ncols == 0)
    throw ParseError("matrix file: zero dimension in header");
  std::vector<Int> entries;
  entries.reserve(body);
  for (std::size_t i = 2; i < toks.size(); ++i) entries.push_back(parse_int(toks[i]));
  return IntMatrix(nrows, ncols, std::move(entries));
}

std::string format_matrix(const IntMatrix& m, bool modern_header) {
  std::ostringstream out;
  if (modern_header)
    out << m.rows() << " " << m.cols() << "\n";
  else
    out << m.cols() << " " << m.rows() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << " ";
      out << m.at(i, j);
    }
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
}

IntMatrix read_matrix(const std::string& path, bool modern_header) {
  return parse_matrix(read_file(path), modern_header);
}

void write_matrix(const std::string& path, const IntMatrix& m,
                  bool modern_header) {
  write_file(path, format_matrix(m, modern_header));
}

IntVector read_cost(const std::string& path, bool modern_header) {
  IntMatrix m = read_matrix(path, modern_header);
  if (m.rows() != 1)
    throw ParseError("cost file: expected exactly one row, got " +
                     std::to_string(m.rows()));
  return m.row(0);
}

void write_cost(const std::string& path, const IntVector& c,
                bool modern_header) {
  IntMatrix m(1, c.size());
  for (std::size_t j = 0; j < c.size(); ++j) m.at(0, j) = c[j];
  write_matrix(path, m, modern_header);
}

LatteSystem parse_latte(const std::string& text) {
  std::vector<std::string> toks = tokens_of(text);
  if (toks.size() < 2) throw ParseError("latte file: missing header");
  std::size_t nrows = parse_size(toks[0]);
  std::size_t ncols = parse_size(toks[1]);
  if (nrows == 0 || ncols < 2)
    throw ParseError("latte file: need at least one row and two columns");
  if (toks.size() < 2 + nrows * ncols)
    throw ParseError("latte file: body has fewer entries than the header implies");
  const std::size_t n = ncols - 1;
  LatteSystem sys;
  sys.matrix = IntMatrix(nrows, n);
  sys.rhs = IntVector(nrows);
  std::size_t pos = 2;
  for (std::size_t i = 0; i < nrows; ++i) {
    sys.rhs[i] = parse_int(toks[pos++]);
    for (std::size_t j = 0; j < n; ++j)
      sys.matrix.at(i, j) = -parse_int(toks[pos++]);  // rows store b - a.u >= 0
  }
  std::size_t remaining = toks.size() - pos;
  if (remaining > 0) {
    // Prefer the linearity reading "k i_1 ... i_k" when it fits structurally.
    bool has_linearity = false;
    Int k0 = parse_int(toks[pos]);
    if (k0 >= 0) {
      std::size_t k = k0.convert_to<std::size_t>();
      if (1 + k == remaining || 1 + k + n == remaining) has_linearity = true;
    }
    if (has_linearity) {
      std::size_t k = k0.convert_to<std::size_t>();
      ++pos;
      for (std::size_t t = 0; t < k; ++t) {
        std::size_t idx = parse_size(toks[pos++]);
        if (idx < 1 || idx > nrows)
          throw ParseError("latte file: equality row index " +
                           std::to_string(idx) + " out of range");
        sys.equalities.insert(idx - 1);
      }
      remaining = toks.size() - pos;
    }
    if (remaining == n) {
      IntVector c(n);
      for (std::size_t j = 0; j < n; ++j) c[j] = parse_int(toks[pos++]);
      sys.cost = c;
    } else if (remaining != 0) {
      throw ParseError("latte file: malformed trailing linearity line");
    }
  }
  return sys;
}

LatteSystem read_latte(const std::string& path) {
  return parse_latte(read_file(path));
}

std::string format_maxopt(const std::vector<MaxOptimal>& points,
                          std::size_t dimension) {
  if (points.empty()) {
    std::ostringstream out;
    out << 2 * dimension << " " << 0 << "\n";
    return out.str();
  }
  IntMatrix m(points.size(), 2 * dimension);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < dimension; ++j) m.at(i, j) = points[i].point[j];
    for (std::size_t j : points[i].incr) m.at(i, dimension + j) = 1;
  }
  return format_matrix(m);
}

std::vector<MaxOptimal> parse_maxopt(const std::string& text) {
  std::vector<std::string> toks = tokens_of(text);
  if (toks.size() < 2) throw ParseError("maxopt file: missing header");
  if (parse_size(toks[1]) == 0) return {};
  IntMatrix m = parse_matrix(text);
  if (m.cols() % 2 != 0) throw ParseError("maxopt file: odd column count");
  const std::size_t n = m.cols() / 2;
  std::vector<MaxOptimal> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    MaxOptimal mo;
    mo.point = IntVector(n);
    for (std::size_t j = 0; j < n; ++j) mo.point[j] = m.at(i, j);
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, n + j) != 0) mo.incr.push_back(j);
    out.push_back(std::move(mo));
  }
  return out;
}

std::string format_polynomial(const Polynomial& p, std::size_t dimension) {
  std::ostringstream out;
  out << dimension + 1 << " " << p.terms.size() << "\n";
  for (const auto& [expo, coeff] : p.terms) {
    out << coeff;
    for (std::size_t j = 0; j < dimension; ++j) out << " " << expo[j];
    out << "\n";
  }
  return out.str();
}

Polynomial parse_polynomial(const std::string& text) {
  std::vector<std::string> toks = tokens_of(text);
  if (toks.size() < 2) throw ParseError("polynomial file: missing header");
  if (parse_size(toks[1]) == 0) return {};
  IntMatrix m = parse_matrix(text);
  Polynomial p;
  const std::size_t n = m.cols() - 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntVector expo(n);
    for (std::size_t j = 0; j < n; ++j) expo[j] = m.at(i, j + 1);
    p.terms.emplace_back(std::move(expo), m.at(i, 0));
  }
  return p;
}

Table parse_table(const std::string& text, const TableShape& shape) {
  std::vector<std::string> toks = tokens_of(text);
  if (toks.size() < 2) throw ParseError("table file: missing header");
  const std::size_t ncells = shape.cell_count();
  const std::size_t lastdim = shape.dims.back();
  std::size_t ncols = parse_size(toks[0]);
  std::size_t nrows = parse_size(toks[1]);
  if (ncols != lastdim || nrows != ncells / lastdim)
    throw ParseError("table file: header does not match the table shape");
  if (toks.size() - 2 != ncells)
    throw ParseError("table file: entry count does not match the shape");
  Table t;
  t.shape = shape;
  t.entries = RatVector(ncells);
  for (std::size_t i = 0; i < ncells; ++i) t.entries[i] = parse_rat(toks[i + 2]);
  return t;
}

Table read_table(const std::string& path, const TableShape& shape) {
  return parse_table(read_file(path), shape);
}

std::string format_table(const Table& t) {
  const std::size_t lastdim = t.shape.dims.back();
  std::ostringstream out;
  out << lastdim << " " << t.shape.cell_count() / lastdim << "\n";
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    out << t.entries[i];
    out << ((i + 1) % lastdim == 0 ? "\n" : " ");
  }
  return out.str();
}

}  // namespace ipts
