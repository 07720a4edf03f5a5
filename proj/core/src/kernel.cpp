#include "ipts/kernel.hpp"

#include <algorithm>
#include <cstddef>

namespace ipts {

namespace {

// Row echelon form over Z by repeated quotient subtraction. Rows of `m` are
// reduced in place; the same operations are mirrored on `shadow` when given.
// Returns the pivot column of each echelon row, in order.
std::vector<std::size_t> integer_echelon(std::vector<IntVector>& m,
                                         std::vector<IntVector>* shadow) {
  const std::size_t nrows = m.size();
  const std::size_t ncols = nrows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    // Eliminate column c below row r until at most one nonzero entry is left.
    for (;;) {
      std::size_t best = nrows;
      for (std::size_t i = r; i < nrows; ++i) {
        if (m[i][c] == 0) continue;
        if (best == nrows || abs_int(m[i][c]) < abs_int(m[best][c])) best = i;
      }
      if (best == nrows) break;
      if (best != r) {
        std::swap(m[best], m[r]);
        if (shadow) std::swap((*shadow)[best], (*shadow)[r]);
      }
      bool clean = true;
      for (std::size_t i = r + 1; i < nrows; ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[r][c];
        if (q != 0) {
          for (std::size_t j = 0; j < ncols; ++j) m[i][j] -= q * m[r][j];
          if (shadow)
            for (std::size_t j = 0; j < (*shadow)[i].size(); ++j)
              (*shadow)[i][j] -= q * (*shadow)[r][j];
        }
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[r][c] != 0) {
      if (m[r][c] < 0) {
        m[r] = -m[r];
        if (shadow) (*shadow)[r] = -(*shadow)[r];
      }
      pivot_cols.push_back(c);
      ++r;
    }
  }
  return pivot_cols;
}

IntVector sign_canonical(IntVector v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      if (v[i] < 0) v = -v;
      break;
    }
  }
  return v;
}

}  // namespace

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<IntVector> m;
  m.reserve(n);
  for (std::size_t j = 0; j < n; ++j) m.push_back(a.col(j));
  std::vector<IntVector> u;
  u.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    u.push_back(e);
  }
  std::vector<std::size_t> pivots = integer_echelon(m, &u);
  std::vector<IntVector> basis;
  for (std::size_t i = pivots.size(); i < n; ++i)
    basis.push_back(sign_canonical(u[i]));
  std::sort(basis.begin(), basis.end(), lex_less);
  return basis;
}

std::size_t rank(const IntMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<IntVector> m;
  m.reserve(n);
  for (std::size_t j = 0; j < n; ++j) m.push_back(a.col(j));
  return integer_echelon(m, nullptr).size();
}

std::vector<IntVector> echelon_system_trailing(const IntMatrix& a,
                                               const IntVector& b) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != d)
    throw std::invalid_argument("echelon_system_trailing: rhs length");
  // Reverse the coefficient columns so that the echelon pivots land on the
  // trailing variables; the right hand side rides along as the last column.
  std::vector<IntVector> m;
  m.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    IntVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = a.at(i, n - 1 - j);
    row[n] = b[i];
    m.push_back(std::move(row));
  }
  integer_echelon(m, nullptr);
  std::vector<IntVector> out;
  for (const IntVector& row : m) {
    if (row.is_zero()) continue;
    IntVector r(n + 1);
    for (std::size_t j = 0; j < n; ++j) r[j] = row[n - 1 - j];
    r[n] = row[n];
    out.push_back(std::move(r));
  }
  return out;
}

bool lattice_contains(const std::vector<IntVector>& generators,
                      const IntVector& v) {
  if (generators.empty()) return v.is_zero();
  std::vector<IntVector> m = generators;
  std::vector<std::size_t> pivots = integer_echelon(m, nullptr);
  IntVector rest = v;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const std::size_t c = pivots[i];
    if (rest[c] % m[i][c] != 0) return false;
    Int q = rest[c] / m[i][c];
    if (q != 0)
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= q * m[i][j];
  }
  return rest.is_zero();
}

}  // namespace ipts
