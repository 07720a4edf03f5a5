#include "ipts/enumerate.hpp"

#include <algorithm>
#include <cstddef>

#include "ipts/errors.hpp"
#include "ipts/kernel.hpp"
#include "ipts/lp.hpp"

namespace ipts {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) == (b < 0))) ++q;
  return q;
}

// Depth-first search over the equality rows of A plus one strictly positive
// combination of them, which bounds every variable.
struct Searcher {
  const std::function<bool(const IntVector&)>* visit;
  std::size_t n;
  std::vector<IntVector> rows;
  std::vector<std::vector<bool>> pos_later, neg_later;
  std::vector<Int> res;
  IntVector point;
  bool stopped = false;

  // Sign summaries of coefficients strictly after column i, for i in [0, n).
  void prepare() {
    pos_later.assign(rows.size(), std::vector<bool>(n, false));
    neg_later.assign(rows.size(), std::vector<bool>(n, false));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      bool pos = false, neg = false;
      for (std::size_t i = n; i-- > 0;) {
        pos_later[r][i] = pos;
        neg_later[r][i] = neg;
        pos = pos || rows[r][i] > 0;
        neg = neg || rows[r][i] < 0;
      }
    }
  }

  void dfs(std::size_t depth) {
    if (stopped) return;
    if (depth == n) {
      for (const Int& r : res)
        if (r != 0) return;
      if (!(*visit)(point)) stopped = true;
      return;
    }
    // Exact interval for point[depth] from rows whose later coefficients
    // have a uniform sign; the positive certificate row always applies.
    bool empty = false;
    bool have_hi = false;
    Int lo = 0, hi = 0;
    for (std::size_t r = 0; r < rows.size() && !empty; ++r) {
      const Int& a = rows[r][depth];
      bool spos = pos_later[r][depth], sneg = neg_later[r][depth];
      if (a == 0) {
        if (!sneg && res[r] < 0) empty = true;
        if (!spos && res[r] > 0) empty = true;
        continue;
      }
      if (!sneg) {  // remaining sum >= 0, so a * u <= res
        if (a > 0) {
          Int h = floor_div(res[r], a);
          if (!have_hi || h < hi) hi = h, have_hi = true;
        } else {
          Int l = ceil_div(res[r], a);
          if (l > lo) lo = l;
        }
      }
      if (!spos) {  // remaining sum <= 0, so a * u >= res
        if (a > 0) {
          Int l = ceil_div(res[r], a);
          if (l > lo) lo = l;
        } else {
          Int h = floor_div(res[r], a);
          if (!have_hi || h < hi) hi = h, have_hi = true;
        }
      }
    }
    if (empty || !have_hi || hi < lo) return;
    for (Int v = lo; v <= hi && !stopped; ++v) {
      point[depth] = v;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r][depth] != 0) res[r] -= rows[r][depth] * v;
      dfs(depth + 1);
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r][depth] != 0) res[r] += rows[r][depth] * v;
    }
    point[depth] = 0;
  }
};

}  // namespace

void for_each_fiber_point(const Fiber& f,
                          const std::function<bool(const IntVector&)>& visit) {
  const IntMatrix& a = f.matrix;
  const std::size_t n = a.cols();
  const std::size_t d = a.rows();
  if (f.rhs.size() != d)
    throw std::invalid_argument("fiber: rhs length mismatch");

  auto cert = positive_row_combination(a);
  if (!cert)
    throw UnboundedFiberError(
        "fiber is unbounded: ker(A) meets the nonnegative orthant");
  Int scale = 1;
  for (std::size_t i = 0; i < d; ++i)
    scale = boost::multiprecision::lcm(scale, Int(denominator((*cert)[i])));
  std::vector<Int> y(d);
  for (std::size_t i = 0; i < d; ++i)
    y[i] = Int(numerator((*cert)[i])) * (scale / Int(denominator((*cert)[i])));

  // Echelonize the equality system so that trailing variables are pinned
  // analytically instead of searched.
  std::vector<IntVector> system = echelon_system_trailing(a, f.rhs);
  Searcher s;
  s.visit = &visit;
  s.n = n;
  for (const IntVector& row : system) {
    IntVector coeffs(n);
    bool zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      coeffs[j] = row[j];
      zero = zero && row[j] == 0;
    }
    if (zero) return;  // 0 = nonzero: the fiber is empty
    s.rows.push_back(std::move(coeffs));
    s.res.push_back(row[n]);
  }
  IntVector w(n);
  Int wrhs = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < d; ++i) w[j] += y[i] * a.at(i, j);
  for (std::size_t i = 0; i < d; ++i) wrhs += y[i] * f.rhs[i];
  s.rows.push_back(w);
  s.res.push_back(wrhs);
  s.point = IntVector(n);
  s.prepare();
  s.dfs(0);
}

Int count_feasible(const Fiber& f) {
  Int count = 0;
  for_each_fiber_point(f, [&](const IntVector&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<IntVector> enumerate_optimal(const Fiber& f, const IntVector& c) {
  if (c.size() != f.matrix.cols())
    throw std::invalid_argument("enumerate_optimal: cost length mismatch");
  bool any = false;
  Int best = 0;
  std::vector<IntVector> points;
  for_each_fiber_point(f, [&](const IntVector& u) {
    Int v = c.dot(u);
    if (!any || v < best) {
      best = v;
      points.clear();
      any = true;
    }
    if (v == best) points.push_back(u);
    return true;
  });
  std::sort(points.begin(), points.end(), lex_less);
  return points;
}

std::optional<IntVector> find_feasible(const Fiber& f) {
  std::optional<IntVector> found;
  for_each_fiber_point(f, [&](const IntVector& u) {
    found = u;
    return false;
  });
  return found;
}

}  // namespace ipts
