#include "ipts/tables.hpp"

#include <algorithm>
#include <stdexcept>

#include "ipts/enumerate.hpp"
#include "ipts/errors.hpp"
#include "ipts/lp.hpp"
#include "ipts/order.hpp"

namespace ipts {

namespace {

void validate_shape(const TableShape& s) {
  if (s.dims.empty()) throw std::invalid_argument("table shape: empty");
  for (std::size_t d : s.dims)
    if (d < 2) throw std::invalid_argument("table shape: every d_i must be >= 2");
}

std::vector<std::vector<std::size_t>> normalized_facets(
    const HierarchicalModel& m) {
  const std::size_t n = m.shape.dims.size();
  if (m.facets.empty())
    throw std::invalid_argument("hierarchical model: no facets");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : m.facets) {
    if (f.empty()) throw std::invalid_argument("hierarchical model: empty facet");
    std::vector<std::size_t> s = f;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("hierarchical model: repeated index in facet");
    if (s.front() < 1 || s.back() > n)
      throw std::invalid_argument("hierarchical model: facet index out of range");
    if (std::find(out.begin(), out.end(), s) != out.end())
      throw std::invalid_argument("hierarchical model: duplicate facet");
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::size_t TableShape::flat_index(const std::vector<std::size_t>& cell) const {
  if (cell.size() != dims.size())
    throw std::invalid_argument("cell index: wrong arity");
  std::size_t flat = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (cell[j] < 1 || cell[j] > dims[j])
      throw std::invalid_argument("cell index: out of range");
    flat = flat * dims[j] + (cell[j] - 1);
  }
  return flat;
}

std::vector<std::size_t> TableShape::multi_index(std::size_t flat) const {
  std::vector<std::size_t> cell(dims.size());
  for (std::size_t j = dims.size(); j-- > 0;) {
    cell[j] = flat % dims[j] + 1;
    flat /= dims[j];
  }
  return cell;
}

bool Table::is_integral() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (denominator(entries[i]) != 1) return false;
  return true;
}

IntVector Table::integral_entries() const {
  IntVector v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (denominator(entries[i]) != 1)
      throw std::invalid_argument("table: entry is not an integer");
    v[i] = Int(numerator(entries[i]));
  }
  return v;
}

IntMatrix model_matrix(const HierarchicalModel& m) {
  validate_shape(m.shape);
  auto facets = normalized_facets(m);
  const std::size_t ncells = m.shape.cell_count();
  std::size_t nrows = 0;
  for (const auto& f : facets) {
    std::size_t block = 1;
    for (std::size_t j : f) block *= m.shape.dims[j - 1];
    nrows += block;
  }
  IntMatrix a(nrows, ncells);
  std::size_t row0 = 0;
  for (const auto& f : facets) {
    std::size_t block = 1;
    for (std::size_t j : f) block *= m.shape.dims[j - 1];
    for (std::size_t col = 0; col < ncells; ++col) {
      std::vector<std::size_t> cell = m.shape.multi_index(col);
      // Marginal index of this cell within the block, lexicographic with the
      // facet's smallest coordinate slowest.
      std::size_t idx = 0;
      for (std::size_t j : f) idx = idx * m.shape.dims[j - 1] + (cell[j - 1] - 1);
      a.at(row0 + idx, col) = 1;
    }
    row0 += block;
  }
  return a;
}

RatVector marginals(const Table& t, const HierarchicalModel& m) {
  if (t.shape.dims != m.shape.dims)
    throw std::invalid_argument("marginals: table shape does not match model");
  if (t.entries.size() != t.shape.cell_count())
    throw std::invalid_argument("marginals: entry count mismatch");
  return model_matrix(m).mul(t.entries);
}

std::pair<Int, Int> table_bounds(const HierarchicalModel& m, const IntVector& b,
                                 const std::vector<std::size_t>& cell,
                                 BoundsBackend backend, const GraverBasis* gr) {
  IntMatrix a = model_matrix(m);
  if (b.size() != a.rows())
    throw std::invalid_argument("table_bounds: marginal vector length mismatch");
  const std::size_t flat = m.shape.flat_index(cell);
  Fiber fiber{a, b};
  std::optional<IntVector> start = find_feasible(fiber);
  if (!start)
    throw InfeasibleMarginalsError(
        "no nonnegative integer table attains the given marginals");
  if (backend == BoundsBackend::enumerate) {
    Int lo = (*start)[flat], hi = (*start)[flat];
    for_each_fiber_point(fiber, [&](const IntVector& u) {
      if (u[flat] < lo) lo = u[flat];
      if (u[flat] > hi) hi = u[flat];
      return true;
    });
    return {lo, hi};
  }
  GraverBasis local;
  if (!gr) {
    local = graver(a);
    gr = &local;
  }
  // The Graver basis is a universal test set: orienting it by the tie-broken
  // cell cost turns augmentation into plain normal-form reduction.
  auto optimize = [&](const IntVector& cost) {
    TermOrder order(cost);
    GroebnerBasis oriented{{}, order, a.fingerprint()};
    for (const IntVector& g : gr->elements)
      oriented.elements.push_back(order.is_descent(g) ? g : -g);
    return reduce(*start, oriented);
  };
  IntVector cost(a.cols());
  cost[flat] = 1;
  Int lo = optimize(cost)[flat];
  cost[flat] = -1;
  Int hi = optimize(cost)[flat];
  return {lo, hi};
}

std::pair<Rat, Rat> lp_table_bounds(const HierarchicalModel& m,
                                    const RatVector& b,
                                    const std::vector<std::size_t>& cell) {
  IntMatrix a = model_matrix(m);
  if (b.size() != a.rows())
    throw std::invalid_argument("lp_table_bounds: marginal vector length mismatch");
  const std::size_t flat = m.shape.flat_index(cell);
  LPProblem p;
  p.equalities = a;
  p.rhs = b;
  p.objective = RatVector(a.cols());
  p.objective[flat] = 1;
  p.sense = Sense::minimize;
  LPResult lo = lp_solve(p);
  if (lo.status == LPStatus::infeasible)
    throw InfeasibleMarginalsError("no nonnegative real table attains the marginals");
  p.sense = Sense::maximize;
  LPResult hi = lp_solve(p);
  if (lo.status != LPStatus::optimal || hi.status != LPStatus::optimal)
    throw UnboundedAuxLpError("cell bound LP unbounded");
  return {lo.value, hi.value};
}

}  // namespace ipts
