#include "ipts/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <vector>

#include "ipts/errors.hpp"

namespace ipts {

namespace {

// Dense tableau for the revised-free simplex: T = B^-1 A kept explicitly,
// rhs = B^-1 b, with the basis columns always forming an identity.
struct Tableau {
  std::size_t nrows = 0, ncols = 0;
  std::vector<std::vector<Rat>> t;
  std::vector<Rat> rhs;
  std::vector<std::size_t> basis;  // basic column per row

  void pivot(std::size_t pr, std::size_t pc) {
    Rat p = t[pr][pc];
    for (std::size_t j = 0; j < ncols; ++j) t[pr][j] /= p;
    rhs[pr] /= p;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == pr) continue;
      Rat f = t[i][pc];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ncols; ++j) t[i][j] -= f * t[pr][j];
      rhs[i] -= f * rhs[pr];
    }
    basis[pr] = pc;
  }
};

enum class CoreStatus { optimal, unbounded };

// Minimizes cost over the tableau with Bland's rule: entering column is the
// lowest-index one with negative reduced cost, leaving row breaks ratio ties
// by lowest basic column index. `eligible` masks columns allowed to enter.
CoreStatus simplex_core(Tableau& tab, const std::vector<Rat>& cost,
                        const std::vector<bool>& eligible) {
  for (;;) {
    // reduced costs r_j = c_j - c_B . T_j
    std::size_t enter = tab.ncols;
    for (std::size_t j = 0; j < tab.ncols && enter == tab.ncols; ++j) {
      if (!eligible[j]) continue;
      Rat r = cost[j];
      for (std::size_t i = 0; i < tab.nrows; ++i) {
        const Rat& cb = cost[tab.basis[i]];
        if (cb != 0 && tab.t[i][j] != 0) r -= cb * tab.t[i][j];
      }
      if (r < 0) enter = j;
    }
    if (enter == tab.ncols) return CoreStatus::optimal;

    std::size_t leave = tab.nrows;
    Rat best_ratio;
    for (std::size_t i = 0; i < tab.nrows; ++i) {
      if (tab.t[i][enter] <= 0) continue;
      Rat ratio = tab.rhs[i] / tab.t[i][enter];
      if (leave == tab.nrows || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[i] < tab.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == tab.nrows) return CoreStatus::unbounded;
    tab.pivot(leave, enter);
  }
}

}  // namespace

LPResult lp_solve(const LPProblem& p) {
  const std::size_t d = p.equalities.rows();
  const std::size_t n = p.equalities.cols();
  if (p.rhs.size() != d) throw std::invalid_argument("lp_solve: rhs length");
  if (p.objective.size() != n)
    throw std::invalid_argument("lp_solve: objective length");
  std::vector<VarStatus> status = p.status;
  if (status.empty()) status.assign(n, VarStatus::nonnegative);
  if (status.size() != n)
    throw std::invalid_argument("lp_solve: status length");

  // Split free variables into differences of nonnegative ones.
  struct Col {
    std::size_t var;
    int sign;
  };
  std::vector<Col> cols;
  for (std::size_t j = 0; j < n; ++j) {
    cols.push_back({j, +1});
    if (status[j] == VarStatus::free_var) cols.push_back({j, -1});
  }
  const std::size_t nreal = cols.size();

  Tableau tab;
  tab.nrows = d;
  tab.ncols = nreal + d;  // artificials appended
  tab.t.assign(d, std::vector<Rat>(tab.ncols, Rat(0)));
  tab.rhs.assign(d, Rat(0));
  tab.basis.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    int flip = p.rhs[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < nreal; ++j)
      tab.t[i][j] = Rat(p.equalities.at(i, cols[j].var)) * cols[j].sign * flip;
    tab.rhs[i] = p.rhs[i] * flip;
    tab.t[i][nreal + i] = 1;
    tab.basis[i] = nreal + i;
  }

  // Phase one: drive the artificial variables to zero.
  std::vector<Rat> phase1_cost(tab.ncols, Rat(0));
  for (std::size_t j = nreal; j < tab.ncols; ++j) phase1_cost[j] = 1;
  std::vector<bool> all(tab.ncols, true);
  simplex_core(tab, phase1_cost, all);
  Rat infeas = 0;
  for (std::size_t i = 0; i < d; ++i)
    if (tab.basis[i] >= nreal) infeas += tab.rhs[i];
  if (infeas != 0) return LPResult{LPStatus::infeasible, Rat(0), RatVector()};

  // Pivot out artificials still basic at zero; rows that cannot be pivoted
  // are redundant constraints and get dropped.
  for (std::size_t i = 0; i < tab.nrows;) {
    if (tab.basis[i] < nreal) {
      ++i;
      continue;
    }
    std::size_t pc = nreal;
    for (std::size_t j = 0; j < nreal && pc == nreal; ++j)
      if (tab.t[i][j] != 0) pc = j;
    if (pc < nreal) {
      tab.pivot(i, pc);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + i);
      tab.rhs.erase(tab.rhs.begin() + i);
      tab.basis.erase(tab.basis.begin() + i);
      --tab.nrows;
    }
  }

  // Phase two on the real columns only.
  std::vector<Rat> cost(tab.ncols, Rat(0));
  for (std::size_t j = 0; j < nreal; ++j) {
    Rat c = p.objective[cols[j].var] * cols[j].sign;
    cost[j] = p.sense == Sense::maximize ? -c : c;
  }
  std::vector<bool> eligible(tab.ncols, false);
  for (std::size_t j = 0; j < nreal; ++j) eligible[j] = true;
  if (simplex_core(tab, cost, eligible) == CoreStatus::unbounded)
    return LPResult{LPStatus::unbounded, Rat(0), RatVector()};

  RatVector point(n);
  for (std::size_t i = 0; i < tab.nrows; ++i) {
    if (tab.basis[i] >= nreal) continue;
    const Col& c = cols[tab.basis[i]];
    point[c.var] += Rat(c.sign) * tab.rhs[i];
  }
  RatVector obj(n);
  for (std::size_t j = 0; j < n; ++j) obj[j] = p.objective[j];
  return LPResult{LPStatus::optimal, obj.dot(point), point};
}

Rat aux_gap_lp(const IntMatrix& a, const IntVector& c, const MaxOptimal& m) {
  const std::size_t n = a.cols();
  if (m.point.size() != n || c.size() != n)
    throw std::invalid_argument("aux_gap_lp: dimension mismatch");
  LPProblem p;
  p.equalities = a;
  p.rhs = RatVector(a.mul(m.point));
  p.objective = RatVector(c);
  p.sense = Sense::minimize;
  p.status.assign(n, VarStatus::nonnegative);
  for (std::size_t i : m.incr) p.status[i] = VarStatus::free_var;
  LPResult r = lp_solve(p);
  if (r.status == LPStatus::unbounded)
    throw UnboundedAuxLpError("auxiliary gap LP is unbounded");
  if (r.status == LPStatus::infeasible)
    throw std::logic_error("aux_gap_lp: infeasible despite feasible point");
  return Rat(c.dot(m.point)) - r.value;
}

Rat ip_gap(const IntMatrix& a, const IntVector& c) {
  GroebnerBasis g = groebner(a, TermOrder(c));
  std::vector<MaxOptimal> points = maximally_optimal(initial_ideal(g));
  // The auxiliary programs are independent; IPTS_THREADS > 1 fans them out.
  // The exact maximum is schedule independent.
  std::size_t threads = 1;
  if (const char* env = std::getenv("IPTS_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 1) threads = static_cast<std::size_t>(v);
  }
  threads = std::min(threads, std::max<std::size_t>(points.size(), 1));
  if (threads <= 1) {
    Rat best = 0;
    for (const MaxOptimal& m : points) {
      Rat v = aux_gap_lp(a, c, m);
      if (v > best) best = v;
    }
    return best;
  }
  std::vector<std::future<Rat>> parts;
  for (std::size_t t = 0; t < threads; ++t) {
    parts.push_back(std::async(std::launch::async, [&, t] {
      Rat best = 0;
      for (std::size_t i = t; i < points.size(); i += threads) {
        Rat v = aux_gap_lp(a, c, points[i]);
        if (v > best) best = v;
      }
      return best;
    }));
  }
  Rat best = 0;
  for (auto& part : parts) {
    Rat v = part.get();
    if (v > best) best = v;
  }
  return best;
}

std::optional<RatVector> positive_row_combination(const IntMatrix& a) {
  // Feasibility of A^T y - s = 1, s >= 0, y free.
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  IntMatrix sys(n, d + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) sys.at(i, j) = a.at(j, i);
    sys.at(i, d + i) = -1;
  }
  LPProblem p;
  p.equalities = sys;
  p.rhs = RatVector(n);
  for (std::size_t i = 0; i < n; ++i) p.rhs[i] = 1;
  p.objective = RatVector(d + n);
  p.status.assign(d + n, VarStatus::nonnegative);
  for (std::size_t j = 0; j < d; ++j) p.status[j] = VarStatus::free_var;
  LPResult r = lp_solve(p);
  if (r.status != LPStatus::optimal) return std::nullopt;
  RatVector y(d);
  for (std::size_t j = 0; j < d; ++j) y[j] = r.point[j];
  return y;
}

std::optional<Rat> min_cost_on_kernel_directions(const IntMatrix& a,
                                                 const IntVector& c) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  IntMatrix sys(d + 1, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) sys.at(i, j) = a.at(i, j);
  for (std::size_t j = 0; j < n; ++j) sys.at(d, j) = 1;
  LPProblem p;
  p.equalities = sys;
  p.rhs = RatVector(d + 1);
  p.rhs[d] = 1;
  p.objective = RatVector(c);
  p.sense = Sense::minimize;
  LPResult r = lp_solve(p);
  if (r.status == LPStatus::infeasible) return std::nullopt;
  if (r.status == LPStatus::unbounded)
    throw std::logic_error("normalized kernel program cannot be unbounded");
  return r.value;
}

}  // namespace ipts
