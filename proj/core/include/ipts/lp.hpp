#pragma once

#include <optional>
#include <vector>

#include "ipts/matrix.hpp"
#include "ipts/staircase.hpp"
#include "ipts/vector.hpp"

namespace ipts {

enum class VarStatus { nonnegative, free_var };
enum class Sense { minimize, maximize };

/// Equality-form linear program: optimize objective . x subject to
/// A x = rhs with per-variable sign status.
struct LPProblem {
  IntMatrix equalities;
  RatVector rhs;
  RatVector objective;
  Sense sense = Sense::minimize;
  std::vector<VarStatus> status;  // empty means all nonnegative
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  Rat value;        // set when optimal
  RatVector point;  // set when optimal; satisfies all constraints exactly
};

/// Exact two-phase dense simplex with Bland's anti-cycling rule. Never uses
/// floating point; infeasible and unbounded are reported as statuses.
LPResult lp_solve(const LPProblem& p);

/// Optimal value of the auxiliary program attached to a maximally optimal
/// point u: maximize c (u - v) subject to A (u - v) = 0 with v_i >= 0 for
/// i not in incr(u) and v_i free otherwise. Throws UnboundedAuxLpError if
/// the program is unbounded.
Rat aux_gap_lp(const IntMatrix& a, const IntVector& c, const MaxOptimal& m);

/// Integer programming gap of the family (A, c): the maximum of IPopt(b) -
/// LPopt(b) over feasible right hand sides, computed as the maximum of the
/// auxiliary LP values over all maximally optimal points.
Rat ip_gap(const IntMatrix& a, const IntVector& c);

/// Stiemke certificate: a rational y with y^T A >= 1 componentwise, or
/// nullopt when none exists. Existence is equivalent to
/// ker(A) intersect N^n = {0}, i.e. every fiber of A is finite.
std::optional<RatVector> positive_row_combination(const IntMatrix& a);

/// min { c v : A v = 0, v >= 0, sum v = 1 }, or nullopt when the program is
/// infeasible (trivial nonnegative kernel). Used to decide whether a cost
/// vector is bounded below on every fiber.
std::optional<Rat> min_cost_on_kernel_directions(const IntMatrix& a,
                                                 const IntVector& c);

}  // namespace ipts
