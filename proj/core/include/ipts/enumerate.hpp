#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ipts/matrix.hpp"
#include "ipts/vector.hpp"

namespace ipts {

/// The fiber { u in N^n : A u = rhs } of one right hand side.
struct Fiber {
  IntMatrix matrix;
  IntVector rhs;
};

/// Exact number of lattice points of a bounded fiber, by depth-first search
/// with exact interval pruning. Throws UnboundedFiberError when
/// ker(A) intersect N^n != {0}.
Int count_feasible(const Fiber& f);

/// All cost-minimal fiber points, sorted lexicographically.
std::vector<IntVector> enumerate_optimal(const Fiber& f, const IntVector& c);

/// Some fiber point (first hit of the search order), or nullopt when the
/// fiber is empty.
std::optional<IntVector> find_feasible(const Fiber& f);

/// Visits every fiber point in search order; stops early when the callback
/// returns false. Shared engine behind the operations above.
void for_each_fiber_point(const Fiber& f,
                          const std::function<bool(const IntVector&)>& visit);

}  // namespace ipts
