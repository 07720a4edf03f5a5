#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ipts/matrix.hpp"
#include "ipts/testset.hpp"
#include "ipts/vector.hpp"

namespace ipts {

/// Shape (d_1, ..., d_n) of an n-way table, every d_i >= 2. Cells are
/// ordered lexicographically with index 1 slowest.
struct TableShape {
  std::vector<std::size_t> dims;

  std::size_t cell_count() const {
    std::size_t c = 1;
    for (std::size_t d : dims) c *= d;
    return c;
  }
  /// Flat position of a 1-based multi-index.
  std::size_t flat_index(const std::vector<std::size_t>& cell) const;
  /// 1-based multi-index of a flat position.
  std::vector<std::size_t> multi_index(std::size_t flat) const;
};

/// Hierarchical model: the marginals released are those of the facets
/// F_1, ..., F_k (nonempty subsets of {1..n}, stored 1-based).
struct HierarchicalModel {
  TableShape shape;
  std::vector<std::vector<std::size_t>> facets;
};

/// Dense table over the cells of a shape; entries are exact rationals so a
/// single type carries both integer and fractional tables.
struct Table {
  TableShape shape;
  RatVector entries;

  bool is_integral() const;
  IntVector integral_entries() const;  // throws when not integral
};

/// 0/1 marginal matrix of the model: one row block per facet (in facet list
/// order), marginal indices lexicographic within a block, columns in cell
/// order. Entry 1 iff the cell's restriction to the facet equals the row's
/// marginal index.
IntMatrix model_matrix(const HierarchicalModel& m);

/// Stacked marginal vector model_matrix(m) * entries, exact.
RatVector marginals(const Table& t, const HierarchicalModel& m);

enum class BoundsBackend {
  enumerate,  ///< exhaustive fiber search (default)
  graver,     ///< augmentation with a precomputed Graver basis
};

/// Exact min and max of one cell over all nonnegative integer tables with
/// marginal vector b. Throws InfeasibleMarginalsError when no integer table
/// attains b. `cell` is a 1-based multi-index. With the graver backend a
/// precomputed basis must be supplied.
std::pair<Int, Int> table_bounds(const HierarchicalModel& m,
                                 const IntVector& b,
                                 const std::vector<std::size_t>& cell,
                                 BoundsBackend backend = BoundsBackend::enumerate,
                                 const GraverBasis* gr = nullptr);

/// Exact LP relaxation bounds of one cell over nonnegative real tables with
/// marginal vector b.
std::pair<Rat, Rat> lp_table_bounds(const HierarchicalModel& m,
                                    const RatVector& b,
                                    const std::vector<std::size_t>& cell);

}  // namespace ipts
