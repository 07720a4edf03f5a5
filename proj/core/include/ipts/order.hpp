#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ipts/vector.hpp"

namespace ipts {

enum class Ordering { less, equal, greater };

/// Total order on N^n: compare cost values first, break ties
/// lexicographically along a fixed coordinate permutation. The tie-break
/// makes every instance behave as if the cost were generic, and the order is
/// compatible with addition: u < v implies u + w < v + w.
class TermOrder {
 public:
  /// Default tie-break: lexicographic on the reversed coordinate order,
  /// which reproduces the reference bases for non-generic costs.
  explicit TermOrder(IntVector cost)
      : cost_(std::move(cost)), tiebreak_(cost_.size()) {
    for (std::size_t i = 0; i < tiebreak_.size(); ++i)
      tiebreak_[i] = tiebreak_.size() - 1 - i;
  }

  TermOrder(IntVector cost, std::vector<std::size_t> tiebreak)
      : cost_(std::move(cost)), tiebreak_(std::move(tiebreak)) {
    if (tiebreak_.size() != cost_.size())
      throw std::invalid_argument("TermOrder: tie-break length mismatch");
    std::vector<bool> seen(tiebreak_.size(), false);
    for (std::size_t p : tiebreak_) {
      if (p >= tiebreak_.size() || seen[p])
        throw std::invalid_argument("TermOrder: tie-break is not a permutation");
      seen[p] = true;
    }
  }

  const IntVector& cost() const { return cost_; }
  const std::vector<std::size_t>& tiebreak() const { return tiebreak_; }
  std::size_t dimension() const { return cost_.size(); }

  Ordering compare(const IntVector& u, const IntVector& v) const {
    if (u.size() != cost_.size() || v.size() != cost_.size())
      throw std::invalid_argument("TermOrder::compare: length mismatch");
    Int cu = cost_.dot(u), cv = cost_.dot(v);
    if (cu != cv) return cu < cv ? Ordering::less : Ordering::greater;
    for (std::size_t p : tiebreak_) {
      if (u[p] != v[p]) return u[p] < v[p] ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
  }

  bool less(const IntVector& u, const IntVector& v) const {
    return compare(u, v) == Ordering::less;
  }

  /// True when the kernel vector g improves: g+ is strictly above g- in the
  /// order, i.e. applying the move u -> u - g lowers u.
  bool is_descent(const IntVector& g) const {
    auto [pos, neg] = g.decompose();
    return compare(pos, neg) == Ordering::greater;
  }

 private:
  IntVector cost_;
  std::vector<std::size_t> tiebreak_;
};

}  // namespace ipts
