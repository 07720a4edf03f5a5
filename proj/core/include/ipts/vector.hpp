#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ipts/scalar.hpp"

namespace ipts {

/// Integer vector in Z^n. Length is fixed at construction; arithmetic is
/// only defined between vectors of equal length.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t n) : e_(n) {}
  IntVector(std::vector<Int> entries) : e_(std::move(entries)) {}
  IntVector(std::initializer_list<long long> xs) {
    e_.reserve(xs.size());
    for (long long x : xs) e_.emplace_back(x);
  }

  std::size_t size() const { return e_.size(); }
  const Int& operator[](std::size_t i) const { return e_[i]; }
  Int& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Int>& entries() const { return e_; }

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  bool operator==(const IntVector& o) const = default;

  IntVector& operator+=(const IntVector& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator-(const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
  }

  Int dot(const IntVector& o) const {
    check_same_size(o);
    Int s = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) s += e_[i] * o.e_[i];
    return s;
  }

  /// Splits into (g+, g-) with g = g+ - g-, both nonnegative and with
  /// disjoint supports: min(g+_i, g-_i) = 0 for every i.
  std::pair<IntVector, IntVector> decompose() const {
    IntVector pos(e_.size()), neg(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > 0)
        pos[i] = e_[i];
      else
        neg[i] = -e_[i];
    }
    return {pos, neg};
  }

  IntVector positive_part() const { return decompose().first; }
  IntVector negative_part() const { return decompose().second; }

  bool is_zero() const {
    for (const Int& x : e_)
      if (x != 0) return false;
    return true;
  }
  bool is_nonnegative() const {
    for (const Int& x : e_)
      if (x < 0) return false;
    return true;
  }

  Int one_norm() const {
    Int s = 0;
    for (const Int& x : e_) s += abs_int(x);
    return s;
  }

 private:
  void check_same_size(const IntVector& o) const {
    if (e_.size() != o.e_.size())
      throw std::invalid_argument("IntVector: length mismatch");
  }

  std::vector<Int> e_;
};

/// a <= b componentwise. For nonnegative vectors this is exactly
/// "x^a divides x^b".
inline bool componentwise_leq(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("componentwise_leq: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Strict lexicographic order on entries, used for canonical sorting.
inline bool lex_less(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

/// Exact rational vector; every entry is in lowest terms with positive
/// denominator (maintained by the scalar type).
class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t n) : e_(n) {}
  RatVector(std::vector<Rat> entries) : e_(std::move(entries)) {}
  RatVector(std::initializer_list<long long> xs) {
    e_.reserve(xs.size());
    for (long long x : xs) e_.emplace_back(x);
  }
  explicit RatVector(const IntVector& v) {
    e_.reserve(v.size());
    for (const Int& x : v) e_.emplace_back(x);
  }

  std::size_t size() const { return e_.size(); }
  const Rat& operator[](std::size_t i) const { return e_[i]; }
  Rat& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Rat>& entries() const { return e_; }

  bool operator==(const RatVector& o) const = default;

  Rat dot(const RatVector& o) const {
    if (e_.size() != o.size())
      throw std::invalid_argument("RatVector: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) s += e_[i] * o.e_[i];
    return s;
  }

 private:
  std::vector<Rat> e_;
};

}  // namespace ipts
