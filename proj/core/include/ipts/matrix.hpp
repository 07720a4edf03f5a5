#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ipts/vector.hpp"

namespace ipts {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("IntMatrix: dimensions must be positive");
  }
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("IntMatrix: dimensions must be positive");
    if (e_.size() != rows * cols)
      throw std::invalid_argument("IntMatrix: entry count mismatch");
  }
  /// Convenience constructor from nested init-lists of small integers.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0)
      throw std::invalid_argument("IntMatrix: dimensions must be positive");
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw std::invalid_argument("IntMatrix: ragged rows");
      for (long long x : r) e_.emplace_back(x);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    IntVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  IntVector col(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  IntVector mul(const IntVector& v) const {
    if (v.size() != cols_)
      throw std::invalid_argument("IntMatrix::mul: length mismatch");
    IntVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  RatVector mul(const RatVector& v) const {
    if (v.size() != cols_)
      throw std::invalid_argument("IntMatrix::mul: length mismatch");
    RatVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rat s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s += Rat(at(i, j)) * v[j];
      r[i] = s;
    }
    return r;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  /// Negates the columns listed in `cols` (0-based); used for sign flips.
  IntMatrix with_negated_columns(const std::vector<std::size_t>& cols) const {
    IntMatrix m = *this;
    for (std::size_t j : cols)
      for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = -m.at(i, j);
    return m;
  }

  bool operator==(const IntMatrix& o) const = default;

  /// Cheap structural fingerprint (FNV-1a over dimensions and entries).
  std::uint64_t fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(rows_);
    mix(cols_);
    for (const Int& x : e_) {
      mix(static_cast<std::uint64_t>(x.sign() + 2));
      mix(Int(abs_int(x) % 1000000007).convert_to<std::uint64_t>());
    }
    return h;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

}  // namespace ipts
