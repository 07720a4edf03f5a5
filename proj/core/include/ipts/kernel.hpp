#pragma once

#include <vector>

#include "ipts/matrix.hpp"
#include "ipts/vector.hpp"

namespace ipts {

/// Lattice basis of ker_Z(A) = { v in Z^n : A v = 0 }, computed by exact
/// integer row elimination (Hermite-normal-form style) on [A^T | I]. The
/// result spans the full kernel lattice (it is saturated), has
/// n - rank(A) elements, and is deterministic: each vector has its first
/// nonzero entry positive and the list is sorted lexicographically.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

/// Rank of A over Q, from the same elimination.
std::size_t rank(const IntMatrix& a);

/// Exact membership test: is v an integer combination of the given vectors?
bool lattice_contains(const std::vector<IntVector>& generators,
                      const IntVector& v);

/// Equivalent equality system for A u = b, echelonized by unimodular row
/// operations with pivots preferring trailing columns. Each returned row has
/// the coefficients in entries 0..n-1 and the right hand side at entry n;
/// zero coefficient rows with a nonzero right hand side witness an
/// inconsistent system. Identically zero rows are dropped.
std::vector<IntVector> echelon_system_trailing(const IntMatrix& a,
                                               const IntVector& b);

}  // namespace ipts
