#pragma once

#include <cstdint>
#include <vector>

#include "ipts/matrix.hpp"
#include "ipts/order.hpp"
#include "ipts/vector.hpp"

namespace ipts {

/// The unique reduced Groebner basis of an (A, c) family. Every element g
/// satisfies A g = 0 and is oriented so that g+ is strictly above g- in the
/// term order; elements are sorted by the order on their positive parts.
struct GroebnerBasis {
  std::vector<IntVector> elements;
  TermOrder order;
  std::uint64_t matrix_fingerprint = 0;
};

/// Minimal generating set of the semigroup ker_N(A); all elements are
/// nonnegative, none dominates another componentwise, sorted
/// lexicographically.
struct HilbertBasis {
  std::vector<IntVector> elements;
};

/// One representative per +/- pair (first nonzero entry positive), sorted
/// lexicographically. Equals the union over all sign orthants of the
/// orthant Hilbert bases, mapped back into ker_Z(A).
struct GraverBasis {
  std::vector<IntVector> elements;
};

/// Reduced Groebner basis for the family min { c u : A u = b, u in N^n }.
/// Throws UnboundedOrderError when some nonzero v >= 0 in ker(A) has
/// c v <= 0, i.e. the order is not bounded below on every fiber.
GroebnerBasis groebner(const IntMatrix& a, const TermOrder& order);

/// Normal form: repeatedly subtracts applicable basis elements (first
/// applicable in canonical order) until none applies. The result is the
/// unique optimum of the fiber of u.
IntVector reduce(const IntVector& u, const GroebnerBasis& g);

HilbertBasis hilbert(const IntMatrix& a);

GraverBasis graver(const IntMatrix& a);

/// Inequality normals of the Groebner cone: the set of cost vectors c' with
/// c' g > 0 for every g in the basis.
std::vector<IntVector> groebner_cone(const GroebnerBasis& g);

/// Strict membership test for a query cost vector against cone normals.
bool cone_contains(const std::vector<IntVector>& normals, const IntVector& c);

/// Optimum of the box-bounded program min { c v : A v = A u, 0 <= v <= a }
/// by Graver augmentation: apply any g in +/-GR with c g > 0, g+ <= u and
/// g- <= a - u until none applies.
IntVector reduce_bounded(const IntVector& u, const IntVector& a,
                         const GraverBasis& gr, const IntVector& c);

namespace detail {

/// Binomial generating set of the lattice ideal of ker_Z(A): the saturation
/// of the kernel-basis binomials, computed with one auxiliary variable and a
/// genuine elimination term order. Exposed for tests.
std::vector<IntVector> markov_basis(const IntMatrix& a);

}  // namespace detail

}  // namespace ipts
