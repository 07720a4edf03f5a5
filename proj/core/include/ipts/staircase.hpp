#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ipts/testset.hpp"
#include "ipts/vector.hpp"

namespace ipts {

/// Monomial ideal given by its minimal generating set of exponent vectors.
/// No generator divides another; generators are sorted lexicographically.
struct MonomialIdeal {
  std::vector<IntVector> generators;
  std::size_t dimension = 0;
};

/// Irreducible monomial ideal < x_i^{a_i} : i in support >, stored as the
/// sorted list of (coordinate, exponent) pairs with every exponent >= 1.
struct IrreducibleComponent {
  std::vector<std::pair<std::size_t, Int>> exponents;

  bool operator==(const IrreducibleComponent& o) const = default;
};

/// A maximally optimal point together with its increase set: point + e_i is
/// optimal exactly for i in incr, and point + a is optimal for every a
/// supported on incr.
struct MaxOptimal {
  IntVector point;
  std::vector<std::size_t> incr;

  bool operator==(const MaxOptimal& o) const = default;
};

/// Ideal of leading exponents { g+ : g in G }, minimalized. Its generators
/// are the minimally non-optimal points; its standard monomials are exactly
/// the optimal points of the family.
MonomialIdeal initial_ideal(const GroebnerBasis& g);

MonomialIdeal make_monomial_ideal(std::vector<IntVector> generators,
                                  std::size_t dimension);

/// True iff no generator divides u componentwise.
bool is_optimal(const IntVector& u, const MonomialIdeal& m);

/// The unique irredundant irreducible decomposition M = intersection of
/// components, by recursive pivot splitting.
std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& m);

/// One maximally optimal point per irreducible component: u_i = a_i - 1 on
/// the support, 0 elsewhere; incr = complement of the support. The zero
/// ideal yields an empty list (every point is optimal).
std::vector<MaxOptimal> maximally_optimal(const MonomialIdeal& m);

/// Multivariate polynomial with integer coefficients; terms are kept sorted
/// (descending lexicographic exponent) with no zero coefficients.
struct Polynomial {
  std::vector<std::pair<IntVector, Int>> terms;

  bool operator==(const Polynomial& o) const = default;
};

/// Numerator K(x) of the standard-monomial generating function
/// sum x^u = K(x) / prod_i (1 - x_i), by inclusion-exclusion over generator
/// subsets. Throws TooManyGeneratorsError above `generator_limit`.
Polynomial hilbert_numerator(const MonomialIdeal& m,
                             std::size_t generator_limit = 20);

}  // namespace ipts
