#include "ipts/staircase.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ipts/errors.hpp"

namespace ipts {

namespace {

std::vector<IntVector> minimalize(std::vector<IntVector> gens) {
  std::sort(gens.begin(), gens.end(), lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<IntVector> kept;
  for (const IntVector& g : gens) {
    bool dominated = false;
    for (const IntVector& h : gens) {
      if (&h == &g || h == g) continue;
      if (componentwise_leq(h, g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(g);
  }
  return kept;
}

std::size_t support_size(const IntVector& g) {
  std::size_t s = 0;
  for (const Int& x : g)
    if (x > 0) ++s;
  return s;
}

IrreducibleComponent component_from_pure_powers(
    const std::vector<IntVector>& gens) {
  IrreducibleComponent c;
  for (const IntVector& g : gens) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0) {
        c.exponents.emplace_back(i, g[i]);
        break;
      }
    }
  }
  std::sort(c.exponents.begin(), c.exponents.end());
  return c;
}

struct LexVecListLess {
  bool operator()(const std::vector<IntVector>& a,
                  const std::vector<IntVector>& b) const {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] != b[i]) return lex_less(a[i], b[i]);
    }
    return a.size() < b.size();
  }
};

void decompose_rec(
    const std::vector<IntVector>& gens, std::size_t n,
    std::map<std::vector<IntVector>, bool, LexVecListLess>& seen,
    std::vector<IrreducibleComponent>& out) {
  if (seen.count(gens)) return;
  seen[gens] = true;
  const IntVector* pivot = nullptr;
  for (const IntVector& g : gens) {
    if (support_size(g) >= 2) {
      pivot = &g;
      break;
    }
  }
  if (!pivot) {
    out.push_back(component_from_pure_powers(gens));
    return;
  }
  std::size_t coord = 0;
  while ((*pivot)[coord] <= 0) ++coord;
  // Split the pivot generator: either x_coord^e alone or the rest of it.
  std::vector<IntVector> left, right;
  IntVector pure(n), rest = *pivot;
  pure[coord] = (*pivot)[coord];
  rest[coord] = 0;
  for (const IntVector& g : gens) {
    if (&g == pivot) continue;
    left.push_back(g);
    right.push_back(g);
  }
  left.push_back(pure);
  right.push_back(rest);
  decompose_rec(minimalize(std::move(left)), n, seen, out);
  decompose_rec(minimalize(std::move(right)), n, seen, out);
}

// Q(a) is contained in Q(b) iff every coordinate of b's support appears in
// a's support with a smaller-or-equal exponent... containment of irreducible
// monomial ideals reduces to this exponent test.
bool component_contains(const IrreducibleComponent& inner,
                        const IrreducibleComponent& outer) {
  // Returns true when ideal(inner) is a subset of ideal(outer) as sets,
  // i.e. every generator x_i^{a_i} of inner lies in outer.
  for (const auto& [i, a] : inner.exponents) {
    bool in = false;
    for (const auto& [j, b] : outer.exponents) {
      if (j == i && b <= a) {
        in = true;
        break;
      }
    }
    if (!in) return false;
  }
  return true;
}

}  // namespace

MonomialIdeal make_monomial_ideal(std::vector<IntVector> generators,
                                  std::size_t dimension) {
  for (const IntVector& g : generators) {
    if (g.size() != dimension)
      throw std::invalid_argument("monomial ideal: generator length mismatch");
    if (!g.is_nonnegative())
      throw std::invalid_argument("monomial ideal: negative exponent");
  }
  return MonomialIdeal{minimalize(std::move(generators)), dimension};
}

MonomialIdeal initial_ideal(const GroebnerBasis& g) {
  std::vector<IntVector> gens;
  gens.reserve(g.elements.size());
  for (const IntVector& e : g.elements) gens.push_back(e.positive_part());
  return make_monomial_ideal(std::move(gens), g.order.dimension());
}

bool is_optimal(const IntVector& u, const MonomialIdeal& m) {
  if (!u.is_nonnegative())
    throw std::invalid_argument("is_optimal: point must be nonnegative");
  for (const IntVector& g : m.generators)
    if (componentwise_leq(g, u)) return false;
  return true;
}

std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& m) {
  if (m.generators.empty()) return {};
  std::map<std::vector<IntVector>, bool, LexVecListLess> seen;
  std::vector<IrreducibleComponent> comps;
  decompose_rec(m.generators, m.dimension, seen, comps);
  std::sort(comps.begin(), comps.end(),
            [](const IrreducibleComponent& a, const IrreducibleComponent& b) {
              return a.exponents < b.exponents;
            });
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  // Drop every component that contains another one; what survives is the
  // unique irredundant decomposition.
  std::vector<IrreducibleComponent> kept;
  for (const IrreducibleComponent& c : comps) {
    bool redundant = false;
    for (const IrreducibleComponent& d : comps) {
      if (&d == &c) continue;
      if (component_contains(d, c)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(c);
  }
  return kept;
}

std::vector<MaxOptimal> maximally_optimal(const MonomialIdeal& m) {
  std::vector<MaxOptimal> out;
  for (const IrreducibleComponent& c : irreducible_decomposition(m)) {
    MaxOptimal mo;
    mo.point = IntVector(m.dimension);
    std::vector<bool> in_support(m.dimension, false);
    for (const auto& [i, a] : c.exponents) {
      mo.point[i] = a - 1;
      in_support[i] = true;
    }
    for (std::size_t i = 0; i < m.dimension; ++i)
      if (!in_support[i]) mo.incr.push_back(i);
    out.push_back(std::move(mo));
  }
  std::sort(out.begin(), out.end(), [](const MaxOptimal& a, const MaxOptimal& b) {
    return lex_less(a.point, b.point);
  });
  return out;
}

Polynomial hilbert_numerator(const MonomialIdeal& m,
                             std::size_t generator_limit) {
  const std::size_t k = m.generators.size();
  if (k > generator_limit)
    throw TooManyGeneratorsError(
        "hilbert_numerator: " + std::to_string(k) + " generators exceeds limit " +
        std::to_string(generator_limit));
  std::map<IntVector, Int, decltype(&lex_less)> acc(&lex_less);
  const std::size_t subsets = std::size_t(1) << k;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    IntVector lcm(m.dimension);
    int sign = 1;
    for (std::size_t b = 0; b < k; ++b) {
      if (!(mask & (std::size_t(1) << b))) continue;
      sign = -sign;
      const IntVector& g = m.generators[b];
      for (std::size_t i = 0; i < m.dimension; ++i)
        if (g[i] > lcm[i]) lcm[i] = g[i];
    }
    acc[lcm] += sign;
  }
  Polynomial p;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    if (it->second != 0) p.terms.emplace_back(it->first, it->second);
  }
  return p;
}

}  // namespace ipts
