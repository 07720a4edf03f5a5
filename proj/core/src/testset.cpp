#include "ipts/testset.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>

#include "ipts/errors.hpp"
#include "ipts/kernel.hpp"
#include "ipts/lp.hpp"

namespace ipts {

namespace {

std::uint64_t support_mask(const IntVector& v, int sign) {
  std::uint64_t m = 0;
  const std::size_t top = std::min<std::size_t>(v.size(), 64);
  for (std::size_t i = 0; i < top; ++i) {
    if (sign > 0 ? v[i] > 0 : v[i] < 0) m |= std::uint64_t(1) << i;
  }
  return m;
}

// Basis element with cached sign split and support masks. The masks cover
// the first 64 coordinates and act as a necessary-condition prefilter.
struct Elem {
  IntVector v, pos, neg;
  std::uint64_t pmask = 0, nmask = 0;

  static Elem make(IntVector vec) {
    Elem e;
    e.v = std::move(vec);
    auto parts = e.v.decompose();
    e.pos = std::move(parts.first);
    e.neg = std::move(parts.second);
    e.pmask = support_mask(e.v, +1);
    e.nmask = support_mask(e.v, -1);
    return e;
  }
};

bool mask_subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

// ---------------------------------------------------------------------------
// Critical-pair completion for lattice ideals. Elements are kernel vectors
// oriented by the comparator (positive part strictly above the negative
// part); S-pairs are processed as monomial pairs within one fiber, so the
// procedure is plain Buchberger on binomials. The comparator must be a total
// order compatible with addition and bounded below on every fiber met here.

template <class Cmp>
class Completion {
 public:
  Completion(const Cmp& cmp, bool use_product_criterion)
      : cmp_(cmp), product_criterion_(use_product_criterion) {}

  void add_seed(const IntVector& v) { process_candidate(v); }

  std::vector<IntVector> run() {
    while (!queue_.empty()) {
      Pair p = queue_.top();
      queue_.pop();
      s_pair(p.i, p.j);
    }
    return reduced_basis();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Int weight;  // total degree of lcm(g_i+, g_j+), processed smallest first
  };
  struct PairOrder {
    bool operator()(const Pair& a, const Pair& b) const {
      return a.weight > b.weight;
    }
  };

  std::uint64_t monomial_mask(const IntVector& m) const {
    return support_mask(m, +1);
  }

  // Normal form of a monomial: repeatedly replace m by m - g+ + g- for the
  // first applicable element. Each step strictly descends in the order
  // within the fiber of m.
  IntVector reduce_monomial(IntVector m) const {
    std::uint64_t mask = monomial_mask(m);
    for (std::size_t i = 0; i < g_.size();) {
      const Elem& e = g_[i];
      if (mask_subset(e.pmask, mask) && componentwise_leq(e.pos, m)) {
        m -= e.v;
        mask = monomial_mask(m);
        i = 0;
      } else {
        ++i;
      }
    }
    return m;
  }

  void process_candidate(const IntVector& vec) {
    auto [pos, neg] = vec.decompose();
    IntVector alpha = reduce_monomial(pos);
    IntVector beta = reduce_monomial(neg);
    if (alpha == beta) return;
    IntVector w = alpha - beta;
    if (cmp_.compare(alpha, beta) == Ordering::less) w = -w;
    const std::size_t id = g_.size();
    g_.push_back(Elem::make(std::move(w)));
    for (std::size_t i = 0; i < id; ++i) {
      if (product_criterion_ && (g_[i].pmask & g_[id].pmask) == 0 &&
          disjoint(g_[i].pos, g_[id].pos))
        continue;
      Int weight = 0;
      for (std::size_t k = 0; k < g_[i].pos.size(); ++k)
        weight += g_[i].pos[k] > g_[id].pos[k] ? g_[i].pos[k] : g_[id].pos[k];
      queue_.push(Pair{i, id, std::move(weight)});
    }
  }

  static bool disjoint(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0 && b[i] > 0) return false;
    return true;
  }

  void s_pair(std::size_t i, std::size_t j) {
    const Elem& f = g_[i];
    const Elem& g = g_[j];
    const std::size_t n = f.v.size();
    IntVector lcm(n);
    for (std::size_t k = 0; k < n; ++k)
      lcm[k] = f.pos[k] > g.pos[k] ? f.pos[k] : g.pos[k];
    // S-binomial: both monomials live in the fiber of lcm.
    IntVector alpha = lcm - f.pos + f.neg;
    IntVector beta = lcm - g.pos + g.neg;
    process_candidate(alpha - beta);
  }

  std::vector<IntVector> reduced_basis() {
    // Keep one element per minimal leading exponent, then reduce tails with
    // the full set (any complete set gives the same normal forms).
    std::vector<std::size_t> order(g_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      Ordering o = cmp_.compare(g_[a].pos, g_[b].pos);
      if (o != Ordering::equal) return o == Ordering::less;
      return lex_less(g_[a].v, g_[b].v);
    });
    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
      bool redundant = false;
      for (std::size_t k : kept) {
        if (mask_subset(g_[k].pmask, g_[idx].pmask) &&
            componentwise_leq(g_[k].pos, g_[idx].pos)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(idx);
    }
    std::vector<IntVector> out;
    out.reserve(kept.size());
    for (std::size_t idx : kept) {
      IntVector tail = reduce_monomial(g_[idx].neg);
      out.push_back(g_[idx].pos - tail);
    }
    std::sort(out.begin(), out.end(), [&](const IntVector& a, const IntVector& b) {
      Ordering o = cmp_.compare(a.positive_part(), b.positive_part());
      if (o != Ordering::equal) return o == Ordering::less;
      return lex_less(a, b);
    });
    return out;
  }

  const Cmp& cmp_;
  bool product_criterion_;
  std::vector<Elem> g_;
  std::priority_queue<Pair, std::vector<Pair>, PairOrder> queue_;
};

// Elimination order for the saturation run: auxiliary variable first, then
// total degree on the remaining block, then graded reverse lexicographic.
// A genuine term order, so the classical Buchberger termination and
// correctness arguments apply unchanged.
struct EliminationOrder {
  Ordering compare(const IntVector& u, const IntVector& v) const {
    if (u[0] != v[0]) return u[0] < v[0] ? Ordering::less : Ordering::greater;
    Int du = 0, dv = 0;
    for (std::size_t i = 1; i < u.size(); ++i) {
      du += u[i];
      dv += v[i];
    }
    if (du != dv) return du < dv ? Ordering::less : Ordering::greater;
    for (std::size_t i = u.size(); i-- > 1;) {
      if (u[i] != v[i]) return u[i] > v[i] ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
  }
};

// ---------------------------------------------------------------------------
// Staged completion over sign patterns (Pottier style). Coordinates are
// processed in order; at stage k every pair whose entries conflict in sign
// at coordinate k contributes a sum candidate, candidates are normalized
// against the sign-compatible domination order and kept when nonzero. In
// Hilbert mode vectors negative at the finished coordinate are discarded at
// the end of each stage; in Graver mode elements represent +/- classes and
// everything is kept.

enum class PottierMode { hilbert_basis, graver_basis };

// h or -h sign-compatibly dominated by s; returns +1 / -1 for the matching
// sign, 0 for neither.
int domination_sign(const Elem& h, const Elem& s) {
  if (mask_subset(h.pmask, s.pmask) && mask_subset(h.nmask, s.nmask)) {
    bool ok = true;
    for (std::size_t i = 0; i < h.v.size() && ok; ++i) {
      if (h.v[i] > 0)
        ok = h.v[i] <= s.v[i];
      else if (h.v[i] < 0)
        ok = h.v[i] >= s.v[i];
    }
    if (ok) return +1;
  }
  return 0;
}

int domination_sign_either(const Elem& h, const Elem& s, bool allow_negated) {
  if (domination_sign(h, s) > 0) return +1;
  if (!allow_negated) return 0;
  Elem neg = Elem::make(-h.v);
  if (domination_sign(neg, s) > 0) return -1;
  return 0;
}

IntVector sign_canonical(IntVector v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      if (v[i] < 0) v = -v;
      break;
    }
  }
  return v;
}

std::uint64_t clamped_norm(const IntVector& v) {
  Int n = v.one_norm();
  if (n > 1000000000000000000LL) return 1000000000000000000ULL;
  return n.convert_to<std::uint64_t>();
}

std::vector<IntVector> pottier_completion(const IntMatrix& a,
                                          PottierMode mode) {
  const std::size_t n = a.cols();
  std::vector<IntVector> basis = kernel_basis(a);
  if (basis.empty()) return {};

  const bool graver = mode == PottierMode::graver_basis;
  std::vector<Elem> f;
  std::vector<std::uint64_t> norm;
  std::vector<std::uint32_t> by_norm;  // indices of f, ascending norm
  auto push_elem = [&](IntVector v) {
    const std::uint64_t nv = clamped_norm(v);
    const std::uint32_t id = static_cast<std::uint32_t>(f.size());
    norm.push_back(nv);
    f.push_back(Elem::make(std::move(v)));
    auto it = std::lower_bound(
        by_norm.begin(), by_norm.end(), nv,
        [&](std::uint32_t a, std::uint64_t b) { return norm[a] < b; });
    by_norm.insert(it, id);
  };
  if (graver) {
    for (const IntVector& b : basis) push_elem(sign_canonical(b));
  } else {
    for (const IntVector& b : basis) {
      push_elem(b);
      push_elem(-b);
    }
  }

  // In-place normal form against f, smallest reducers first. Every step
  // strictly shrinks the one-norm, so termination is immediate.
  auto normal_form = [&](IntVector s) {
    const std::size_t dim = s.size();
    std::uint64_t pmask = support_mask(s, +1);
    std::uint64_t nmask = support_mask(s, -1);
    std::size_t scan = 0;
    while (scan < by_norm.size()) {
      if (pmask == 0 && nmask == 0 && s.is_zero()) break;
      const Elem& h = f[by_norm[scan]];
      int ds = 0;
      if (mask_subset(h.pmask, pmask) && mask_subset(h.nmask, nmask)) {
        bool ok = true;
        for (std::size_t i = 0; i < dim && ok; ++i) {
          if (h.v[i] > 0)
            ok = h.v[i] <= s[i];
          else if (h.v[i] < 0)
            ok = h.v[i] >= s[i];
        }
        if (ok) ds = +1;
      }
      if (ds == 0 && graver && mask_subset(h.pmask, nmask) &&
          mask_subset(h.nmask, pmask)) {
        bool ok = true;
        for (std::size_t i = 0; i < dim && ok; ++i) {
          if (h.v[i] > 0)
            ok = -h.v[i] >= s[i];
          else if (h.v[i] < 0)
            ok = -h.v[i] <= s[i];
        }
        if (ok) ds = -1;
      }
      if (ds != 0) {
        if (ds > 0)
          s -= h.v;
        else
          s += h.v;
        pmask = support_mask(s, +1);
        nmask = support_mask(s, -1);
        scan = 0;
      } else {
        ++scan;
      }
    }
    return s;
  };

  std::vector<bool> done(n, false);
  for (std::size_t stage = 0; stage < n; ++stage) {
    // Pick the unprocessed coordinate with the fewest sign conflicts.
    std::size_t k = n;
    std::uint64_t best = ~std::uint64_t(0);
    for (std::size_t c = 0; c < n; ++c) {
      if (done[c]) continue;
      std::uint64_t pos = 0, neg = 0, mixed = 0;
      for (const Elem& e : f) {
        int s = e.v[c].sign();
        if (s > 0) ++pos;
        else if (s < 0) ++neg;
      }
      mixed = graver ? pos * neg + (pos * (pos - 1)) / 2 + (neg * (neg - 1)) / 2
                     : pos * neg;
      if (mixed < best) {
        best = mixed;
        k = c;
      }
    }
    done[k] = true;

    // Every unordered pair is visited once, when the watermark reaches its
    // larger index; the set keeps growing until no pair yields anything new.
    // Candidates of one watermark element are processed smallest first so
    // that small vectors enter the set early; pair storage stays linear in
    // the set size.
    struct Cand {
      std::uint64_t grade;
      std::uint32_t i;
      bool negate;
    };
    std::vector<Cand> local;
    for (std::size_t j = 0; j < f.size(); ++j) {
      local.clear();
      int sj = f[j].v[k].sign();
      if (sj == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        int si = f[i].v[k].sign();
        if (si == 0) continue;
        if (si * sj < 0)
          local.push_back(Cand{norm[i] + norm[j], std::uint32_t(i), false});
        else if (graver)
          local.push_back(Cand{norm[i] + norm[j], std::uint32_t(i), true});
      }
      std::sort(local.begin(), local.end(),
                [](const Cand& a, const Cand& b) { return a.grade < b.grade; });
      for (const Cand& c : local) {
        IntVector s =
            normal_form(c.negate ? f[c.i].v - f[j].v : f[c.i].v + f[j].v);
        if (s.is_zero()) continue;
        if (graver) s = sign_canonical(std::move(s));
        push_elem(std::move(s));
      }
    }
    if (!graver) {
      std::vector<Elem> kept;
      std::vector<std::uint64_t> kept_norm;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].v[k] >= 0) {
          kept.push_back(std::move(f[i]));
          kept_norm.push_back(norm[i]);
        }
      }
      f = std::move(kept);
      norm = std::move(kept_norm);
      by_norm.resize(f.size());
      for (std::uint32_t i = 0; i < by_norm.size(); ++i) by_norm[i] = i;
      std::sort(by_norm.begin(), by_norm.end(),
                [&](std::uint32_t a, std::uint32_t b) {
                  return norm[a] != norm[b] ? norm[a] < norm[b] : a < b;
                });
    }
  }

  // Keep only the minimal elements under the relevant partial order.
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < f.size() && minimal; ++j) {
      if (j == i || f[j].v == f[i].v) continue;
      if (domination_sign_either(f[j], f[i], graver) != 0) minimal = false;
    }
    // Drop exact duplicates, keeping the first occurrence.
    for (std::size_t j = 0; j < i && minimal; ++j)
      if (f[j].v == f[i].v) minimal = false;
    if (minimal) out.push_back(f[i].v);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

namespace detail {

std::vector<IntVector> markov_basis(const IntMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<IntVector> basis = kernel_basis(a);
  if (basis.empty()) return {};
  EliminationOrder cmp;
  Completion<EliminationOrder> run(cmp, /*use_product_criterion=*/true);
  // Saturating generator t * x_1 ... x_n - 1 plus the kernel binomials,
  // all lifted by the auxiliary first coordinate.
  IntVector saturator(n + 1);
  for (std::size_t i = 0; i <= n; ++i) saturator[i] = 1;
  run.add_seed(saturator);
  for (const IntVector& b : basis) {
    IntVector lifted(n + 1);
    for (std::size_t i = 0; i < n; ++i) lifted[i + 1] = b[i];
    run.add_seed(lifted);
  }
  std::vector<IntVector> out;
  for (const IntVector& w : run.run()) {
    if (w[0] != 0) continue;
    IntVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = w[i + 1];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace detail

GroebnerBasis groebner(const IntMatrix& a, const TermOrder& order) {
  if (order.dimension() != a.cols())
    throw std::invalid_argument("groebner: order dimension mismatch");
  GroebnerBasis result{{}, order, a.fingerprint()};
  std::vector<IntVector> markov = detail::markov_basis(a);
  if (markov.empty()) return result;
  // The order must be bounded below on every fiber: no nonzero nonnegative
  // kernel direction may have nonpositive cost.
  if (auto worst = min_cost_on_kernel_directions(a, order.cost());
      worst && *worst <= 0) {
    throw UnboundedOrderError(
        "cost is not strictly positive on a nonnegative kernel direction");
  }
  Completion<TermOrder> run(order, /*use_product_criterion=*/false);
  for (const IntVector& m : markov) run.add_seed(m);
  result.elements = run.run();
  return result;
}

IntVector reduce(const IntVector& u, const GroebnerBasis& g) {
  if (!u.is_nonnegative())
    throw std::invalid_argument("reduce: point must be nonnegative");
  std::vector<Elem> elems;
  elems.reserve(g.elements.size());
  for (const IntVector& e : g.elements) elems.push_back(Elem::make(e));
  IntVector cur = u;
  std::uint64_t mask = support_mask(cur, +1);
  for (std::size_t i = 0; i < elems.size();) {
    if (mask_subset(elems[i].pmask, mask) &&
        componentwise_leq(elems[i].pos, cur)) {
      cur -= elems[i].v;
      mask = support_mask(cur, +1);
      i = 0;
    } else {
      ++i;
    }
  }
  return cur;
}

HilbertBasis hilbert(const IntMatrix& a) {
  return HilbertBasis{pottier_completion(a, PottierMode::hilbert_basis)};
}

GraverBasis graver(const IntMatrix& a) {
  return GraverBasis{pottier_completion(a, PottierMode::graver_basis)};
}

std::vector<IntVector> groebner_cone(const GroebnerBasis& g) {
  return g.elements;
}

bool cone_contains(const std::vector<IntVector>& normals, const IntVector& c) {
  for (const IntVector& g : normals)
    if (c.dot(g) <= 0) return false;
  return true;
}

IntVector reduce_bounded(const IntVector& u, const IntVector& a,
                         const GraverBasis& gr, const IntVector& c) {
  if (!u.is_nonnegative() || !componentwise_leq(u, a))
    throw std::invalid_argument("reduce_bounded: need 0 <= u <= a");
  std::vector<Elem> elems;
  elems.reserve(2 * gr.elements.size());
  for (const IntVector& e : gr.elements) {
    elems.push_back(Elem::make(e));
    elems.push_back(Elem::make(-e));
  }
  IntVector cur = u;
  IntVector slack = a - u;
  for (std::size_t i = 0; i < elems.size();) {
    const Elem& e = elems[i];
    if (c.dot(e.v) > 0 && componentwise_leq(e.pos, cur) &&
        componentwise_leq(e.neg, slack)) {
      cur -= e.v;
      slack += e.v;
      i = 0;
    } else {
      ++i;
    }
  }
  return cur;
}

}  // namespace ipts
