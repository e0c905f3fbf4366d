#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bei/common.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/monomial.hpp"
#include "bei/polynomial.hpp"

// Exact Hilbert series of quotients by squarefree monomial ideals via
// pivot splitting, reduction to Q(t)/(1-t)^d with Q(1) != 0, Hilbert
// coefficients e_i = Q^{(i)}(1)/i!, the Hilbert polynomial, and the
// rational-series algebra the rule engine composes with.

namespace bei {

// numerator/(1-t)^denom_exp as a formal power series.
struct HilbertSeries {
  IntPoly num;
  int denom_exp = 0;
  bool operator==(const HilbertSeries&) const = default;
};

// Q(t)/(1-t)^d with Q(1) != 0.
struct ReducedSeries {
  IntPoly q;
  int d = 0;
  bool operator==(const ReducedSeries&) const = default;
};

// -- numerator of HS(R/I, t) over (1-t)^nvars ---------------------------------
//
// N(0) = 1, N(<m>) = 1 - t^deg(m); generators with pairwise disjoint
// supports multiply. Otherwise split on a pivot variable x occurring in
// at least two generators:
//
//   N(I) = N(I + <x>) + t * N(I : x).
//
// Support-disjoint groups of generators are independent, so the product
// step is applied per connected support component rather than only when
// every pair is disjoint; this keeps the recursion shallow on graphs
// whose ideals fragment after a few splits.

namespace detail {

inline IntPoly numerator_rec(int nvars, std::vector<VarSet> gens);

inline IntPoly numerator_component(int nvars, std::vector<VarSet> gens) {
  if (gens.empty()) return IntPoly::one();
  if (gens.size() == 1)
    return IntPoly::one() - IntPoly::monomial(gens[0].count());
  // pivot: variable in the most generators, ties to the smallest index
  std::vector<int> freq(nvars, 0);
  for (const auto& m : gens)
    for (int v : m.to_list()) ++freq[v];
  int pivot = -1, best = 1;
  for (int v = 0; v < nvars; ++v)
    if (freq[v] > best) {
      best = freq[v];
      pivot = v;
    }
  if (pivot < 0) {
    // support-connected with >= 2 generators always shares some variable
    // between two of them, so a pivot exists; guard anyway
    throw error("pivot selection failed on a connected component");
  }
  VarSet x = VarSet::single(pivot);
  // I + <x>: drop generators divisible by x, then multiply by (1 - t)
  std::vector<VarSet> plus;
  for (const auto& m : gens)
    if (!m.contains(pivot)) plus.push_back(m);
  // I : x: erase x where present, re-minimalize
  std::vector<VarSet> colon = gens;
  for (auto& m : colon) m = m.minus(x);
  MonomialIdeal colon_ideal(nvars, std::move(colon));
  IntPoly one_minus_t({Int(1), Int(-1)});
  return one_minus_t * numerator_rec(nvars, std::move(plus)) +
         IntPoly::monomial(1) * numerator_rec(nvars, colon_ideal.generators());
}

inline IntPoly numerator_rec(int nvars, std::vector<VarSet> gens) {
  if (gens.empty()) return IntPoly::one();
  // group generators into support-connected components
  std::vector<int> comp(gens.size(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < gens.size(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    VarSet sup = gens[s];
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t t = 0; t < gens.size(); ++t)
        if (comp[t] < 0 && gens[t].intersects(sup)) {
          comp[t] = ncomp;
          sup = sup | gens[t];
          grew = true;
        }
    }
    ++ncomp;
  }
  IntPoly result = IntPoly::one();
  for (int c = 0; c < ncomp; ++c) {
    std::vector<VarSet> part;
    for (std::size_t s = 0; s < gens.size(); ++s)
      if (comp[s] == c) part.push_back(gens[s]);
    result = result * numerator_component(nvars, std::move(part));
  }
  return result;
}

}  // namespace detail

inline HilbertSeries numerator(const MonomialIdeal& ideal) {
  return HilbertSeries{detail::numerator_rec(ideal.nvars(), ideal.generators()),
                       ideal.nvars()};
}

// -- reduction and coefficients ------------------------------------------------

inline ReducedSeries reduce(const HilbertSeries& s) {
  if (s.num.is_zero())
    throw zero_quotient_error("cannot reduce a series with zero numerator");
  IntPoly q = s.num;
  int d = s.denom_exp;
  while (q.value_at_one() == 0) {
    q.divide_one_minus_t();
    --d;
  }
  return ReducedSeries{std::move(q), d};
}

// e_i = Q^{(i)}(1)/i! = sum_k C(k, i) q_k, exact for any i >= 0. For
// i >= d this lies outside the standard coefficient range; callers that
// care check coefficient_in_range.
inline Int coefficient(const ReducedSeries& r, int i) {
  Int e = 0;
  const auto& cs = r.q.coeffs();
  for (int k = 0; k < static_cast<int>(cs.size()); ++k)
    e += binomial(k, i) * cs[k];
  return e;
}

inline bool coefficient_in_range(const ReducedSeries& r, int i) {
  return i >= 0 && i < r.d;
}

inline int dimension(const ReducedSeries& r) { return r.d; }

inline Int multiplicity(const ReducedSeries& r) { return r.q.value_at_one(); }

// e_0 .. e_{d-1}; empty when d <= 0.
inline std::vector<Int> hilbert_coefficients(const ReducedSeries& r) {
  std::vector<Int> e;
  for (int i = 0; i < r.d; ++i) e.push_back(coefficient(r, i));
  return e;
}

// HP(X) = sum_{j=0}^{d-1} (-1)^j e_j C(X + d-1-j, d-1-j), evaluated
// exactly at integers. Agrees with the Hilbert function for all
// j > deg Q - d.
struct HilbertPolynomial {
  std::vector<Int> e;
  int d = 0;

  Int operator()(const Int& x) const {
    Int acc = 0;
    for (int j = 0; j < d; ++j) {
      Int term = e[j] * binomial(x + (d - 1 - j), d - 1 - j);
      acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
  }
};

inline HilbertPolynomial hilbert_polynomial(const ReducedSeries& r) {
  if (r.d < 1) throw error("Hilbert polynomial requires dimension >= 1");
  return HilbertPolynomial{hilbert_coefficients(r), r.d};
}

// HF(j): coefficient of t^j in Q(t) * sum_k C(k+d-1, d-1) t^k.
inline Int hf_expand(const ReducedSeries& r, int j) {
  if (j < 0) throw error("Hilbert function index must be nonnegative");
  Int acc = 0;
  const auto& cs = r.q.coeffs();
  for (int k = 0; k <= j && k < static_cast<int>(cs.size()); ++k) {
    if (r.d == 0) {
      if (k == j) acc += cs[k];
    } else {
      acc += cs[k] * binomial(j - k + r.d - 1, r.d - 1);
    }
  }
  return acc;
}

inline Int hf_expand(const HilbertSeries& s, int j) {
  return hf_expand(ReducedSeries{s.num, s.denom_exp}, j);
}

// -- rational-series algebra ---------------------------------------------------

inline HilbertSeries multiply(const HilbertSeries& a, const HilbertSeries& b) {
  return HilbertSeries{a.num * b.num, a.denom_exp + b.denom_exp};
}

// s * (1-t)^k for any integer k; the representation keeps denom_exp >= 0.
inline HilbertSeries scale_pow(const HilbertSeries& s, int k) {
  if (k <= 0) return HilbertSeries{s.num, s.denom_exp - k};
  if (k <= s.denom_exp) return HilbertSeries{s.num, s.denom_exp - k};
  return HilbertSeries{s.num * IntPoly::one_minus_t_pow(k - s.denom_exp), 0};
}

inline HilbertSeries add(const std::vector<HilbertSeries>& terms) {
  if (terms.empty()) return HilbertSeries{IntPoly::zero(), 0};
  int d = 0;
  for (const auto& t : terms) d = std::max(d, t.denom_exp);
  IntPoly num;
  for (const auto& t : terms)
    num = num + t.num * IntPoly::one_minus_t_pow(d - t.denom_exp);
  return HilbertSeries{std::move(num), d};
}

// Equality as rational functions.
inline bool series_equal(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.num.is_zero() || b.num.is_zero())
    return a.num.is_zero() && b.num.is_zero();
  ReducedSeries ra = reduce(a), rb = reduce(b);
  return ra == rb;
}

// -- the graph pipeline ---------------------------------------------------------

// Admissible paths -> initial ideal -> numerator over (1-t)^{2n}.
inline HilbertSeries pipeline(const Graph& g) {
  return numerator(initial_ideal(g));
}

inline ReducedSeries reduced_pipeline(const Graph& g) {
  return reduce(pipeline(g));
}

// "Q(t) / (1-t)^d" with Q in ascending-degree integer form.
inline std::string series_str(const ReducedSeries& r) {
  return r.q.str() + " / (1-t)^" + std::to_string(r.d);
}

}  // namespace bei
