#pragma once

#include <algorithm>
#include <vector>

#include "bei/common.hpp"
#include "bei/graph.hpp"

// Combinatorial primary decomposition data of a binomial edge ideal: the
// primes P_T(G) indexed by vertex subsets T, their heights
// n + |T| - c_G(T), the cut-point sets that index the minimal primes, and
// the dimension formula dim(S/J_G) = max_T (n - |T| + c_G(T)).

namespace bei {

struct PrimeComponent {
  VertexSet t;
  std::vector<VertexSet> components;  // components of G \ T
  int height = 0;
};

inline PrimeComponent prime_component(const Graph& g, VertexSet t) {
  auto del = delete_vertices(g, t);
  std::vector<VertexSet> comps;
  // report components in original labels
  std::vector<int> old_label(del.graph.n() + 1, 0);
  for (int v = 1; v <= g.n(); ++v)
    if (del.new_label[v]) old_label[del.new_label[v]] = v;
  for (const auto& c : connected_components(del.graph)) {
    VertexSet orig;
    for (int v : c.to_list()) orig.add(old_label[v]);
    comps.push_back(orig);
  }
  int c = static_cast<int>(comps.size());
  return PrimeComponent{t, std::move(comps), g.n() + t.count() - c};
}

// T has the cut point property when every i in T strictly increases the
// component count when added back last: c_G(T) > c_G(T \ {i}).
inline bool has_cut_point_property(const Graph& g, VertexSet t) {
  int c_t = component_count_without(g, t);
  for (int i : t.to_list()) {
    VertexSet without = t;
    without.remove(i);
    if (c_t <= component_count_without(g, without)) return false;
  }
  return true;
}

namespace detail {

// A free (simplicial) vertex has a clique neighborhood, so it can never
// be a cut point of an induced subgraph; subsets with the cut-point
// property live inside the non-free vertices.
inline std::vector<int> cut_set_candidates(const Graph& g) {
  auto deg = clique_degrees(g);
  std::vector<int> out;
  for (int v = 1; v <= g.n(); ++v)
    if (deg[v] != 1) out.push_back(v);
  return out;
}

template <typename F>
void for_each_subset_by_cardinality(const std::vector<int>& pool, F&& fn) {
  int m = static_cast<int>(pool.size());
  std::vector<int> idx;
  // subsets ordered by cardinality, then lexicographically by element list
  for (int k = 0; k <= m; ++k) {
    idx.assign(k, 0);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      VertexSet t;
      for (int i : idx) t.add(pool[i]);
      fn(t);
      if (k == 0) break;
      int p = k - 1;
      while (p >= 0 && idx[p] == m - k + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
}

}  // namespace detail

// All elements of C(G): the empty set plus every T with the cut point
// property, ordered by cardinality then lexicographically.
inline std::vector<VertexSet> cut_sets(const Graph& g) {
  std::vector<VertexSet> out;
  detail::for_each_subset_by_cardinality(
      detail::cut_set_candidates(g), [&](VertexSet t) {
        if (t.empty() || has_cut_point_property(g, t)) out.push_back(t);
      });
  return out;
}

inline std::vector<PrimeComponent> minimal_primes(const Graph& g) {
  std::vector<PrimeComponent> out;
  for (VertexSet t : cut_sets(g)) out.push_back(prime_component(g, t));
  return out;
}

// max over T of n - |T| + c_G(T). For n <= 16 the maximum is scanned over
// every subset; beyond that the scan is restricted to C(G), where the
// maximum is attained because those primes are the minimal ones.
inline int dimension_via_cutsets(const Graph& g) {
  int n = g.n();
  if (n == 0) return 0;
  int best = 0;
  if (n <= 16) {
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      VertexSet t(mask);
      best = std::max(best,
                      n - t.count() + component_count_without(g, t));
    }
  } else {
    for (VertexSet t : cut_sets(g))
      best = std::max(best,
                      n - t.count() + component_count_without(g, t));
  }
  return best;
}

}  // namespace bei
