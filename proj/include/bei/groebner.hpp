#pragma once

#include <algorithm>
#include <vector>

#include "bei/common.hpp"
#include "bei/graph.hpp"
#include "bei/monomial.hpp"

// Binomial edge ideal generators and the squarefree initial ideal under
// the lexicographic order x_1 > .. > x_n > y_1 > .. > y_n, via admissible
// paths: for i < j, a simple path from i to j is admissible when every
// interior vertex lies outside [i, j] and the path's vertex set supports
// no shorter i-j connection. Such a path contributes the leading monomial
//
//   prod_{interior k > j} x_k * prod_{interior k < i} y_k * x_i * y_j.

namespace bei {

struct EdgeBinomial {
  int i, j;  // i < j, ij an edge; stands for x_i y_j - x_j y_i
  bool operator==(const EdgeBinomial&) const = default;
};

inline std::vector<EdgeBinomial> edge_generators(const Graph& g) {
  std::vector<EdgeBinomial> out;
  for (auto [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

struct AdmissiblePath {
  int i, j;            // endpoints, i < j
  VertexSet interior;  // interior vertices, all < i or > j
  bool operator==(const AdmissiblePath&) const = default;
};

inline VarSet admissible_path_monomial(const AdmissiblePath& p, int n) {
  VarSet m;
  m.add(var_x(p.i, n));
  m.add(var_y(p.j, n));
  for (int k : p.interior.to_list())
    m.add(k > p.j ? var_x(k, n) : var_y(k, n));
  return m;
}

namespace detail {

// Shortest i-j distance inside the induced subgraph on `allowed`.
inline int induced_distance(const Graph& g, VertexSet allowed, int from,
                            int to) {
  VertexSet reached = VertexSet::single(from);
  VertexSet frontier = reached;
  int dist = 0;
  while (!frontier.empty()) {
    if (frontier.contains(to)) return dist;
    VertexSet next;
    for (int u : frontier.to_list()) next = next | (g.neighbors(u) & allowed);
    frontier = next.minus(reached);
    reached = reached | frontier;
    ++dist;
  }
  return -1;
}

// DFS over induced paths from i whose interior stays in `range`. A path
// with a chord can never be minimal, so extension is restricted to
// vertices adjacent only to the current endpoint.
inline void admissible_dfs(const Graph& g, int i, int j, VertexSet range,
                           std::vector<int>& path, VertexSet on_path,
                           std::vector<AdmissiblePath>& out) {
  int last = path.back();
  for (int w : g.neighbors(last).to_list()) {
    if (w == j) {
      // close the path; j must see no path vertex other than `last`
      VertexSet inner = on_path;
      inner.remove(last);
      if ((g.neighbors(j) & inner).empty()) {
        VertexSet interior = on_path;
        interior.remove(i);
        out.push_back({i, j, interior});
      }
      continue;
    }
    if (!range.contains(w) || on_path.contains(w)) continue;
    VertexSet before = on_path;
    before.remove(last);
    if (!(g.neighbors(w) & before).empty()) continue;  // chord
    path.push_back(w);
    on_path.add(w);
    admissible_dfs(g, i, j, range, path, on_path, out);
    on_path.remove(w);
    path.pop_back();
  }
}

}  // namespace detail

// All admissible paths, sorted by (i, j, interior). The trivial path for
// an edge ij is included with empty interior.
inline std::vector<AdmissiblePath> admissible_paths(const Graph& g) {
  std::vector<AdmissiblePath> out;
  for (int i = 1; i <= g.n(); ++i) {
    for (int j = i + 1; j <= g.n(); ++j) {
      VertexSet range;  // admissible interior vertices for the pair (i, j)
      for (int k = 1; k <= g.n(); ++k)
        if (k < i || k > j) range.add(k);
      std::vector<int> path{i};
      detail::admissible_dfs(g, i, j, range, path, VertexSet::single(i), out);
    }
  }
  // The DFS enumerates induced paths only; re-check minimality through the
  // reachability test on the induced path-vertex subgraph.
  std::vector<AdmissiblePath> checked;
  for (const auto& p : out) {
    VertexSet support = p.interior;
    support.add(p.i);
    support.add(p.j);
    if (detail::induced_distance(g, support, p.i, p.j) == support.count() - 1)
      checked.push_back(p);
  }
  std::sort(checked.begin(), checked.end(),
            [](const AdmissiblePath& a, const AdmissiblePath& b) {
              if (a.i != b.i) return a.i < b.i;
              if (a.j != b.j) return a.j < b.j;
              return a.interior.to_list() < b.interior.to_list();
            });
  checked.erase(std::unique(checked.begin(), checked.end()), checked.end());
  return checked;
}

// Initial ideal of the binomial edge ideal in 2n variables; its Hilbert
// function equals that of the quotient by the edge ideal itself.
inline MonomialIdeal initial_ideal(const Graph& g) {
  int n = g.n();
  if (2 * n > kMaxVariables)
    throw size_limit_error("initial ideal needs " + std::to_string(2 * n) +
                           " variables, cap is " +
                           std::to_string(kMaxVariables));
  std::vector<VarSet> gens;
  for (const auto& p : admissible_paths(g))
    gens.push_back(admissible_path_monomial(p, n));
  return MonomialIdeal(2 * n, std::move(gens));
}

}  // namespace bei
