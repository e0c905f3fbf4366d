#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bei/common.hpp"

// Labeled simple graphs on vertex set {1, .., n} with the operations the
// toolkit needs: the named families, disjoint union, join, clique sum at
// free vertices, vertex deletion with order-preserving relabeling,
// neighbor completion, maximal-clique enumeration and the clique-based
// vertex invariants (clique degree, freeness, free-clique degree).
//
// All values are immutable; every operation returns a fresh graph.

namespace bei {

class Graph {
 public:
  Graph() : n_(0) {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw error("vertex count must be nonnegative");
    if (n > kMaxVertices)
      throw size_limit_error("vertex count " + std::to_string(n) +
                             " exceeds the cap of " +
                             std::to_string(kMaxVertices));
    adj_.assign(n + 1, VertexSet());
    for (auto [u, v] : edges) add_edge_checked(u, v);
  }

  int n() const { return n_; }

  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  int edge_count() const {
    int total = 0;
    for (int v = 1; v <= n_; ++v) total += adj_[v].count();
    return total / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
      for (int v : adj_[u].to_list())
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const {
    for (int v = 1; v <= n_; ++v)
      if (adj_[v].count() != n_ - 1) return false;
    return true;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  // -- families -------------------------------------------------------------

  static Graph complete(int n) {
    require_positive(n, "complete graph order");
    Graph g = empty(n);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) g.add_edge_unchecked(u, v);
    return g;
  }

  static Graph edgeless(int n) {
    if (n < 0) throw error("edgeless graph order must be nonnegative");
    return empty(n);
  }

  static Graph complete_bipartite(int a, int b) {
    require_positive(a, "bipartition size");
    require_positive(b, "bipartition size");
    Graph g = empty(a + b);
    for (int u = 1; u <= a; ++u)
      for (int v = a + 1; v <= a + b; ++v) g.add_edge_unchecked(u, v);
    return g;
  }

  // K_{1,t} with leaves 1..t and the center labeled last (t+1).
  static Graph star(int t) {
    require_positive(t, "star leaf count");
    Graph g = empty(t + 1);
    for (int v = 1; v <= t; ++v) g.add_edge_unchecked(v, t + 1);
    return g;
  }

  static Graph path(int n) {
    require_positive(n, "path order");
    Graph g = empty(n);
    for (int v = 1; v < n; ++v) g.add_edge_unchecked(v, v + 1);
    return g;
  }

  // Two adjacent hubs u = 1 and v = 2 with s leaves 2+1..2+s at u and
  // t leaves 2+s+1..2+s+t at v.
  static Graph biclaw(int s, int t) {
    require_positive(s, "biclaw leaf count");
    require_positive(t, "biclaw leaf count");
    Graph g = empty(2 + s + t);
    g.add_edge_unchecked(1, 2);
    for (int i = 1; i <= s; ++i) g.add_edge_unchecked(1, 2 + i);
    for (int j = 1; j <= t; ++j) g.add_edge_unchecked(2, 2 + s + j);
    return g;
  }

 private:
  static Graph empty(int n) {
    Graph g;
    if (n > kMaxVertices)
      throw size_limit_error("vertex count exceeds the cap of " +
                             std::to_string(kMaxVertices));
    g.n_ = n;
    g.adj_.assign(n + 1, VertexSet());
    return g;
  }

  static void require_positive(int v, const char* what) {
    if (v < 1) throw error(std::string(what) + " must be positive");
  }

  void add_edge_checked(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw error("edge endpoint out of range 1.." + std::to_string(n_));
    if (u == v) throw error("loop edge at vertex " + std::to_string(u));
    add_edge_unchecked(u, v);
  }
  void add_edge_unchecked(int u, int v) {
    adj_[u].add(v);
    adj_[v].add(u);
  }

  int n_;
  std::vector<VertexSet> adj_;

  friend Graph disjoint_union(const Graph&, const Graph&);
  friend Graph join(const Graph&, const Graph&);
  friend Graph neighbor_completion(const Graph&, int);
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph(n, edges);
}

// -- graph operations ---------------------------------------------------------

// H's labels are shifted by |V(G)|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.n() + h.n(), {});
  for (int v = 1; v <= g.n(); ++v) out.adj_[v] = g.adj_[v];
  for (int v = 1; v <= h.n(); ++v)
    out.adj_[g.n() + v] = VertexSet(h.adj_[v].bits << g.n());
  return out;
}

// Disjoint union plus all cross edges.
inline Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  VertexSet left = VertexSet::all(g.n());
  VertexSet right = VertexSet::all(g.n() + h.n()).minus(left);
  for (int v = 1; v <= g.n(); ++v) out.adj_[v] = out.adj_[v] | right;
  for (int v = g.n() + 1; v <= g.n() + h.n(); ++v)
    out.adj_[v] = out.adj_[v] | left;
  return out;
}

struct DeletionResult {
  Graph graph;
  // new_label[old] is the surviving label, or 0 when old was deleted.
  std::vector<int> new_label;
};

// Induced subgraph on V(G) \ W, relabeled order-preservingly to 1..n-|W|.
inline DeletionResult delete_vertices(const Graph& g, VertexSet w) {
  std::vector<int> relabel(g.n() + 1, 0);
  int next = 0;
  for (int v = 1; v <= g.n(); ++v)
    if (!w.contains(v)) relabel[v] = ++next;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (relabel[u] && relabel[v]) edges.emplace_back(relabel[u], relabel[v]);
  return DeletionResult{Graph(next, edges), std::move(relabel)};
}

// G_v: all pairs of non-adjacent neighbors of v get an edge.
inline Graph neighbor_completion(const Graph& g, int v) {
  Graph out = g;
  auto nb = g.neighbors(v).to_list();
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      out.add_edge_unchecked(nb[i], nb[j]);
  return out;
}

namespace detail {

inline void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                          std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Tomita pivot: vertex of P|X with the most neighbors in P.
  int pivot = 0, best = -1;
  for (int u : (p | x).to_list()) {
    int d = (g.neighbors(u) & p).count();
    if (d > best) {
      best = d;
      pivot = u;
    }
  }
  for (int v : p.minus(g.neighbors(pivot)).to_list()) {
    VertexSet rv = r;
    rv.add(v);
    bron_kerbosch(g, rv, p & g.neighbors(v), x & g.neighbors(v), out);
    p.remove(v);
    x.add(v);
  }
}

}  // namespace detail

// Inclusion-maximal cliques, sorted by (size, vertex list); an isolated
// vertex contributes its singleton clique.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.n() == 0) return out;
  detail::bron_kerbosch(g, VertexSet(), VertexSet::all(g.n()), VertexSet(), out);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.to_list() < b.to_list();
  });
  return out;
}

inline int clique_degree(const Graph& g, int v) {
  int c = 0;
  for (const auto& q : maximal_cliques(g))
    if (q.contains(v)) ++c;
  return c;
}

inline bool is_free_vertex(const Graph& g, int v) {
  return clique_degree(g, v) == 1;
}

// Clique degrees of all vertices in one clique sweep.
inline std::vector<int> clique_degrees(const Graph& g) {
  std::vector<int> deg(g.n() + 1, 0);
  for (const auto& q : maximal_cliques(g))
    for (int v : q.to_list()) ++deg[v];
  return deg;
}

// A maximal clique C containing v is free for v when G = C or every vertex
// of C other than v is free in G. For an isolated vertex the condition is
// vacuous, so its singleton clique counts and fcdeg = 1.
inline int free_clique_degree(const Graph& g, int v) {
  auto cliques = maximal_cliques(g);
  std::vector<int> deg(g.n() + 1, 0);
  for (const auto& q : cliques)
    for (int u : q.to_list()) ++deg[u];
  VertexSet whole = VertexSet::all(g.n());
  int count = 0;
  for (const auto& q : cliques) {
    if (!q.contains(v)) continue;
    if (q == whole) {
      ++count;
      continue;
    }
    bool ok = true;
    for (int u : q.to_list())
      if (u != v && deg[u] != 1) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int v = 1; v <= g.n(); ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp = VertexSet::single(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int u : frontier.to_list()) next = next | g.neighbors(u);
      frontier = next.minus(comp);
      comp = comp | next;
    }
    out.push_back(comp);
    seen = seen | comp;
  }
  return out;
}

// Number of connected components of G \ T (c_G(T)).
inline int component_count_without(const Graph& g, VertexSet t) {
  VertexSet rest = VertexSet::all(g.n()).minus(t);
  int count = 0;
  VertexSet seen;
  for (int v = 1; v <= g.n(); ++v) {
    if (!rest.contains(v) || seen.contains(v)) continue;
    ++count;
    VertexSet comp = VertexSet::single(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int u : frontier.to_list()) next = next | (g.neighbors(u) & rest);
      frontier = next.minus(comp);
      comp = comp | next;
    }
    seen = seen | comp;
  }
  return count;
}

// Identify v in G with w in H; both must be free vertices, otherwise the
// composition rules that motivate this operation do not apply.
inline Graph clique_sum(const Graph& g, int v, const Graph& h, int w) {
  if (v < 1 || v > g.n() || w < 1 || w > h.n())
    throw error("clique-sum attachment vertex out of range");
  if (!is_free_vertex(g, v))
    throw error("clique-sum attachment vertex " + std::to_string(v) +
                " is not free in the left operand");
  if (!is_free_vertex(h, w))
    throw error("clique-sum attachment vertex " + std::to_string(w) +
                " is not free in the right operand");
  // H's vertices keep their relative order; w maps onto v, the rest are
  // appended after G.
  std::vector<int> map(h.n() + 1, 0);
  int next = g.n();
  for (int u = 1; u <= h.n(); ++u) map[u] = (u == w) ? v : ++next;
  auto edges = g.edges();
  for (auto [a, b] : h.edges()) edges.emplace_back(map[a], map[b]);
  return Graph(g.n() + h.n() - 1, edges);
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  // perm[old] = new, a permutation of 1..n
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.n(), edges);
}

}  // namespace bei
