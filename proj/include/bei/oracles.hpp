#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "bei/common.hpp"
#include "bei/expr.hpp"
#include "bei/graph.hpp"
#include "bei/hilbert.hpp"
#include "bei/monomial.hpp"
#include "bei/primes.hpp"
#include "bei/rules.hpp"

// Independent oracles and identity checkers: the Macaulay-matrix Hilbert
// function (exact rank of the degree-j relations), the intersection
// coefficient identity on monomial ideals with a height gap, the vertex
// deletion invariance under the free-clique-degree hypothesis, the
// neighbor-completion series identity, and a quarantined small-graph
// regularity oracle via simplicial homology of restricted Stanley-Reisner
// complexes. Everything here is exact; no floating point.

namespace bei {

struct CheckReport {
  std::string name;
  std::string inputs;
  bool applicable = true;  // precondition/hypothesis satisfied
  bool pass = false;       // meaningful only when applicable
  std::string lhs, rhs;
  std::string note;
};

// -- exact sparse rank over the rationals -----------------------------------------
//
// Fraction-free elimination on sparse integer rows: each reduction step is
// the cross-multiplied difference row*lead(p) - p*lead(row), with the row
// content divided out to keep entries small. Row scaling never changes
// the rank, so the result is the rank over Q.

using SparseRow = std::vector<std::pair<int, Int>>;  // sorted by column

namespace detail {

inline void row_content_normalize(SparseRow& row) {
  Int g = 0;
  for (auto& [c, v] : row) g = boost::multiprecision::gcd(g, v);
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

inline SparseRow row_combine(const SparseRow& a, const Int& ca,
                             const SparseRow& b, const Int& cb) {
  // ca * a + cb * b
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, ca * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, cb * b[j].second);
      ++j;
    } else {
      Int v = ca * a[i].second + cb * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

inline int exact_rank(std::vector<SparseRow> rows) {
  std::map<int, SparseRow> pivots;  // leading column -> pivot row
  int rank = 0;
  for (auto& row : rows) {
    detail::row_content_normalize(row);
    while (!row.empty()) {
      int lead = row.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(row));
        ++rank;
        break;
      }
      const SparseRow& p = it->second;
      row = detail::row_combine(row, p.front().second, p, -row.front().second);
      detail::row_content_normalize(row);
    }
  }
  return rank;
}

// -- Macaulay-matrix Hilbert function ----------------------------------------------
//
// HF(S/J_G, j) = #monomials of degree j in 2n variables minus the rank of
// the matrix whose rows are m*(x_a y_b - x_b y_a) over all monomials m of
// degree j-2 and edges ab. Rows have two +-1 entries, so the elimination
// stays tiny. Exponent vectors are nibble-packed, which caps the ring at
// 16 variables and the degree at 15.

namespace detail {

template <typename F>
void enumerate_monomials(int nvars, int degree, int from, std::uint64_t key,
                         F&& fn) {
  if (degree == 0) {
    fn(key);
    return;
  }
  if (from >= nvars) return;
  for (int d = 0; d <= degree; ++d)
    enumerate_monomials(nvars, degree - d, from + 1,
                        key + (static_cast<std::uint64_t>(d) << (4 * from)),
                        fn);
}

}  // namespace detail

inline Int hf_macaulay(const Graph& g, int j, int max_vars = 16) {
  int n = g.n();
  int nvars = 2 * n;
  if (j < 0) throw error("Hilbert function index must be nonnegative");
  if (nvars > max_vars || nvars > 16 || j > 15)
    throw size_limit_error("Macaulay oracle guard exceeded (2n = " +
                           std::to_string(nvars) + ", j = " +
                           std::to_string(j) + ")");
  Int total = binomial(nvars + j - 1, j);
  if (j < 2 || g.edge_count() == 0) return total;

  std::unordered_map<std::uint64_t, int> col;
  auto col_id = [&](std::uint64_t key) {
    auto [it, fresh] = col.try_emplace(key, static_cast<int>(col.size()));
    (void)fresh;
    return it->second;
  };
  std::vector<SparseRow> rows;
  auto edges = g.edges();
  detail::enumerate_monomials(nvars, j - 2, 0, 0, [&](std::uint64_t key) {
    for (auto [a, b] : edges) {
      std::uint64_t lead =
          key + (1ull << (4 * var_x(a, n))) + (1ull << (4 * var_y(b, n)));
      std::uint64_t trail =
          key + (1ull << (4 * var_x(b, n))) + (1ull << (4 * var_y(a, n)));
      int c1 = col_id(lead), c2 = col_id(trail);
      SparseRow row;
      if (c1 < c2) {
        row = {{c1, Int(1)}, {c2, Int(-1)}};
      } else {
        row = {{c2, Int(-1)}, {c1, Int(1)}};
      }
      rows.push_back(std::move(row));
    }
  });
  return total - exact_rank(std::move(rows));
}

// -- heights of squarefree monomial ideals ------------------------------------------

namespace detail {

inline void min_cover_rec(const std::vector<VarSet>& gens, VarSet chosen,
                          std::size_t from, int depth, int& best) {
  if (depth >= best) return;
  // first generator not yet hit
  std::size_t g = from;
  while (g < gens.size() && gens[g].intersects(chosen)) ++g;
  if (g == gens.size()) {
    best = depth;
    return;
  }
  for (int v : gens[g].to_list()) {
    VarSet next = chosen;
    next.add(v);
    min_cover_rec(gens, next, g + 1, depth + 1, best);
  }
}

}  // namespace detail

// Height = size of a minimum vertex cover (transversal) of the generator
// supports; exact branch-and-bound at desk scale.
inline int monomial_ideal_height(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return 0;
  for (const auto& m : ideal.generators())
    if (m.empty()) throw error("unit ideal has no height");
  int best = ideal.nvars();
  detail::min_cover_rec(ideal.generators(), VarSet(), 0, 0, best);
  return best;
}

// -- intersection coefficient check --------------------------------------------------
//
// For monomial ideals with ht(I) > i + ht(J), the i-th coefficient of
// R/(I n J) equals that of R/J.

inline CheckReport check_lemma31(const MonomialIdeal& i_ideal,
                                 const MonomialIdeal& j_ideal, int i) {
  CheckReport rep;
  rep.name = "lemma31";
  int hi = monomial_ideal_height(i_ideal);
  int hj = monomial_ideal_height(j_ideal);
  rep.inputs = "nvars=" + std::to_string(i_ideal.nvars()) +
               " ht(I)=" + std::to_string(hi) +
               " ht(J)=" + std::to_string(hj) + " i=" + std::to_string(i);
  if (!(hi > i + hj)) {
    rep.applicable = false;
    rep.note = "not applicable: requires ht(I) > i + ht(J)";
    return rep;
  }
  Int lhs = coefficient(reduce(numerator(intersect(i_ideal, j_ideal))), i);
  Int rhs = coefficient(reduce(numerator(j_ideal)), i);
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  rep.pass = (lhs == rhs);
  return rep;
}

// -- vertex deletion check -------------------------------------------------------------
//
// fcdeg_G(v) >= i+3 implies e_i(S/J_G) = e_i(S/J_{G \ v}). When the
// hypothesis fails the report is marked inapplicable but both sides are
// still computed, which is what the negative-control fixture relies on.

inline CheckReport check_thm33(const Graph& g, int v, int i,
                               int pipeline_max_n = 12) {
  CheckReport rep;
  rep.name = "thm33";
  int fc = free_clique_degree(g, v);
  rep.inputs = "n=" + std::to_string(g.n()) + " v=" + std::to_string(v) +
               " i=" + std::to_string(i) + " fcdeg=" + std::to_string(fc);
  if (g.n() > pipeline_max_n)
    throw size_limit_error("deletion check exceeds the pipeline guard");
  Int lhs = coefficient(reduced_pipeline(g), i);
  Int rhs = coefficient(
      reduced_pipeline(delete_vertices(g, VertexSet::single(v)).graph), i);
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  if (fc < i + 3) {
    rep.applicable = false;
    rep.note = "hypothesis unmet: fcdeg(v) = " + std::to_string(fc) + " < " +
               std::to_string(i + 3);
    return rep;
  }
  rep.pass = (lhs == rhs);
  return rep;
}

// -- neighbor-completion series identity -------------------------------------------------
//
// J_G = J_{G_v} n (J_{G \ v} + <x_v, y_v>) gives, through the associated
// short exact sequence,
//   HS(S/J_G) = HS(S/J_{G_v}) + HS(S'/J_{G \ v}) - HS(S'/J_{(G_v) \ v})
// with S' the ring without x_v, y_v. Checked as exact rational equality.

inline CheckReport check_ohtani_identity(const Graph& g, int v,
                                         int pipeline_max_n = 12) {
  CheckReport rep;
  rep.name = "ohtani";
  rep.inputs = "n=" + std::to_string(g.n()) + " v=" + std::to_string(v);
  if (g.n() > pipeline_max_n)
    throw size_limit_error("completion check exceeds the pipeline guard");
  Graph gv = neighbor_completion(g, v);
  VertexSet only_v = VertexSet::single(v);
  HilbertSeries lhs = pipeline(g);
  HilbertSeries a = pipeline(gv);
  HilbertSeries b = pipeline(delete_vertices(g, only_v).graph);
  HilbertSeries c = pipeline(delete_vertices(gv, only_v).graph);
  c.num = -c.num;
  HilbertSeries rhs = add({a, b, c});
  ReducedSeries rl = reduce(lhs), rr = reduce(rhs);
  rep.lhs = series_str(rl);
  rep.rhs = series_str(rr);
  rep.pass = (rl == rr);
  return rep;
}

// -- regularity oracle --------------------------------------------------------------------
//
// reg(S/in(J_G)) from simplicial homology: for the Stanley-Reisner
// complex D of the initial ideal,
//   reg = max{ l+1 : H~_l(D|_sigma) != 0, l <= |sigma| - 2 }
// over squarefree multidegrees sigma. Nonzero graded Betti numbers only
// occur at lcms of generator supports, so sigma ranges over the lcm
// lattice. Test utility only: it reports the regularity of the initial
// ideal, whose agreement with the edge-ideal quotient rests on standard
// results outside the composition rules used elsewhere.

namespace detail {

inline std::vector<VarSet> lcm_lattice(const std::vector<VarSet>& gens,
                                       std::size_t cap) {
  std::set<VarSet> lattice(gens.begin(), gens.end());
  std::vector<VarSet> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    std::vector<VarSet> next;
    for (const auto& s : frontier)
      for (const auto& g : gens) {
        VarSet u = s | g;
        if (lattice.insert(u).second) next.push_back(u);
      }
    if (lattice.size() > cap)
      throw size_limit_error("lcm lattice exceeds the oracle guard");
    frontier = std::move(next);
  }
  return {lattice.begin(), lattice.end()};
}

// faces of the restriction D|_sigma, grouped by dimension; a subset is a
// face iff it contains no generator support
inline std::vector<std::vector<VarSet>> restricted_faces(
    const std::vector<VarSet>& gens, const VarSet& sigma) {
  std::vector<int> verts = sigma.to_list();
  std::vector<std::vector<VarSet>> by_dim(verts.size() + 1);
  by_dim[0].push_back(VarSet());  // the empty face, dimension -1
  std::vector<VarSet> frontier{VarSet()};
  for (int size = 1; size <= static_cast<int>(verts.size()); ++size) {
    std::vector<VarSet> next;
    for (const auto& face : frontier) {
      int last = face.empty() ? -1 : face.to_list().back();
      for (int v : verts) {
        if (v <= last) continue;
        VarSet cand = face;
        cand.add(v);
        bool ok = true;
        for (const auto& g : gens)
          if (g.subset_of(cand)) {
            ok = false;
            break;
          }
        if (ok) next.push_back(cand);
      }
    }
    by_dim[size] = next;
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return by_dim;
}

inline int boundary_rank(const std::vector<VarSet>& faces,
                         const std::vector<VarSet>& below) {
  if (faces.empty() || below.empty()) return 0;
  std::map<VarSet, int> index;
  for (std::size_t k = 0; k < below.size(); ++k) index[below[k]] = static_cast<int>(k);
  std::vector<SparseRow> rows;
  rows.reserve(faces.size());
  for (const auto& f : faces) {
    SparseRow row;
    auto vs = f.to_list();
    for (std::size_t k = 0; k < vs.size(); ++k) {
      VarSet sub = f;
      sub.remove(vs[k]);
      row.emplace_back(index.at(sub), (k % 2 == 0) ? Int(1) : Int(-1));
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(row));
  }
  return exact_rank(std::move(rows));
}

}  // namespace detail

inline int regularity_oracle(const Graph& g, int max_vars = 16) {
  if (2 * g.n() > max_vars)
    throw size_limit_error("regularity oracle guard: 2n = " +
                           std::to_string(2 * g.n()) + " exceeds " +
                           std::to_string(max_vars));
  MonomialIdeal ideal = initial_ideal(g);
  if (ideal.is_zero()) return 0;
  auto lattice = detail::lcm_lattice(ideal.generators(), 100000);
  int reg = 0;
  for (const auto& sigma : lattice) {
    auto by_dim = detail::restricted_faces(ideal.generators(), sigma);
    int top = static_cast<int>(by_dim.size()) - 1;
    std::vector<int> ranks(top + 2, 0);  // ranks[k] = rank of boundary C_k -> C_{k-1}
    for (int k = 1; k <= top; ++k)
      ranks[k] = detail::boundary_rank(by_dim[k], by_dim[k - 1]);
    for (int k = 0; k <= top; ++k) {
      // chain group C_{k-1} holds the (k-1)-dimensional faces
      int l = k - 1;  // homological degree
      if (l > sigma.count() - 2) continue;
      Int h = Int(by_dim[k].size()) - ranks[k] - ranks[k + 1];
      if (h != 0) reg = std::max(reg, l + 1);
    }
  }
  return reg;
}

// -- seeded generators and suite runners ------------------------------------------------

inline Graph random_graph(std::mt19937_64& rng, int n, double edge_prob) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng) < edge_prob) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// A random instance with a designated hub of free-clique degree >= k:
// the hub carries k pendant leaves that nothing else touches, plus a
// random graph on the remaining vertices that may attach to the hub.
struct DeletionInstance {
  Graph graph;
  int hub;
  int i;
};

inline DeletionInstance random_deletion_instance(std::mt19937_64& rng,
                                                 int max_n, int max_i) {
  std::uniform_int_distribution<int> pick_i(0, max_i);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int i = pick_i(rng);
  int k = i + 3;
  int n_min = 1 + k;
  std::uniform_int_distribution<int> pick_n(n_min, std::max(n_min, max_n));
  int n = pick_n(rng);
  // hub = 1, leaves 2..k+1, extras k+2..n
  std::vector<std::pair<int, int>> edges;
  for (int leaf = 2; leaf <= k + 1; ++leaf) edges.emplace_back(1, leaf);
  for (int u = k + 2; u <= n; ++u) {
    if (coin(rng) < 0.5) edges.emplace_back(1, u);
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng) < 0.4) edges.emplace_back(u, v);
  }
  Graph g(n, edges);
  // random relabeling to avoid any labeling bias
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return DeletionInstance{relabel(g, perm), perm[1], i};
}

struct IdealPair {
  MonomialIdeal i_ideal, j_ideal;
  int i;
};

// J lives on a few low-index variables; I is generated by i + ht(J) + 1
// pairwise disjoint supports on the remaining variables, which pins
// ht(I) = i + ht(J) + 1 > i + ht(J). Heights are still recomputed
// exactly by the checker.
inline IdealPair random_ideal_pair(std::mt19937_64& rng, int max_i) {
  std::uniform_int_distribution<int> pick_i(0, max_i);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int i = pick_i(rng);
  while (true) {
    std::uniform_int_distribution<int> pick_jvars(2, 3);
    int jvars = pick_jvars(rng);
    std::uniform_int_distribution<int> pick_jgens(1, 3);
    std::vector<VarSet> jg;
    for (int t = pick_jgens(rng); t > 0; --t) {
      VarSet m;
      for (int v = 0; v < jvars; ++v)
        if (coin(rng) < 0.6) m.add(v);
      if (!m.empty()) jg.push_back(m);
    }
    if (jg.empty()) continue;
    MonomialIdeal j_tmp(16, jg);
    int hj = monomial_ideal_height(j_tmp);
    int need = i + hj + 1;
    int nvars = jvars + 2 * need;
    if (nvars > 14) continue;
    std::vector<VarSet> ig;
    int v = jvars;
    for (int t = 0; t < need; ++t) {
      VarSet m;
      m.add(v++);
      if (coin(rng) < 0.5) m.add(v++);
      ig.push_back(m);
    }
    return IdealPair{MonomialIdeal(nvars, ig), MonomialIdeal(nvars, jg), i};
  }
}

// Connected graphs on up to max_n vertices, one representative per
// isomorphism class (minimum edge mask over all vertex permutations).
inline std::vector<Graph> connected_graphs_up_to_iso(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    // all permutations of 1..n as edge-position maps
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> edge_maps;
    do {
      std::vector<int> emap(m);
      for (int e = 0; e < m; ++e) {
        int a = perm[pairs[e].first - 1], b = perm[pairs[e].second - 1];
        if (a > b) std::swap(a, b);
        for (int f = 0; f < m; ++f)
          if (pairs[f] == std::make_pair(a, b)) {
            emap[e] = f;
            break;
          }
      }
      edge_maps.push_back(std::move(emap));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      bool canonical = true;
      for (const auto& emap : edge_maps) {
        std::uint64_t image = 0;
        for (int e = 0; e < m; ++e)
          if ((mask >> e) & 1u) image |= 1ull << emap[e];
        if (image < mask) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < m; ++e)
        if ((mask >> e) & 1u) edges.push_back(pairs[e]);
      Graph g(n, edges);
      if (connected_components(g).size() == 1) out.push_back(g);
    }
  }
  return out;
}

inline std::vector<CheckReport> run_thm33_suite(int cases, std::uint64_t seed,
                                                int max_n = 8, int max_i = 2) {
  std::mt19937_64 rng(seed);
  std::vector<CheckReport> out;
  while (static_cast<int>(out.size()) < cases) {
    auto inst = random_deletion_instance(rng, max_n, max_i);
    auto rep = check_thm33(inst.graph, inst.hub, inst.i, max_n);
    if (!rep.applicable) continue;  // generator guarantees this is rare
    out.push_back(std::move(rep));
  }
  return out;
}

inline std::vector<CheckReport> run_lemma31_suite(int cases,
                                                  std::uint64_t seed,
                                                  int max_i = 2) {
  std::mt19937_64 rng(seed);
  std::vector<CheckReport> out;
  while (static_cast<int>(out.size()) < cases) {
    auto pair = random_ideal_pair(rng, max_i);
    auto rep = check_lemma31(pair.i_ideal, pair.j_ideal, pair.i);
    if (!rep.applicable) continue;
    out.push_back(std::move(rep));
  }
  return out;
}

inline std::vector<CheckReport> run_ohtani_suite(int cases, std::uint64_t seed,
                                                 int max_n = 7) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(2, max_n);
  std::uniform_real_distribution<double> pick_p(0.2, 0.8);
  std::vector<CheckReport> out;
  for (int c = 0; c < cases; ++c) {
    int n = pick_n(rng);
    Graph g = random_graph(rng, n, pick_p(rng));
    std::uniform_int_distribution<int> pick_v(1, n);
    out.push_back(check_ohtani_identity(g, pick_v(rng), max_n));
  }
  return out;
}

// Certifiable random expressions for the oracle suite: du/cs/join
// compositions over small leaves, kept within a vertex budget.
inline ExprPtr random_certifiable_expr(std::mt19937_64& rng, int max_vertices,
                                       int depth = 0) {
  auto rand_int = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
  };
  if (max_vertices < 1) max_vertices = 1;
  if (depth >= 3 || max_vertices <= 2 || rng() % 2 == 0) {
    switch (rng() % 5) {
      case 0:
        return expr_k(rand_int(1, std::min(4, max_vertices)));
      case 1:
        return expr_e(rand_int(1, std::min(3, max_vertices)));
      case 2:
        if (max_vertices >= 2)
          return expr_star(rand_int(1, std::min(4, max_vertices - 1)));
        return expr_k(1);
      case 3:
        return expr_path(rand_int(1, std::min(5, max_vertices)));
      default:
        if (max_vertices >= 4)
          return expr_biclaw(rand_int(1, std::min(3, max_vertices - 3)),
                             rand_int(1, std::min(3, max_vertices - 3)));
        return expr_path(rand_int(1, std::min(5, max_vertices)));
    }
  }
  ExprPtr l = random_certifiable_expr(rng, rand_int(1, max_vertices - 1),
                                      depth + 1);
  int used = vertex_count(l);
  switch (rng() % 3) {
    case 0:
      return expr_du(l, random_certifiable_expr(rng, max_vertices - used,
                                                depth + 1));
    case 1:
      return expr_join(l, random_certifiable_expr(rng, max_vertices - used,
                                                  depth + 1));
    default: {
      ExprPtr r = random_certifiable_expr(rng, max_vertices - used + 1,
                                          depth + 1);
      Graph gl = expr_to_graph(l), gr = expr_to_graph(r);
      int v = 0, w = 0;
      for (int u = 1; u <= gl.n() && !v; ++u)
        if (is_free_vertex(gl, u)) v = u;
      for (int u = 1; u <= gr.n() && !w; ++u)
        if (is_free_vertex(gr, u)) w = u;
      if (!v || !w) return expr_du(l, r);  // no free attachment, fall back
      return expr_cs(l, v, r, w);
    }
  }
}

inline std::vector<CheckReport> run_oracle_suite(int cases, std::uint64_t seed,
                                                 int max_vars = 16) {
  std::mt19937_64 rng(seed);
  std::vector<CheckReport> out;
  for (int c = 0; c < cases; ++c) {
    // the clique-sum fallback may overshoot the budget by one vertex
    ExprPtr e = random_certifiable_expr(rng, max_vars / 2);
    while (2 * vertex_count(e) > max_vars)
      e = random_certifiable_expr(rng, max_vars / 2);
    CheckReport rep;
    rep.name = "oracle";
    rep.inputs = expr_str(e);
    int by_rules = reg_by_rules(e).reg;
    int by_homology = regularity_oracle(expr_to_graph(e), max_vars);
    rep.lhs = std::to_string(by_rules);
    rep.rhs = std::to_string(by_homology);
    rep.pass = (by_rules == by_homology);
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace bei
