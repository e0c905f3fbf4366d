#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bei/common.hpp"
#include "bei/expr.hpp"
#include "bei/graph.hpp"
#include "bei/hilbert.hpp"
#include "bei/rules.hpp"

// Graph factories realizing prescribed (regularity, Hilbert-coefficient)
// pairs, and the dispatcher realize(i, r, s) that picks a family, emits a
// construction expression, and justifies the e_i claim by a chain of
// hub deletions (each witnessed by a free-clique degree >= i+3) down to a
// rule-evaluable core.
//
// The r = 2 families are joins of a clique row with a complete graph; the
// r = 3 families add either a clique-sum edge or a pendant fan whose hub
// deletion returns an r = 2 core; r >= 4 is reached by clique-summing a
// chain of stars (regularity +2 each) and, for odd targets, one biclaw
// (+3) onto an r = 2 base.

namespace bei {

struct RealizationRequest {
  int i = 0;       // coefficient index
  int r = 1;       // target regularity
  long long s = 0; // target e_i
};

struct ChainStep {
  int vertex = 0;  // label in the graph at deletion time
  int fcdeg = 0;   // free-clique degree witnessed before deleting
};

struct Certificate {
  ExprPtr expr;
  RegCertificate reg;
  int i = 0;
  long long s = 0;
  std::vector<ChainStep> chain;
  ExprPtr base;        // Pendants-free expression equal to the reduced core
  std::string method;  // "rules" | "pipeline" | "reduced"
  bool verified = false;
};

// A family instance: the expression, the hubs to delete (labels in the
// instance graph, in deletion order), and the rule-evaluable core left
// after the deletions.
struct FamilyPlan {
  ExprPtr expr;
  std::vector<int> hubs;
  ExprPtr base;
};

namespace detail {

// Apply the hub deletions in order, recording the current label and the
// free-clique degree at deletion time; requires fcdeg >= i+3 throughout
// and that the final core is exactly the base expression's graph.
inline std::vector<ChainStep> make_chain(const FamilyPlan& plan, int i) {
  Graph g = expr_to_graph(plan.expr);
  std::vector<int> current(g.n() + 1);
  for (int v = 1; v <= g.n(); ++v) current[v] = v;
  std::vector<ChainStep> steps;
  for (int hub : plan.hubs) {
    int label = current[hub];
    if (label == 0) throw error("internal: deletion chain hits a deleted vertex");
    int fc = free_clique_degree(g, label);
    if (fc < i + 3)
      throw error("internal: hub " + std::to_string(hub) +
                  " has free-clique degree " + std::to_string(fc) +
                  " < " + std::to_string(i + 3));
    steps.push_back({label, fc});
    auto del = delete_vertices(g, VertexSet::single(label));
    g = del.graph;
    for (int v = 1; v < static_cast<int>(current.size()); ++v)
      if (current[v]) current[v] = del.new_label[current[v]];
  }
  if (!(g == expr_to_graph(plan.base)))
    throw error("internal: reduced core does not match the base expression");
  return steps;
}

}  // namespace detail

// join(du(K m, E r), K n): the workhorse join of a clique and r isolated
// vertices with a complete graph.
inline ExprPtr clique_row_join(int m, int isolated, int n) {
  return expr_join(expr_du(expr_k(m), expr_e(isolated)), expr_k(n));
}

// ((K_{r+2} u_ K_2) + one isolated) * K_2, the e_1 <= 0 family at reg 2;
// e_1 = 1 - r.
inline ExprPtr e1_nonpos_family(int r) {
  return expr_join(
      expr_du(expr_cs(expr_k(r + 2), 1, expr_k(2), 1), expr_e(1)),
      expr_k(2));
}

inline FamilyPlan family_e0_reg2(long long s) {
  // join(du(K s, E 2), K 1): the joined vertex has three free cliques;
  // deleting it leaves K_s and two isolated vertices.
  int m = static_cast<int>(s);
  FamilyPlan p;
  p.expr = expr_join(expr_du(expr_k(m), expr_e(2)), expr_k(1));
  p.hubs = {m + 3};
  p.base = expr_du(expr_k(m), expr_e(2));
  return p;
}

inline FamilyPlan family_e0_reg3(long long s) {
  FamilyPlan p;
  if (s == 1) {
    p.expr = expr_biclaw(3, 3);
    p.hubs = {1, 2};
    p.base = expr_e(6);
    return p;
  }
  int m = static_cast<int>(s);
  p.expr = expr_cs(expr_k(m), 1, expr_star(4), 1);
  p.hubs = {m + 4};  // the star center
  p.base = expr_du(expr_k(m), expr_e(3));
  return p;
}

inline FamilyPlan family_e1_reg2(long long s) {
  FamilyPlan p;
  if (s >= 1) {
    int m = static_cast<int>(s) + 1;
    p.expr = expr_join(expr_du(expr_k(m), expr_e(3)), expr_k(1));
    p.hubs = {m + 4};
    p.base = expr_du(expr_k(m), expr_e(3));
    return p;
  }
  int r = static_cast<int>(1 - s);
  p.expr = e1_nonpos_family(r);
  p.base = p.expr;  // rule-evaluable directly
  return p;
}

inline FamilyPlan family_e1_reg3(long long s) {
  FamilyPlan p;
  if (s >= 1) {
    int m = static_cast<int>(s) + 1;
    p.expr = expr_cs(expr_k(m), 1, expr_star(5), 1);
    p.hubs = {m + 5};
    p.base = expr_du(expr_k(m), expr_e(4));
    return p;
  }
  int r = static_cast<int>(8 - s);
  // clique-sum one edge onto the free isolated-turned-simplicial vertex
  // of the reg-2 family; e_1 becomes 8 - r.
  p.expr = expr_cs(e1_nonpos_family(r), r + 4, expr_k(2), 1);
  p.base = p.expr;
  return p;
}

inline FamilyPlan family_ei_reg2(int i, long long s) {
  FamilyPlan p;
  bool even = (i % 2 == 0);
  if (s == 0) {
    p.expr = clique_row_join(1, 3, i + 2);  // e_i = 0 via the n = 1 row
  } else if ((even && s >= 1) || (!even && s <= -1)) {
    int m = static_cast<int>(s >= 1 ? s : -s);
    p.expr = clique_row_join(m, 1, i - 1);  // e_i = m (-1)^{i}
  } else {
    int n = static_cast<int>(s >= 1 ? s + 1 : 1 - s);
    p.expr = clique_row_join(n, 3, i + 2);  // e_i = (-1)^{i+1} (n-1)
  }
  p.base = p.expr;
  return p;
}

inline FamilyPlan family_ei_reg3(int i, long long s) {
  FamilyPlan p;
  bool even = (i % 2 == 0);
  if (s == 0) {
    int k = i + 3;
    p.expr = expr_biclaw(k, k);
    p.hubs = {1, 2};
    p.base = expr_e(2 * k);
    return p;
  }
  if ((even && s >= 1) || (!even && s <= -1)) {
    // pendant fan at a K_2 vertex of join(du(K r, K 2), K n), n = i-1;
    // deleting the fan hub leaves join(du(K r, E 1), K n) + isolated.
    int r = static_cast<int>(s >= 1 ? s : -s);
    int n = i - 1;
    p.expr = expr_pendants(
        expr_join(expr_du(expr_k(r), expr_k(2)), expr_k(n)), r + 1, n + 4);
    p.hubs = {r + 1};
    p.base = expr_du(clique_row_join(r, 1, n), expr_e(n + 4));
    return p;
  }
  if (i >= 3) {
    // clique-sum an edge onto the free vertex of join(du(K r, E 1), K n),
    // n = i-2; e_i = r (-1)^{n+1} is untouched by the free edge.
    int r = static_cast<int>(s >= 1 ? s : -s);
    int n = i - 2;
    p.expr = expr_cs(clique_row_join(r, 1, n), r + 1, expr_k(2), 1);
    p.base = p.expr;
    return p;
  }
  // i = 2, s <= -1: pendant fan on join(du(du(K n-1, E 1), K 2), K 3)
  // with n = 2 - s; deleting the hub leaves (K_{n-1} + 2 isolated) * K_3
  // whose e_2 is -(n-2) = s.
  int n = static_cast<int>(2 - s);
  p.expr = expr_pendants(
      expr_join(expr_du(expr_du(expr_k(n - 1), expr_e(1)), expr_k(2)),
                expr_k(3)),
      n + 1, 5);
  p.hubs = {n + 1};
  p.base = expr_du(
      expr_join(expr_du(expr_du(expr_k(n - 1), expr_e(1)), expr_e(1)),
                expr_k(3)),
      expr_e(5));
  return p;
}

// Raise a reg-2 plan to regularity r >= 4: clique-sum a chain of stars
// K_{1, i+5} leaf to leaf (each adds 2), preceded for odd r by one
// biclaw B_{i+5, i+5} (adds 3). Star centers and biclaw hubs all reach
// free-clique degree >= i+3, so deleting them preserves e_i and returns
// the base graph plus isolated vertices.
inline FamilyPlan lift_regularity(FamilyPlan base_plan, int r, int i) {
  Graph base_graph = expr_to_graph(base_plan.expr);
  int attach = 0;  // smallest free vertex of the current attachment site
  for (int v = 1; v <= base_graph.n() && attach == 0; ++v)
    if (is_free_vertex(base_graph, v)) attach = v;
  if (attach == 0) throw error("internal: lift base has no free vertex");

  ExprPtr expr = base_plan.expr;
  int cur_n = base_graph.n();
  std::vector<int> lift_hubs;
  int stars = 0;
  if (r % 2 == 0) {
    stars = r / 2 - 1;
  } else {
    stars = (r - 1) / 2 - 2;
    int p = i + 5;
    expr = expr_cs(expr, attach, expr_biclaw(p, p), 3);  // at a u-side leaf
    lift_hubs.push_back(cur_n + 1);  // hub u
    lift_hubs.push_back(cur_n + 2);  // hub v
    attach = cur_n + p + 2;          // first v-side leaf
    cur_n += 2 * p + 1;
  }
  int t = i + 5;
  for (int j = 0; j < stars; ++j) {
    expr = expr_cs(expr, attach, expr_star(t), 1);  // at leaf 1
    lift_hubs.push_back(cur_n + t);  // the center
    attach = cur_n + 1;              // a fresh leaf
    cur_n += t;
  }

  // Deleting the lift hubs alone returns the base graph plus isolated
  // vertices, and every reg-2 base expression is rule-evaluable, so the
  // lifted certificate's core is du(base expr, E k). The base's own chain
  // is not replayed inside the lifted graph: the attachment vertex sits
  // in a free clique of the base hub, so those witnesses would degrade.
  FamilyPlan out;
  out.expr = expr;
  out.hubs = lift_hubs;
  int isolated = cur_n - static_cast<int>(lift_hubs.size()) - base_graph.n();
  out.base = expr_du(base_plan.expr, expr_e(isolated));
  return out;
}

namespace detail {

inline FamilyPlan dispatch_reg2(int i, long long s) {
  if (i == 0) {
    if (s <= 0)
      throw infeasible_error(
          "e_0 is the multiplicity Q(1) >= 1 of a nonzero quotient; no "
          "graph attains e_0 <= 0");
    return family_e0_reg2(s);
  }
  if (i == 1) return family_e1_reg2(s);
  return family_ei_reg2(i, s);
}

}  // namespace detail

// Build the certificate for a (i, r, s) request. Throws infeasible_error
// for the documented impossible combinations.
inline Certificate realize(const RealizationRequest& req) {
  if (req.r < 1) throw error("target regularity must be >= 1");
  if (req.i < 0) throw error("coefficient index must be >= 0");
  if (req.s > 1000 || req.s < -1000)
    throw size_limit_error(
        "coefficient targets are limited to |s| <= 1000 (the graphs grow "
        "linearly in |s| and the vertex cap is far below that)");
  const int i = req.i;
  const long long s = req.s;

  FamilyPlan plan;
  if (req.r == 1) {
    // regularity exactly 1 forces a complete graph on n >= 2 vertices,
    // pinning the coefficients: e_0 = n, e_1 = n-1, e_i = 0 for i >= 2
    if (i == 0 && s >= 2) {
      plan.expr = expr_k(static_cast<int>(s));
    } else if (i == 1 && s >= 1) {
      plan.expr = expr_k(static_cast<int>(s) + 1);
    } else if (i >= 2 && s == 0) {
      plan.expr = expr_k(2);
    } else {
      throw infeasible_error(
          "regularity 1 forces a complete graph on n >= 2 vertices, whose "
          "coefficients are e_0 = n >= 2, e_1 = n-1 >= 1 and e_i = 0 for "
          "i >= 2");
    }
    plan.base = plan.expr;
  } else if (req.r == 2) {
    plan = detail::dispatch_reg2(i, s);
  } else if (req.r == 3) {
    if (i == 0) {
      if (s <= 0)
        throw infeasible_error(
            "e_0 is the multiplicity Q(1) >= 1 of a nonzero quotient; no "
            "graph attains e_0 <= 0");
      plan = family_e0_reg3(s);
    } else if (i == 1) {
      plan = family_e1_reg3(s);
    } else {
      plan = family_ei_reg3(i, s);
    }
  } else {
    if (i == 0 && s <= 0)
      throw infeasible_error(
          "e_0 is the multiplicity Q(1) >= 1 of a nonzero quotient; no "
          "graph attains e_0 <= 0");
    plan = lift_regularity(detail::dispatch_reg2(i, s), req.r, i);
  }

  Certificate cert;
  cert.expr = plan.expr;
  cert.reg = reg_by_rules(plan.expr);
  if (cert.reg.reg != req.r)
    throw error("internal: construction certifies regularity " +
                std::to_string(cert.reg.reg) + ", expected " +
                std::to_string(req.r));
  cert.i = i;
  cert.s = s;
  cert.chain = detail::make_chain(plan, i);
  cert.base = plan.base;
  cert.method = "rules";
  return cert;
}

struct VerificationResult {
  bool ok = false;
  std::string detail;
};

// Re-derive everything the certificate claims: replay the regularity
// steps, walk the deletion chain recomputing each free-clique degree,
// check the reduced core against the base expression, evaluate e_i of the
// base by rules, and, when the whole graph is small enough, cross-check
// e_i through the pipeline.
inline VerificationResult verify_certificate(const Certificate& cert,
                                             int pipeline_max_n = 12) {
  VerificationResult out;
  if (!replay_reg_certificate(cert.reg)) {
    out.detail = "regularity certificate does not replay";
    return out;
  }
  if (reg_by_rules(cert.expr).reg != cert.reg.reg) {
    out.detail = "regularity certificate does not belong to the expression";
    return out;
  }
  Graph g = expr_to_graph(cert.expr);
  Graph full = g;
  for (const auto& step : cert.chain) {
    if (step.vertex < 1 || step.vertex > g.n()) {
      out.detail = "chain step vertex out of range";
      return out;
    }
    int fc = free_clique_degree(g, step.vertex);
    if (fc != step.fcdeg || fc < cert.i + 3) {
      out.detail = "free-clique degree witness fails at vertex " +
                   std::to_string(step.vertex);
      return out;
    }
    g = delete_vertices(g, VertexSet::single(step.vertex)).graph;
  }
  if (!(g == expr_to_graph(cert.base))) {
    out.detail = "reduced core does not match the base expression";
    return out;
  }
  Int ei = coefficient(reduce(hs_by_rules(cert.base)), cert.i);
  if (ei != cert.s) {
    out.detail = "base evaluates to e_i = " + ei.str();
    return out;
  }
  if (full.n() <= pipeline_max_n) {
    Int direct = coefficient(reduce(pipeline(full)), cert.i);
    if (direct != cert.s) {
      out.detail = "pipeline disagrees: e_i = " + direct.str();
      return out;
    }
    out.detail = "verified by rules and pipeline";
  } else {
    out.detail = "verified by rules";
  }
  out.ok = true;
  return out;
}

}  // namespace bei
