#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bei/common.hpp"
#include "bei/graph.hpp"

// Construction expressions: an AST of graph builders with a small textual
// DSL. Grammar:
//
//   expr := "K" INT | "E" INT | "star" INT | "path" INT | "biclaw" INT INT
//         | "du(" expr "," expr ")" | "join(" expr "," expr ")"
//         | "cs(" expr "@" INT "," expr "@" INT ")"
//         | "pendants(" expr "@" INT "," INT ")" ;
//
// Attachment labels refer to the operand's own labeling. Graph realization
// labels operands left to right: in du/join the right operand is shifted
// by the left's order; in cs the right operand's attachment vertex merges
// onto the left's and its other vertices are appended in label order;
// pendants appends t fresh leaves after the operand.

namespace bei {

enum class ExprKind { K, E, Star, Path, Biclaw, DU, Join, CS, Pendants };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::K;
  int a = 0, b = 0;       // leaf parameters
  ExprPtr left, right;    // operands for DU/Join/CS
  int attach_left = 0;    // CS: vertex in left operand
  int attach_right = 0;   // CS: vertex in right operand; Pendants: base vertex
  int pendant_count = 0;  // Pendants: number of leaves
};

namespace detail {

inline ExprPtr make_leaf(ExprKind kind, int a, int b = 0) {
  Expr e{};
  e.kind = kind;
  e.a = a;
  e.b = b;
  return std::make_shared<Expr>(std::move(e));
}

}  // namespace detail

inline ExprPtr expr_k(int n) { return detail::make_leaf(ExprKind::K, n); }
inline ExprPtr expr_e(int n) { return detail::make_leaf(ExprKind::E, n); }
inline ExprPtr expr_star(int t) { return detail::make_leaf(ExprKind::Star, t); }
inline ExprPtr expr_path(int n) { return detail::make_leaf(ExprKind::Path, n); }
inline ExprPtr expr_biclaw(int s, int t) {
  return detail::make_leaf(ExprKind::Biclaw, s, t);
}
inline ExprPtr expr_du(ExprPtr l, ExprPtr r) {
  Expr e{};
  e.kind = ExprKind::DU;
  e.left = std::move(l);
  e.right = std::move(r);
  return std::make_shared<Expr>(std::move(e));
}
inline ExprPtr expr_join(ExprPtr l, ExprPtr r) {
  Expr e{};
  e.kind = ExprKind::Join;
  e.left = std::move(l);
  e.right = std::move(r);
  return std::make_shared<Expr>(std::move(e));
}
inline ExprPtr expr_cs(ExprPtr l, int v, ExprPtr r, int w) {
  Expr e{};
  e.kind = ExprKind::CS;
  e.left = std::move(l);
  e.right = std::move(r);
  e.attach_left = v;
  e.attach_right = w;
  return std::make_shared<Expr>(std::move(e));
}
inline ExprPtr expr_pendants(ExprPtr base, int w, int t) {
  Expr e{};
  e.kind = ExprKind::Pendants;
  e.left = std::move(base);
  e.attach_right = w;
  e.pendant_count = t;
  return std::make_shared<Expr>(std::move(e));
}

inline int vertex_count(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::K:
    case ExprKind::E:
    case ExprKind::Path:
      return e->a;
    case ExprKind::Star:
      return e->a + 1;
    case ExprKind::Biclaw:
      return e->a + e->b + 2;
    case ExprKind::DU:
    case ExprKind::Join:
      return vertex_count(e->left) + vertex_count(e->right);
    case ExprKind::CS:
      return vertex_count(e->left) + vertex_count(e->right) - 1;
    case ExprKind::Pendants:
      return vertex_count(e->left) + e->pendant_count;
  }
  return 0;
}

inline Graph expr_to_graph(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::K:
      return Graph::complete(e->a);
    case ExprKind::E:
      return Graph::edgeless(e->a);
    case ExprKind::Star:
      return Graph::star(e->a);
    case ExprKind::Path:
      return Graph::path(e->a);
    case ExprKind::Biclaw:
      return Graph::biclaw(e->a, e->b);
    case ExprKind::DU:
      return disjoint_union(expr_to_graph(e->left), expr_to_graph(e->right));
    case ExprKind::Join:
      return join(expr_to_graph(e->left), expr_to_graph(e->right));
    case ExprKind::CS:
      return clique_sum(expr_to_graph(e->left), e->attach_left,
                        expr_to_graph(e->right), e->attach_right);
    case ExprKind::Pendants: {
      Graph base = expr_to_graph(e->left);
      if (e->attach_right < 1 || e->attach_right > base.n())
        throw error("pendant attachment vertex out of range");
      if (e->pendant_count < 1) throw error("pendant count must be positive");
      auto edges = base.edges();
      for (int i = 1; i <= e->pendant_count; ++i)
        edges.emplace_back(e->attach_right, base.n() + i);
      return Graph(base.n() + e->pendant_count, edges);
    }
  }
  throw error("unreachable expression kind");
}

inline std::string expr_str(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::K:
      return "K " + std::to_string(e->a);
    case ExprKind::E:
      return "E " + std::to_string(e->a);
    case ExprKind::Star:
      return "star " + std::to_string(e->a);
    case ExprKind::Path:
      return "path " + std::to_string(e->a);
    case ExprKind::Biclaw:
      return "biclaw " + std::to_string(e->a) + " " + std::to_string(e->b);
    case ExprKind::DU:
      return "du(" + expr_str(e->left) + ", " + expr_str(e->right) + ")";
    case ExprKind::Join:
      return "join(" + expr_str(e->left) + ", " + expr_str(e->right) + ")";
    case ExprKind::CS:
      return "cs(" + expr_str(e->left) + " @ " +
             std::to_string(e->attach_left) + ", " + expr_str(e->right) +
             " @ " + std::to_string(e->attach_right) + ")";
    case ExprKind::Pendants:
      return "pendants(" + expr_str(e->left) + " @ " +
             std::to_string(e->attach_right) + ", " +
             std::to_string(e->pendant_count) + ")";
  }
  return "";
}

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind || a->a != b->a || a->b != b->b ||
      a->attach_left != b->attach_left || a->attach_right != b->attach_right ||
      a->pendant_count != b->pendant_count)
    return false;
  if (static_cast<bool>(a->left) != static_cast<bool>(b->left) ||
      static_cast<bool>(a->right) != static_cast<bool>(b->right))
    return false;
  if (a->left && !expr_equal(a->left, b->left)) return false;
  if (a->right && !expr_equal(a->right, b->right)) return false;
  return true;
}

// -- recursive-descent parser ---------------------------------------------------

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : src_(src) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size())
      throw parse_error("unexpected trailing input", pos_);
    return e;
  }

 private:
  ExprPtr parse_expr() {
    skip_ws();
    std::size_t start = pos_;
    std::string word = read_word();
    if (word == "K") return expr_k(read_int());
    if (word == "E") return expr_e(read_int());
    if (word == "star") return expr_star(read_int());
    if (word == "path") return expr_path(read_int());
    if (word == "biclaw") {
      int s = read_int();
      return expr_biclaw(s, read_int());
    }
    if (word == "du" || word == "join") {
      expect('(');
      ExprPtr l = parse_expr();
      expect(',');
      ExprPtr r = parse_expr();
      expect(')');
      return word == "du" ? expr_du(l, r) : expr_join(l, r);
    }
    if (word == "cs") {
      expect('(');
      ExprPtr l = parse_expr();
      expect('@');
      int v = read_int();
      expect(',');
      ExprPtr r = parse_expr();
      expect('@');
      int w = read_int();
      expect(')');
      return expr_cs(l, v, r, w);
    }
    if (word == "pendants") {
      expect('(');
      ExprPtr base = parse_expr();
      expect('@');
      int w = read_int();
      expect(',');
      int t = read_int();
      expect(')');
      return expr_pendants(base, w, t);
    }
    throw parse_error("expected a construction keyword", start);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  std::string read_word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isalpha(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ == start) throw parse_error("expected a keyword", start);
    return std::string(src_.substr(start, pos_ - start));
  }

  int read_int() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    long long value = 0;
    bool any = false;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      value = value * 10 + (src_[pos_] - '0');
      if (value > 1'000'000) throw parse_error("integer too large", start);
      ++pos_;
      any = true;
    }
    if (!any) throw parse_error("expected an integer", start);
    return static_cast<int>(neg ? -value : value);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= src_.size() || src_[pos_] != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(std::string_view src) {
  return detail::ExprParser(src).parse();
}

}  // namespace bei
