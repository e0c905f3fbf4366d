#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bei/io.hpp"
#include "bei/oracles.hpp"

using namespace bei;

namespace {

VarSet vs(std::initializer_list<int> vars) {
  VarSet s;
  for (int v : vars) s.add(v);
  return s;
}

// dense reference rank via plain fraction-free elimination on a copy
int dense_rank(std::vector<std::vector<long long>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = m[r][c];
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      Int f1 = a[rank][c], f2 = a[r][c];
      for (int k = 0; k < cols; ++k) a[r][k] = a[r][k] * f1 - a[rank][k] * f2;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("sparse rank agrees with dense elimination") {
  std::mt19937_64 rng(71);
  for (int it = 0; it < 40; ++it) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<long long>> dense(rows,
                                              std::vector<long long>(cols, 0));
    std::vector<SparseRow> sparse(rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        long long v = static_cast<long long>(rng() % 7) - 3;
        if (rng() % 2) v = 0;
        dense[r][c] = v;
        if (v != 0) sparse[r].emplace_back(c, Int(v));
      }
    CHECK(exact_rank(sparse) == dense_rank(dense));
  }
}

TEST_CASE("macaulay oracle basics") {
  CHECK(hf_macaulay(Graph::complete(2), 0) == 1);
  CHECK(hf_macaulay(Graph::complete(2), 1) == 4);
  CHECK(hf_macaulay(Graph::complete(2), 2) == 9);
  for (int n = 2; n <= 5; ++n)
    CHECK(hf_macaulay(Graph::complete(n), 1) == 2 * n);
  CHECK_THROWS_AS(hf_macaulay(Graph::complete(9), 2), size_limit_error);
}

TEST_CASE("macaulay oracle matches the pipeline expansion") {
  std::mt19937_64 rng(73);
  for (int it = 0; it < 12; ++it) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_graph(rng, n, 0.5);
    auto r = reduced_pipeline(g);
    for (int j = 0; j <= 4; ++j) {
      INFO("n=" << n << " j=" << j);
      CHECK(hf_macaulay(g, j) == hf_expand(r, j));
    }
  }
  // one degree-5 probe on an 8-vertex graph
  std::mt19937_64 rng8(74);
  Graph g8 = random_graph(rng8, 8, 0.4);
  CHECK(hf_macaulay(g8, 5) == hf_expand(reduced_pipeline(g8), 5));
}

TEST_CASE("monomial ideal heights") {
  CHECK(monomial_ideal_height(MonomialIdeal::zero(4)) == 0);
  CHECK(monomial_ideal_height(MonomialIdeal(4, {vs({0}), vs({1}), vs({2})})) == 3);
  CHECK(monomial_ideal_height(MonomialIdeal(4, {vs({0, 1}), vs({1, 2})})) == 1);
  CHECK(monomial_ideal_height(MonomialIdeal(6, {vs({0, 1}), vs({2, 3})})) == 2);
}

TEST_CASE("intersection coefficient check") {
  MonomialIdeal i_ideal(4, {vs({0}), vs({1}), vs({2})});
  MonomialIdeal j_ideal(4, {vs({3})});
  auto rep = check_lemma31(i_ideal, j_ideal, 0);
  CHECK(rep.applicable);
  CHECK(rep.pass);
  CHECK(rep.lhs == "1");

  // equal ideals never satisfy the strict height gap
  auto same = check_lemma31(j_ideal, j_ideal, 0);
  CHECK_FALSE(same.applicable);
}

TEST_CASE("deletion check on biclaw hubs") {
  auto rep = check_thm33(Graph::biclaw(3, 3), 1, 0);
  CHECK(rep.applicable);
  CHECK(rep.pass);
  CHECK(rep.lhs == "1");

  // the negative control: fcdeg(w) = 2 < 3 and the sides disagree
  auto neg = check_thm33(Graph::biclaw(3, 2), 2, 0);
  CHECK_FALSE(neg.applicable);
  CHECK(neg.lhs == "4");
  CHECK(neg.rhs == "1");
  CHECK(neg.note.find("hypothesis unmet") != std::string::npos);
}

TEST_CASE("completion identity spot checks") {
  auto p3 = check_ohtani_identity(Graph::path(3), 2);
  CHECK(p3.pass);
  for (int n = 2; n <= 5; ++n) {
    auto rep = check_ohtani_identity(Graph::complete(n), 1);
    CHECK(rep.pass);
  }
}

TEST_CASE("suites run clean on seeds") {
  for (auto& rep : run_thm33_suite(15, 7)) CHECK(rep.pass);
  for (auto& rep : run_lemma31_suite(25, 3)) CHECK(rep.pass);
  for (auto& rep : run_ohtani_suite(10, 1)) CHECK(rep.pass);
}

TEST_CASE("regularity oracle on known values") {
  CHECK(regularity_oracle(Graph::complete(3)) == 1);
  CHECK(regularity_oracle(Graph::complete(5)) == 1);
  CHECK(regularity_oracle(Graph::edgeless(4)) == 0);
  CHECK(regularity_oracle(Graph::path(4)) == 3);  // the smallest biclaw
  CHECK(regularity_oracle(disjoint_union(Graph::complete(2),
                                         Graph::complete(2))) == 2);
  CHECK(regularity_oracle(Graph::star(3)) == 2);
  CHECK(regularity_oracle(Graph::biclaw(3, 3)) == 3);
  CHECK_THROWS_AS(regularity_oracle(Graph::complete(9)), size_limit_error);
}

TEST_CASE("regularity oracle agrees with the rules") {
  std::vector<std::string> exprs{
      "K 2", "K 5", "E 2", "star 2", "star 5", "path 3", "path 5", "path 7",
      "biclaw 2 2", "biclaw 3 2", "biclaw 3 3", "du(K 2, K 2)",
      "du(K 3, K 4)", "du(path 3, K 2)", "cs(K 3 @ 1, K 3 @ 1)",
      "cs(path 3 @ 1, K 2 @ 1)", "join(E 2, E 2)", "join(K 2, E 2)",
      "join(du(K 2, E 2), K 1)", "cs(star 3 @ 1, star 3 @ 1)",
  };
  for (const auto& text : exprs) {
    ExprPtr e = parse_expr(text);
    INFO(text);
    CHECK(regularity_oracle(expr_to_graph(e), 16) == reg_by_rules(e).reg);
  }
}

TEST_CASE("isomorphism-free enumeration counts") {
  auto graphs = connected_graphs_up_to_iso(6);
  int count[7] = {0, 0, 0, 0, 0, 0, 0};
  for (const auto& g : graphs) ++count[g.n()];
  CHECK(count[1] == 1);
  CHECK(count[2] == 1);
  CHECK(count[3] == 2);
  CHECK(count[4] == 6);
  CHECK(count[5] == 21);
  CHECK(count[6] == 112);
}

TEST_CASE("JSON round trips") {
  Graph g = Graph::biclaw(3, 2);
  CHECK(read_graph_json(graph_to_json(g).dump()) == g);
  CHECK_THROWS_AS(read_graph_json("{\"n\": 2, \"edges\": [[1, 3]]}"), error);
  CHECK_THROWS_AS(read_graph_json("{\"n\": 2, \"edges\": [[1, 1]]}"), error);
  CHECK_THROWS_AS(read_graph_json("not json"), parse_error);

  std::mt19937_64 rng(79);
  for (int it = 0; it < 20; ++it) {
    Graph h = random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.4);
    CHECK(read_graph_json(graph_to_json(h).dump()) == h);
  }

  auto r = reduced_pipeline(g);
  auto j = series_to_json(r);
  CHECK(j["d"] == 10);
  CHECK(j["Q"].size() == 6);
}
