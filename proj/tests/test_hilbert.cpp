#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bei/hilbert.hpp"
#include "bei/primes.hpp"

using namespace bei;

namespace {

VarSet vs(std::initializer_list<int> vars) {
  VarSet s;
  for (int v : vars) s.add(v);
  return s;
}

}  // namespace

TEST_CASE("numerator base cases") {
  CHECK(numerator(MonomialIdeal::zero(2)) ==
        HilbertSeries{IntPoly::one(), 2});
  // principal <x1 y2> in 4 variables: (1 - t^2)/(1-t)^4
  CHECK(numerator(MonomialIdeal(4, {vs({0, 3})})) ==
        HilbertSeries{IntPoly({1, 0, -1}), 4});
}

TEST_CASE("K_3 numerator reduces to the closed form") {
  auto r = reduce(numerator(initial_ideal(Graph::complete(3))));
  CHECK(r.q == IntPoly({1, 2}));
  CHECK(r.d == 4);
}

TEST_CASE("complete graph closed form") {
  for (int n = 1; n <= 7; ++n) {
    auto r = reduced_pipeline(Graph::complete(n));
    CHECK(r.d == n + 1);
    if (n == 1) {
      CHECK(r.q == IntPoly::one());
    } else {
      CHECK(r.q == IntPoly({1, n - 1}));
    }
    CHECK(multiplicity(r) == n);
  }
}

TEST_CASE("reduce") {
  // (1-t)^2 / (1-t)^4
  auto r = reduce(HilbertSeries{IntPoly({1, -2, 1}), 4});
  CHECK(r.q == IntPoly::one());
  CHECK(r.d == 2);
  CHECK_THROWS_AS(reduce(HilbertSeries{IntPoly::zero(), 3}),
                  zero_quotient_error);
  // idempotent: reducing an already reduced series changes nothing
  auto again = reduce(HilbertSeries{r.q, r.d});
  CHECK(again == r);
  CHECK(r.q.value_at_one() != 0);
}

TEST_CASE("coefficients of the biclaw numerator") {
  IntPoly q({1, 4, 4, -4, -5, 4});
  ReducedSeries r{q, 10};
  CHECK(coefficient(r, 0) == 4);
  CHECK(coefficient(r, 1) == 0);
  CHECK(multiplicity(r) == 4);
  CHECK(coefficient(r, 99) == 0);  // beyond deg Q
  CHECK(coefficient_in_range(r, 9));
  CHECK_FALSE(coefficient_in_range(r, 10));
}

TEST_CASE("coefficients of complete forms") {
  for (int n = 2; n <= 6; ++n) {
    ReducedSeries r{IntPoly({1, n - 1}), n + 1};
    CHECK(coefficient(r, 0) == n);
    CHECK(coefficient(r, 1) == n - 1);
    for (int i = 2; i <= n; ++i) CHECK(coefficient(r, i) == 0);
  }
}

TEST_CASE("path on three vertices is a complete intersection") {
  auto r = reduced_pipeline(Graph::path(3));
  CHECK(r.q == IntPoly({1, 2, 1}));
  CHECK(r.d == 4);
  CHECK(multiplicity(r) == 4);
}

TEST_CASE("hilbert polynomial of K_2 is (j+1)^2") {
  auto r = reduced_pipeline(Graph::complete(2));
  auto hp = hilbert_polynomial(r);
  REQUIRE(hp.d == 3);
  CHECK(hp.e == std::vector<Int>{2, 1, 0});
  for (int j = 0; j <= 6; ++j)
    CHECK(hp(j) == Int(j + 1) * Int(j + 1));
}

TEST_CASE("constant hilbert polynomial in dimension 1") {
  ReducedSeries r{IntPoly({3}), 1};
  auto hp = hilbert_polynomial(r);
  CHECK(hp(0) == 3);
  CHECK(hp(17) == 3);
}

TEST_CASE("hf_expand") {
  auto k2 = reduced_pipeline(Graph::complete(2));
  CHECK(hf_expand(k2, 0) == 1);
  CHECK(hf_expand(k2, 2) == 9);
  for (int n = 1; n <= 4; ++n)
    CHECK(hf_expand(reduced_pipeline(Graph::edgeless(n)), 1) == 2 * n);
  // d = 0: the series is the polynomial itself
  CHECK(hf_expand(ReducedSeries{IntPoly({1, 5}), 0}, 1) == 5);
  CHECK(hf_expand(ReducedSeries{IntPoly({1, 5}), 0}, 2) == 0);
}

TEST_CASE("HP eventually equals HF") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 15; ++it) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() % 2) es.emplace_back(u, v);
    Graph g(n, es);
    auto r = reduced_pipeline(g);
    auto hp = hilbert_polynomial(r);
    int start = std::max(r.q.degree() - r.d + 1, 0);
    for (int j = start; j < start + 5; ++j)
      CHECK(hp(j) == hf_expand(r, j));
  }
}

TEST_CASE("series algebra") {
  HilbertSeries k2{IntPoly({1, 1}), 3};
  CHECK(scale_pow(k2, 0) == k2);
  CHECK(scale_pow(k2, -2).denom_exp == 5);
  CHECK(scale_pow(k2, 3).denom_exp == 0);
  CHECK(series_equal(scale_pow(scale_pow(k2, 3), -3), k2));

  // clique-sum composition: (1-t)^2 * K_2 * K_2 agrees with the P_3 pipeline
  auto cs = scale_pow(multiply(k2, k2), 2);
  CHECK(series_equal(cs, pipeline(Graph::path(3))));

  // join of two single vertices composes to the K_2 closed form
  HilbertSeries k1{IntPoly::one(), 2};
  HilbertSeries corner3{IntPoly({1, 1}), 3};
  HilbertSeries corner1{IntPoly::one(), 2};
  auto sum = add({k1, k1, corner3, HilbertSeries{-corner1.num, 2},
                  HilbertSeries{-corner1.num, 2}});
  CHECK(series_equal(sum, k2));
}

TEST_CASE("multiplicity is positive on random quotients") {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 20; ++it) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() % 2) es.emplace_back(u, v);
    auto r = reduced_pipeline(Graph(n, es));
    CHECK(coefficient(r, 0) == multiplicity(r));
    CHECK(multiplicity(r) >= 1);
  }
}

TEST_CASE("pipeline dimension matches the cut-set dimension") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 20; ++it) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() % 2) es.emplace_back(u, v);
    Graph g(n, es);
    CHECK(dimension(reduced_pipeline(g)) == dimension_via_cutsets(g));
  }
}
