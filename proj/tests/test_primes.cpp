#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bei/hilbert.hpp"
#include "bei/primes.hpp"

using namespace bei;

TEST_CASE("prime component heights") {
  CHECK(prime_component(Graph::complete(5), VertexSet()).height == 4);

  auto p = prime_component(Graph::path(3), VertexSet::single(2));
  CHECK(p.components.size() == 2);
  CHECK(p.height == 2);

  for (int t = 2; t <= 5; ++t) {
    auto center = prime_component(Graph::star(t), VertexSet::single(t + 1));
    CHECK(center.height == 2);
  }
}

TEST_CASE("cut point property") {
  CHECK(cut_sets(Graph::complete(4)) == std::vector<VertexSet>{VertexSet()});

  auto p3 = cut_sets(Graph::path(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0] == VertexSet());
  CHECK(p3[1] == VertexSet::single(2));

  // biclaw: empty set and each hub always; both hubs only when each hub
  // keeps at least two leaves (removing the second hub must still grow
  // the component count)
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 3; ++t) {
      auto sets = cut_sets(Graph::biclaw(s, t));
      VertexSet u = VertexSet::single(1), v = VertexSet::single(2);
      std::vector<VertexSet> expect{VertexSet(), u, v};
      if (s >= 2 && t >= 2) expect.push_back(u | v);
      CHECK(sets == expect);
    }
}

TEST_CASE("singletons with the property are exactly cut vertices") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 20; ++it) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() % 2) es.emplace_back(u, v);
    Graph g(n, es);
    auto sets = cut_sets(g);
    CHECK(std::find(sets.begin(), sets.end(), VertexSet()) != sets.end());
    int base = static_cast<int>(connected_components(g).size());
    for (int v = 1; v <= n; ++v) {
      bool is_cut = component_count_without(g, VertexSet::single(v)) > base;
      bool in_sets = std::find(sets.begin(), sets.end(),
                               VertexSet::single(v)) != sets.end();
      CHECK(is_cut == in_sets);
    }
  }
}

TEST_CASE("minimal primes") {
  auto kn = minimal_primes(Graph::complete(4));
  REQUIRE(kn.size() == 1);
  CHECK(kn[0].height == 3);

  auto p3 = minimal_primes(Graph::path(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].height == 2);
  CHECK(p3[1].height == 2);

  // both hubs of the biclaw: five isolated vertices remain
  auto b = minimal_primes(Graph::biclaw(3, 2));
  bool found = false;
  for (const auto& p : b)
    if (p.t == (VertexSet::single(1) | VertexSet::single(2))) {
      found = true;
      CHECK(p.components.size() == 5);
      CHECK(p.height == 4);
    }
  CHECK(found);
}

TEST_CASE("dimension via cut sets") {
  for (int n = 2; n <= 6; ++n)
    CHECK(dimension_via_cutsets(Graph::complete(n)) == n + 1);
  CHECK(dimension_via_cutsets(Graph::biclaw(3, 2)) == 10);
  CHECK(dimension_via_cutsets(Graph::star(3)) == 6);
}

TEST_CASE("minimum height over cut sets complements the dimension") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 20; ++it) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() % 2) es.emplace_back(u, v);
    Graph g(n, es);
    int min_height = 2 * n;
    for (const auto& p : minimal_primes(g))
      min_height = std::min(min_height, p.height);
    CHECK(min_height == 2 * n - dimension_via_cutsets(g));
  }
}
