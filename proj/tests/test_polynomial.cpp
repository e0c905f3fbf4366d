#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bei/polynomial.hpp"

using bei::Int;
using bei::IntPoly;

TEST_CASE("arithmetic and normalization") {
  IntPoly a({1, 2, 3});
  IntPoly b({0, -2, -3});
  CHECK(a + b == IntPoly({1}));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(a * IntPoly::zero() == IntPoly::zero());
  CHECK(IntPoly({1, 1}) * IntPoly({1, -1}) == IntPoly({1, 0, -1}));
  CHECK(IntPoly({0, 0, 0}).is_zero());
}

TEST_CASE("evaluation") {
  IntPoly p({1, 4, 4, -4, -5, 4});
  CHECK(p.value_at_one() == 4);
  CHECK(p.eval(0) == 1);
  CHECK(p.eval(2) == 1 + 8 + 16 - 32 - 80 + 128);
}

TEST_CASE("division by 1-t") {
  IntPoly p = IntPoly({1, -2, 1});  // (1-t)^2
  REQUIRE(p.divide_one_minus_t());
  CHECK(p == IntPoly({1, -1}));
  REQUIRE(p.divide_one_minus_t());
  CHECK(p == IntPoly::one());
  CHECK_FALSE(p.divide_one_minus_t());
  CHECK(p == IntPoly::one());  // untouched on failure

  IntPoly q({0, 1, 1});  // t + t^2 = t(1+t), not divisible
  CHECK_FALSE(q.divide_one_minus_t());
}

TEST_CASE("one_minus_t_pow") {
  CHECK(IntPoly::one_minus_t_pow(0) == IntPoly::one());
  CHECK(IntPoly::one_minus_t_pow(3) == IntPoly({1, -3, 3, -1}));
}

TEST_CASE("random multiply-then-divide round trip") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 50; ++it) {
    std::vector<Int> cs(1 + rng() % 6);
    for (auto& c : cs) c = static_cast<long long>(rng() % 21) - 10;
    IntPoly p(cs);
    IntPoly shifted = p * IntPoly({1, -1});
    REQUIRE(shifted.divide_one_minus_t());
    CHECK(shifted == p);
  }
}

TEST_CASE("printing") {
  CHECK(IntPoly({1, 3}).str() == "1+3t");
  CHECK(IntPoly({1, 4, 4, -4, -5, 4}).str() == "1+4t+4t^2-4t^3-5t^4+4t^5");
  CHECK(IntPoly({0, -1}).str() == "-t");
  CHECK(IntPoly::zero().str() == "0");
}
