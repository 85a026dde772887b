#include <doctest.h>

#include "wildauto/error.hpp"
#include "wildauto/int_poly.hpp"

using namespace wildauto;

TEST_CASE("polynomial arithmetic and normalization") {
  IntPoly p({1, 2, 1});  // (x+1)^2
  IntPoly q({1, 1});
  CHECK(q * q == p);
  CHECK(p - p == IntPoly::zero());
  CHECK(IntPoly({0, 0, 0}).is_zero());
  CHECK(p.degree() == 2);
  CHECK(IntPoly::zero().degree() == -1);
  CHECK(q.pow(2) == p);
  CHECK(q.pow(0) == IntPoly::one());
}

TEST_CASE("monic division is exact") {
  IntPoly num({-1, 0, 0, 0, 1});  // x^4 - 1
  IntPoly div({1, 0, 1});         // x^2 + 1
  auto [quot, rem] = num.divmod_monic(div);
  CHECK(rem.is_zero());
  CHECK(quot == IntPoly({-1, 0, 1}));
  CHECK(num.try_divide_monic(IntPoly({1, 1})).has_value());
  CHECK_FALSE(num.try_divide_monic(IntPoly({2, 1})).has_value());
  CHECK_THROWS_AS(num.divmod_monic(IntPoly({1, 2})), DomainError);
}

TEST_CASE("evaluation and printing") {
  IntPoly p({1, -3, 1});  // x^2 - 3x + 1
  CHECK(p.eval(Int(0)) == 1);
  CHECK(p.eval(Int(3)) == 1);
  CHECK(p.to_string() == "x^2 - 3x + 1");
  CHECK(IntPoly({-1, 1}).to_string() == "x - 1");
  CHECK(IntPoly::zero().to_string() == "0");
  CHECK(IntPoly({0, 0, 5}).to_string() == "5x^2");
}

TEST_CASE("rational polynomial euclidean division") {
  RatPoly a = RatPoly::from_int_poly(IntPoly({2, 3, 1}));  // x^2+3x+2
  RatPoly b = RatPoly::from_int_poly(IntPoly({4, 2}));     // 2x+4
  auto [q, r] = a.divmod(b);
  CHECK(r.is_zero());
  CHECK(q * b == a);
  CHECK(a.monic().leading() == Rat(1));
  CHECK(a.monic().to_int_poly_monic() == IntPoly({2, 3, 1}));
}
