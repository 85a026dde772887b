#include <doctest.h>

#include "test_helpers.hpp"
#include "wildauto/error.hpp"
#include "wildauto/int_matrix.hpp"
#include "wildauto/sampling.hpp"

using namespace wildauto;

TEST_CASE("matrix arithmetic basics") {
  IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  IntMatrix b = IntMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == IntMatrix::from_rows({{2, 1}, {4, 3}}));
  CHECK(a + b == IntMatrix::from_rows({{1, 3}, {4, 4}}));
  CHECK(a - a == IntMatrix::zero(2, 2));
  CHECK((-a) == IntMatrix::from_rows({{-1, -2}, {-3, -4}}));
  CHECK(a.transpose() == IntMatrix::from_rows({{1, 3}, {2, 4}}));
  CHECK(a.pow(0).is_identity());
  CHECK(a.pow(3) == a * a * a);
}

TEST_CASE("shape errors") {
  IntMatrix a(2, 3);
  IntMatrix b(2, 2);
  CHECK_THROWS_AS(a * a, DimensionError);
  CHECK_THROWS_AS(a + b, DimensionError);
  CHECK_THROWS_AS(a.det(), DimensionError);
  CHECK_THROWS_AS(a.pow(2), DimensionError);
}

TEST_CASE("determinant exactness") {
  CHECK(IntMatrix().det() == 1);  // empty product convention
  CHECK(IntMatrix::identity(4).det() == 1);
  CHECK(IntMatrix::from_rows({{0, -1}, {1, 0}}).det() == 1);
  CHECK(IntMatrix::from_rows({{2, 1}, {1, 1}}).det() == 1);
  CHECK(IntMatrix::from_rows({{1, 2}, {2, 4}}).det() == 0);
  CHECK(IntMatrix::from_rows({{3, 0, 0}, {0, 5, 0}, {0, 0, -7}}).det() == -105);

  // Determinant is multiplicative on random pairs.
  for (std::uint64_t t = 0; t < 50; ++t) {
    TrialRng rng(7, 100, t);
    IntMatrix m(3, 3), n(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        m.at(i, j) = rng.uniform(-9, 9);
        n.at(i, j) = rng.uniform(-9, 9);
      }
    CHECK((m * n).det() == m.det() * n.det());
  }
}

TEST_CASE("rank of rectangular matrices") {
  CHECK(IntMatrix::zero(3, 2).rank() == 0);
  CHECK(IntMatrix::identity(3).rank() == 3);
  CHECK(IntMatrix::from_rows({{1, 2}, {2, 4}}).rank() == 1);
  CHECK(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}}).rank() == 2);
  CHECK(IntMatrix::from_rows({{0, 1}, {0, 0}}).rank() == 1);
}

TEST_CASE("random unimodular matrices come with exact inverses") {
  for (std::uint64_t t = 0; t < 30; ++t) {
    TrialRng rng(11, 101, t);
    auto [u, u_inv] = random_unimodular(rng, 4, 10);
    CHECK((u * u_inv).is_identity());
    Int d = u.det();
    CHECK((d == 1 || d == -1));
  }
}
