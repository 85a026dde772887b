#include <doctest.h>

#include "test_helpers.hpp"
#include "wildauto/normal_forms.hpp"
#include "wildauto/sampling.hpp"

using namespace wildauto;

namespace {

void check_snf_contract(const IntMatrix& m) {
  SmithDecomposition s = snf(m);
  CHECK(s.U * m * s.V == s.D);
  Int du = s.U.det();
  Int dv = s.V.det();
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  // Diagonal with nonnegative entries and a divisibility chain.
  std::size_t nonzero = 0;
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) CHECK(s.D.at(i, j) == 0);
  for (std::size_t i = 0; i < steps; ++i) {
    CHECK(s.D.at(i, i) >= 0);
    if (s.D.at(i, i) != 0) ++nonzero;
    if (i > 0 && s.D.at(i - 1, i - 1) != 0 && s.D.at(i, i) != 0)
      CHECK(s.D.at(i, i) % s.D.at(i - 1, i - 1) == 0);
    if (i > 0 && s.D.at(i - 1, i - 1) == 0) CHECK(s.D.at(i, i) == 0);
  }
  CHECK(s.rank == nonzero);
  CHECK(s.rank == m.rank());
}

}  // namespace

TEST_CASE("snf pinned examples") {
  SmithDecomposition s = snf(IntMatrix::from_rows({{0, 1}, {0, 0}}));
  CHECK(s.D == IntMatrix::diagonal({Int(1), Int(0)}));
  CHECK(s.rank == 1);

  SmithDecomposition z = snf(IntMatrix::zero(2, 3));
  CHECK(z.D == IntMatrix::zero(2, 3));
  CHECK(z.rank == 0);

  SmithDecomposition d = snf(IntMatrix::diagonal({Int(2), Int(6)}));
  CHECK(d.D == IntMatrix::diagonal({Int(2), Int(6)}));
  CHECK(d.rank == 2);

  SmithDecomposition e = snf(IntMatrix());
  CHECK(e.rank == 0);
}

TEST_CASE("snf round-trip on random matrices") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    TrialRng rng(3, 200, t);
    std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 6));
    std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 6));
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.uniform(-50, 50);
    check_snf_contract(m);
  }
}

TEST_CASE("snf divisibility needs the folding step") {
  // diag(2, 3) is not in SNF; the chain is 1 | 6.
  SmithDecomposition s = snf(IntMatrix::diagonal({Int(2), Int(3)}));
  CHECK(s.D == IntMatrix::diagonal({Int(1), Int(6)}));
  check_snf_contract(IntMatrix::diagonal({Int(2), Int(3)}));
}

TEST_CASE("left kernel pinned examples") {
  IntMatrix k = left_kernel(IntMatrix::from_rows({{1}, {2}}));
  REQUIRE(k.rows() == 1);
  // Basis of {theta : theta_1 + 2 theta_2 = 0}, unique up to sign.
  bool plus = k.at(0, 0) == 2 && k.at(0, 1) == -1;
  bool minus = k.at(0, 0) == -2 && k.at(0, 1) == 1;
  CHECK((plus || minus));

  CHECK(left_kernel(IntMatrix::identity(3)).rows() == 0);

  IntMatrix z = left_kernel(IntMatrix::zero(2, 1));
  CHECK(z.rows() == 2);
  Int d = z.det();
  CHECK((d == 1 || d == -1));
}

TEST_CASE("left kernel properties on random matrices") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    TrialRng rng(5, 201, t);
    std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 6));
    std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 6));
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.uniform(-20, 20);
    IntMatrix k = left_kernel(m);
    CHECK(k.rows() == rows - m.rank());
    if (k.rows() > 0) {
      CHECK((k * m).is_zero());
      CHECK(k.rank() == k.rows());
    }
  }
}

TEST_CASE("row hermite reduction") {
  IntMatrix m = IntMatrix::from_rows({{4, 6}, {2, 2}, {6, 8}});
  HermiteDecomposition h = row_hermite(m);
  CHECK(h.U * m == h.H);
  CHECK(h.rank == 2);
  Int d3 = h.U.det();
  CHECK((d3 == 1 || d3 == -1));
  // Zero rows come last.
  for (std::size_t j = 0; j < m.cols(); ++j) CHECK(h.H.at(2, j) == 0);
}
