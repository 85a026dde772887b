#include "wildauto/normal_forms.hpp"

#include <cstdlib>
#include <optional>

namespace wildauto {

namespace {

// Smallest-|value| nonzero entry of the trailing submatrix starting at
// (t, t); ties broken row-major. nullopt when the submatrix is zero.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      Int ab = abs(a.at(i, j));
      if (!best || ab < best_abs) {
        best = {{i, j}};
        best_abs = ab;
      }
    }
  }
  return best;
}

}  // namespace

SmithDecomposition snf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithDecomposition out;
  out.U = IntMatrix::identity(rows);
  out.V = IntMatrix::identity(cols);
  out.D = m;
  IntMatrix& a = out.D;

  const std::size_t steps = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    auto pivot = find_pivot(a, t);
    if (!pivot) break;

    for (;;) {
      a.swap_rows(t, pivot->first);
      out.U.swap_rows(t, pivot->first);
      a.swap_cols(t, pivot->second);
      out.V.swap_cols(t, pivot->second);

      // Rows first: reduce the pivot column modulo the pivot.
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
        if (q != 0) {
          a.add_row_multiple(i, t, -q);
          out.U.add_row_multiple(i, t, -q);
        }
        if (a.at(i, t) != 0) dirty = true;
      }
      if (dirty) {
        pivot = find_pivot(a, t);
        continue;
      }
      // Then columns.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
        if (q != 0) {
          a.add_col_multiple(j, t, -q);
          out.V.add_col_multiple(j, t, -q);
        }
        if (a.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        pivot = find_pivot(a, t);
        continue;
      }
      // Pivot row and column are clear. Fold in any submatrix entry the
      // pivot does not divide, so the divisibility chain comes out right.
      bool folded = false;
      for (std::size_t i = t + 1; i < rows && !folded; ++i) {
        for (std::size_t j = t + 1; j < cols && !folded; ++j) {
          if (a.at(i, j) % a.at(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            out.U.add_row_multiple(t, i, 1);
            folded = true;
          }
        }
      }
      if (!folded) break;
      pivot = find_pivot(a, t);
    }

    if (a.at(t, t) < 0) {
      a.negate_row(t);
      out.U.negate_row(t);
    }
  }
  out.rank = t;
  return out;
}

HermiteDecomposition row_hermite(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  HermiteDecomposition out;
  out.U = IntMatrix::identity(rows);
  out.H = m;
  IntMatrix& a = out.H;

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    // gcd-reduce the column below `row` until one nonzero entry remains.
    for (;;) {
      std::size_t best = rows;
      Int best_abs;
      for (std::size_t i = row; i < rows; ++i) {
        if (a.at(i, col) == 0) continue;
        Int ab = abs(a.at(i, col));
        if (best == rows || ab < best_abs) {
          best = i;
          best_abs = ab;
        }
      }
      if (best == rows) break;  // column clear below row
      a.swap_rows(row, best);
      out.U.swap_rows(row, best);
      bool dirty = false;
      for (std::size_t i = row + 1; i < rows; ++i) {
        if (a.at(i, col) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(row, col).get_mpz_t());
        if (q != 0) {
          a.add_row_multiple(i, row, -q);
          out.U.add_row_multiple(i, row, -q);
        }
        if (a.at(i, col) != 0) dirty = true;
      }
      if (!dirty) break;
    }
    if (a.at(row, col) == 0) continue;
    if (a.at(row, col) < 0) {
      a.negate_row(row);
      out.U.negate_row(row);
    }
    // Reduce entries above the pivot into canonical range [0, pivot).
    for (std::size_t i = 0; i < row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(row, col).get_mpz_t());
      if (q != 0) {
        a.add_row_multiple(i, row, -q);
        out.U.add_row_multiple(i, row, -q);
      }
    }
    ++row;
  }
  out.rank = row;
  return out;
}

IntMatrix left_kernel(const IntMatrix& m) {
  HermiteDecomposition h = row_hermite(m);
  const std::size_t rows = m.rows();
  const std::size_t k = rows - h.rank;
  IntMatrix basis(k, rows);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < rows; ++j) basis.at(i, j) = h.U.at(h.rank + i, j);
  return basis;
}

}  // namespace wildauto
