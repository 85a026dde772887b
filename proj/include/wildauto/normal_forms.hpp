#pragma once

#include <cstddef>

#include "wildauto/int_matrix.hpp"

namespace wildauto {

/// Smith normal form D = U * M * V with unimodular U, V and a diagonal D
/// whose nonzero entries are positive and form a divisibility chain
/// d1 | d2 | ... U and V are not canonical; D and rank are.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
};

/// Deterministic SNF: pivot = smallest absolute value among nonzero entries
/// of the trailing submatrix (row-major tie break), rows eliminated before
/// columns.
SmithDecomposition snf(const IntMatrix& m);

/// Basis of the left-kernel lattice {theta : theta * M = 0}, one basis
/// vector per row; (rows(M) - rank(M)) x rows(M). The basis is primitive:
/// it extends to a basis of Z^rows.
IntMatrix left_kernel(const IntMatrix& m);

/// Row-style Hermite reduction U * M = H with unimodular U; H has the
/// rank(M) nonzero rows first, in column-echelon order, and zero rows last.
struct HermiteDecomposition {
  IntMatrix U;
  IntMatrix H;
  std::size_t rank = 0;
};

HermiteDecomposition row_hermite(const IntMatrix& m);

}  // namespace wildauto
