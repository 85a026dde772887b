#pragma once

#include <vector>

#include "wildauto/int_matrix.hpp"
#include "wildauto/int_poly.hpp"

namespace wildauto {

/// Nonconstant invariant factors f_1 | f_2 | ... | f_k of M over the
/// rationals (the diagonal of the Smith form of xI - M over Q[x]), each
/// monic with integer coefficients, in divisibility order. Their product is
/// charpoly(M); two square matrices are conjugate over Q iff their chains
/// are equal.
std::vector<IntPoly> frobenius_invariants(const IntMatrix& m);

}  // namespace wildauto
