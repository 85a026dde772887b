#pragma once

#include "wildauto/int_matrix.hpp"
#include "wildauto/int_poly.hpp"

namespace wildauto {

/// Characteristic polynomial det(xI - M), monic with exact integer
/// coefficients. The 0x0 matrix has characteristic polynomial 1.
IntPoly charpoly(const IntMatrix& m);

}  // namespace wildauto
