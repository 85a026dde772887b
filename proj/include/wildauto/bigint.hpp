#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace wildauto {

// All matrix/polynomial/coordinate arithmetic in this project runs on
// arbitrary-precision integers or rationals. Fixed-width words are used
// only for structural counts (dimensions, multiplicities, block sizes).
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

// Strict decimal parse: optional leading '-', then digits only.
std::optional<Int> parse_decimal(const std::string& s);

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);

}  // namespace wildauto
