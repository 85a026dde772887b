#pragma once

#include <cstddef>
#include <vector>

#include "wildauto/int_matrix.hpp"

namespace wildauto {

/// Jordan block structure of a unipotent matrix (all blocks belong to
/// eigenvalue 1). block_sizes is sorted descending; largest is the
/// nilpotency index of M - I.
struct JordanProfile {
  std::vector<std::size_t> block_sizes;
  std::size_t largest = 0;
};

/// Profile of a unipotent matrix from the rank sequence r_k = rank((M-I)^k):
/// the number of blocks of size >= k is r_{k-1} - r_k. Throws
/// NotUnipotentError when M - I is not nilpotent.
JordanProfile unipotent_jordan_profile(const IntMatrix& m);

}  // namespace wildauto
