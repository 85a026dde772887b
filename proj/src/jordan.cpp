#include "wildauto/jordan.hpp"

#include "wildauto/error.hpp"

namespace wildauto {

JordanProfile unipotent_jordan_profile(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("jordan profile: square matrix required");
  const std::size_t n = m.rows();
  IntMatrix nil = m - IntMatrix::identity(n);

  // Rank sequence r_0 = n, r_k = rank(N^k); stabilizes at 0 iff N nilpotent.
  std::vector<std::size_t> ranks{n};
  IntMatrix power = IntMatrix::identity(n);
  std::size_t index = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * nil;
    ranks.push_back(power.rank());
    if (ranks.back() == 0) {
      index = k;
      break;
    }
  }
  if (n > 0 && index == 0)
    throw NotUnipotentError("matrix is not unipotent: (M - I)^n != 0");

  JordanProfile profile;
  profile.largest = index;
  // blocks of size >= k: ranks[k-1] - ranks[k]
  for (std::size_t k = index; k >= 1; --k) {
    std::size_t at_least_k = ranks[k - 1] - ranks[k];
    std::size_t at_least_k1 = k < index ? ranks[k] - ranks[k + 1] : 0;
    std::size_t exactly_k = at_least_k - (k == index ? 0 : at_least_k1);
    for (std::size_t c = 0; c < exactly_k; ++c) profile.block_sizes.push_back(k);
  }
  return profile;
}

}  // namespace wildauto
