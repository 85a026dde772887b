#include "wildauto/charpoly.hpp"

#include "wildauto/error.hpp"

namespace wildauto {

// Faddeev-LeVerrier: with B_1 = M, c_1 = -tr(B_1) and
//   B_k = M (B_{k-1} + c_{k-1} I),  c_k = -tr(B_k) / k,
// det(xI - M) = x^n + c_1 x^{n-1} + ... + c_n. Every division by k is exact
// over the integers, so the whole computation stays in Z.
IntPoly charpoly(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("charpoly: square matrix required");
  const std::size_t n = m.rows();
  std::vector<Int> coeffs(n + 1);
  coeffs[n] = 1;
  if (n == 0) return IntPoly(std::move(coeffs));

  IntMatrix b = m;
  Int c;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      for (std::size_t i = 0; i < n; ++i) b.at(i, i) += c;
      b = m * b;
    }
    Int trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += b.at(i, i);
    mpz_divexact_ui(c.get_mpz_t(), Int(-trace).get_mpz_t(), static_cast<unsigned long>(k));
    coeffs[n - k] = c;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace wildauto
