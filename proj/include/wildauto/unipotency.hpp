#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wildauto/int_matrix.hpp"
#include "wildauto/int_poly.hpp"

namespace wildauto {

/// Euler totient by trial factorization. Capped at d <= 1000.
unsigned long euler_phi(unsigned long d);

/// d-th cyclotomic polynomial via Phi_d = (x^d - 1) / prod_{e|d, e<d} Phi_e,
/// all divisions exact. d = 0 is a domain error; d capped at 1000.
IntPoly cyclotomic(unsigned long d);

/// All d with phi(d) <= n, ascending. These are the only admissible
/// conductors for cyclotomic factors of a degree-n characteristic
/// polynomial.
std::vector<unsigned long> cyclotomic_conductors(std::size_t n);

/// true iff (M - I)^n = 0.
bool is_unipotent(const IntMatrix& m);

struct QuasiUnipotencyVerdict {
  enum class Status { Unipotent, QuasiUnipotent, No };
  Status status = Status::No;
  /// lcm of the conductors present; the least t with M^t unipotent.
  /// Meaningful iff status != No (1 for the empty factorization).
  unsigned long order = 0;
  /// (d, multiplicity) pairs with multiplicity >= 1, ascending in d.
  std::vector<std::pair<unsigned long, std::size_t>> cyclotomic_factors;
  /// Non-cyclotomic cofactor of charpoly certifying status == No.
  std::optional<IntPoly> witness;

  bool quasi_unipotent() const { return status != Status::No; }
};

/// Cyclotomic trial-division decider: factor charpoly(M) against every
/// Phi_d with phi(d) <= n. status == No iff a non-cyclotomic factor
/// remains, returned as the witness.
QuasiUnipotencyVerdict quasi_unipotency(const IntMatrix& m);

/// Brute-force cross-check for quasi-unipotency (Frobenius-form route):
/// first pair 0 < p < q <= bound, lexicographic, with M^p and M^q conjugate
/// over the rationals. "nullopt up to bound" is inconclusive, never a
/// certified negative. M must be invertible.
std::optional<std::pair<unsigned long, unsigned long>> power_conjugacy_witness(
    const IntMatrix& m, unsigned long bound);

/// Size of the largest Jordan block (over the complex numbers, all
/// eigenvalues being roots of unity) of a quasi-unipotent M, computed as
/// the largest block of the unipotent power M^order. This is j + 1 in the
/// GK-dimension bound. Throws NotQuasiUnipotentError otherwise.
std::size_t largest_jordan_block_quasi(const IntMatrix& m);

}  // namespace wildauto
