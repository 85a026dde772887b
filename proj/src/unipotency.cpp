#include "wildauto/unipotency.hpp"

#include <map>

#include "wildauto/charpoly.hpp"
#include "wildauto/error.hpp"
#include "wildauto/frobenius.hpp"
#include "wildauto/jordan.hpp"

namespace wildauto {

namespace {
constexpr unsigned long kConductorCap = 1000;
}

unsigned long euler_phi(unsigned long d) {
  if (d == 0) throw DomainError("euler_phi(0) is undefined");
  if (d > kConductorCap) throw DomainError("euler_phi: argument beyond the 1000 cap");
  unsigned long result = d;
  unsigned long rest = d;
  for (unsigned long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    result -= result / p;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

IntPoly cyclotomic(unsigned long d) {
  if (d == 0) throw DomainError("cyclotomic(0) is undefined");
  if (d > kConductorCap) throw DomainError("cyclotomic: index beyond the 1000 cap");
  // Phi_e for every divisor e of d, in ascending order; each step divides
  // x^e - 1 by the product of the earlier ones.
  std::map<unsigned long, IntPoly> phi;
  for (unsigned long e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    IntPoly quotient = IntPoly::x_pow_minus_one(e);
    for (const auto& [f, poly] : phi) {
      if (e % f != 0) continue;
      auto q = quotient.try_divide_monic(poly);
      if (!q) throw ConsistencyError("cyclotomic division was not exact");
      quotient = std::move(*q);
    }
    phi.emplace(e, std::move(quotient));
  }
  return phi.at(d);
}

std::vector<unsigned long> cyclotomic_conductors(std::size_t n) {
  // phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2 n^2.
  const unsigned long limit = 2 * static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
  if (limit > kConductorCap)
    throw DomainError("cyclotomic conductor enumeration beyond the 1000 cap");
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d <= std::max(limit, 1UL); ++d)
    if (euler_phi(d) <= n) out.push_back(d);
  return out;
}

bool is_unipotent(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("is_unipotent: square matrix required");
  const std::size_t n = m.rows();
  IntMatrix nil = m - IntMatrix::identity(n);
  return nil.pow(static_cast<unsigned long>(n)).is_zero();
}

QuasiUnipotencyVerdict quasi_unipotency(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("quasi_unipotency: square matrix required");
  const std::size_t n = m.rows();
  QuasiUnipotencyVerdict verdict;

  IntPoly remaining = charpoly(m);
  unsigned long order = 1;
  for (unsigned long d : cyclotomic_conductors(n)) {
    if (euler_phi(d) > static_cast<unsigned long>(remaining.degree())) continue;
    IntPoly phi_d = cyclotomic(d);
    std::size_t mult = 0;
    while (true) {
      auto q = remaining.try_divide_monic(phi_d);
      if (!q) break;
      remaining = std::move(*q);
      ++mult;
    }
    if (mult > 0) {
      verdict.cyclotomic_factors.emplace_back(d, mult);
      order = static_cast<unsigned long>(int_lcm(Int(order), Int(d)).get_ui());
    }
  }

  if (remaining.is_one()) {
    bool all_one = true;
    for (const auto& [d, mult] : verdict.cyclotomic_factors)
      if (d != 1) all_one = false;
    verdict.status = all_one ? QuasiUnipotencyVerdict::Status::Unipotent
                             : QuasiUnipotencyVerdict::Status::QuasiUnipotent;
    verdict.order = order;
  } else {
    verdict.status = QuasiUnipotencyVerdict::Status::No;
    verdict.order = 0;
    verdict.witness = std::move(remaining);
  }
  return verdict;
}

std::optional<std::pair<unsigned long, unsigned long>> power_conjugacy_witness(
    const IntMatrix& m, unsigned long bound) {
  if (!m.is_square()) throw DimensionError("power_conjugacy_witness: square matrix required");
  if (m.det() == 0) throw DomainError("power_conjugacy_witness: matrix must be invertible");

  std::vector<std::vector<IntPoly>> chains;
  chains.reserve(bound);
  IntMatrix power = IntMatrix::identity(m.rows());
  for (unsigned long p = 1; p <= bound; ++p) {
    power = power * m;
    chains.push_back(frobenius_invariants(power));
  }
  for (unsigned long p = 1; p < bound; ++p)
    for (unsigned long q = p + 1; q <= bound; ++q)
      if (chains[p - 1] == chains[q - 1]) return std::make_pair(p, q);
  return std::nullopt;
}

std::size_t largest_jordan_block_quasi(const IntMatrix& m) {
  QuasiUnipotencyVerdict verdict = quasi_unipotency(m);
  if (!verdict.quasi_unipotent())
    throw NotQuasiUnipotentError("largest_jordan_block_quasi: matrix is not quasi-unipotent");
  // Powering by the quasi-unipotent order maps every eigenvalue to 1 and
  // preserves Jordan block sizes (all eigenvalues are nonzero).
  return unipotent_jordan_profile(m.pow(verdict.order)).largest;
}

}  // namespace wildauto
