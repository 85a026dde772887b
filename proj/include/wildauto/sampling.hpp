#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "wildauto/abelian_model.hpp"
#include "wildauto/int_matrix.hpp"
#include "wildauto/wildness.hpp"

namespace wildauto {

/// One deterministic stream per (seed, stream tag, trial index), so suites
/// replay exactly and may be fanned out without changing results.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

  long uniform(long lo, long hi);  // inclusive bounds
  /// Uniform in [lo, hi] \ {0}; requires lo < 0 < hi.
  long uniform_nonzero(long lo, long hi);
  bool coin();

 private:
  std::mt19937_64 engine_;
};

/// Unimodular matrix with its inverse, built from `ops` random elementary
/// row operations (transvections, swaps, sign flips).
std::pair<IntMatrix, IntMatrix> random_unimodular(TrialRng& rng, std::size_t n, std::size_t ops);

/// Element of GL_2(Z) as a product of at most max_factors elementary
/// matrices with small transvection coefficients.
IntMatrix random_gl2(TrialRng& rng, std::size_t max_factors);

/// Unimodular-conjugated upper unitriangular matrix (always unipotent).
IntMatrix random_unipotent(TrialRng& rng, std::size_t n);

/// Model with 1..3 blocks, multiplicities <= 4, mixed torsion chains.
VarietyModel random_model(TrialRng& rng);

Point random_point(TrialRng& rng, const VarietyModel& model);
Point random_torsion_point(TrialRng& rng, const VarietyModel& model);

/// sigma = T_b . alpha with alpha blockwise unipotent (or identity).
Automorphism random_unipotent_automorphism(TrialRng& rng, const VarietyModel& model);

}  // namespace wildauto
