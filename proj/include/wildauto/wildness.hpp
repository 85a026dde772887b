#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "wildauto/abelian_model.hpp"
#include "wildauto/int_poly.hpp"

namespace wildauto {

/// sigma = T_b . alpha with alpha an automorphism (every block in GL(Z))
/// and b a point of X.
struct Automorphism {
  BlockEndomorphism alpha;
  Point b;
};

/// Throws DomainError unless every alpha block has determinant +-1.
void check_automorphism(const VarietyModel& model, const Automorphism& sigma);

/// beta = alpha - Id.
BlockEndomorphism beta_of(const VarietyModel& model, const Automorphism& sigma);

enum class WildRoute { Quotient, SetGeneration };

/// Certificate that alpha fails unipotency on one block: the cofactor of
/// the block's charpoly after all x-1 factors are removed (nontrivial iff
/// the block is not unipotent).
struct NonUnipotentFactor {
  std::size_t block_index = 0;
  IntPoly factor;
};

using WildnessCertificate = std::variant<NonUnipotentFactor, GenerationCertificate>;

struct WildnessVerdict {
  bool wild = false;
  bool alpha_unipotent = false;
  WildRoute route = WildRoute::Quotient;
  /// Present iff not wild.
  std::optional<WildnessCertificate> certificate;
};

/// Wildness of sigma by one of the two equivalent criteria:
///  - Quotient: alpha unipotent and the image of b generates X / beta(X);
///  - SetGeneration: alpha unipotent and {b, beta(b), beta^2(b), ...}
///    generates X (the orbit is finite, beta being nilpotent).
WildnessVerdict is_wild(const VarietyModel& model, const Automorphism& sigma, WildRoute route);

/// Both routes, compared; ConsistencyError on disagreement. Returns the
/// Quotient-route verdict.
WildnessVerdict is_wild_checked(const VarietyModel& model, const Automorphism& sigma);

/// The finite set {b, beta(b), ..., beta^k(b)} up to the first zero
/// iterate (capped at dim X).
std::vector<Point> beta_orbit(const VarietyModel& model, const Automorphism& sigma);

/// sigma^n = T_{b'} . alpha^n with b' = (sum_{i<n} alpha^i)(b). n >= 1.
Automorphism sigma_power(const VarietyModel& model, const Automorphism& sigma, unsigned long n);

/// true iff X admits a unipotent automorphism != Id: exactly when some
/// block has multiplicity >= 2.
bool nonidentity_unipotent_exists(const VarietyModel& model);

/// Re-check a not-wild certificate by direct evaluation.
bool verify_wildness_certificate(const VarietyModel& model, const Automorphism& sigma,
                                 const WildnessVerdict& verdict);

}  // namespace wildauto
