#pragma once

#include <optional>
#include <string>

#include "wildauto/abelian_model.hpp"
#include "wildauto/int_matrix.hpp"
#include "wildauto/wildness.hpp"

namespace wildauto {

/// Induced action of sigma on Num(X).
///
/// Translations act trivially on Num(X) for every X; for X = E x E (one
/// CM-free elliptic factor, multiplicity 2) the action of alpha_M is the
/// explicit 3x3 matrix in the basis {0 x E, E x 0, diagonal}. No other
/// shape has a formula here.
struct NumAction {
  enum class Kind { IdentityOnNum, ExplicitMatrix, Unavailable };
  Kind kind = Kind::Unavailable;
  IntMatrix matrix;        // meaningful iff kind == ExplicitMatrix (3x3)
  std::string reason;      // meaningful iff kind == Unavailable

  static NumAction identity_on_num();
  static NumAction explicit_matrix(IntMatrix p);
  static NumAction unavailable(std::string why);
};

/// P-matrix of alpha_M on Num(E x E) in the basis {C1 = 0 x E,
/// C2 = E x 0, C3 = diagonal}:
///   [ a^2-ab   c^2-cd   (a+c)^2-(a+c)(b+d) ]
///   [ b^2-ab   d^2-cd   (b+d)^2-(a+c)(b+d) ]
///   [   ab       cd         (a+c)(b+d)     ]
/// Requires M in GL_2(Z) unless allow_isogeny is set (scalar-law testing
/// accepts n*Id with |n| >= 2, an isogeny rather than an automorphism).
IntMatrix p_matrix(const IntMatrix& m, bool allow_isogeny = false);

/// Num action of sigma = T_b . alpha on the modeled X.
NumAction p_sigma(const VarietyModel& model, const Automorphism& sigma);

/// GK-dimension of the twisted ring B(X, L, sigma) for sigma-ample L,
/// bounded by j + dim X + 1 <= GKdim <= j(dim X - 1) + dim X + 1 where
/// j + 1 is the largest Jordan block of P_sigma. All fields absent when the
/// Num action has no formula here (unavailable_reason set instead).
struct GkResult {
  std::optional<long> exact;
  std::optional<long> lower;
  std::optional<long> upper;
  std::optional<long> j;
  std::optional<std::string> unavailable_reason;

  bool available() const { return !unavailable_reason.has_value(); }
};

/// Throws NotQuasiUnipotentError when P_sigma exists but is not
/// quasi-unipotent (no sigma-ample invertible sheaf exists, so GKdim of B
/// is not defined by the ampleness route).
GkResult gk_dimension(const VarietyModel& model, const Automorphism& sigma);

enum class AmplenessVerdict { AllAmpleAreSigmaAmple, NoSigmaAmpleExists, Unknown };

/// Keeler-criterion verdict from the Num action alone: quasi-unipotent
/// (or identity) means every ample sheaf is sigma-ample; an explicit
/// non-quasi-unipotent action means none exists.
AmplenessVerdict ampleness_verdict(const NumAction& action);

std::string to_string(AmplenessVerdict v);

}  // namespace wildauto
