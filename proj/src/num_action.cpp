#include "wildauto/num_action.hpp"

#include "wildauto/error.hpp"
#include "wildauto/unipotency.hpp"

namespace wildauto {

NumAction NumAction::identity_on_num() {
  NumAction a;
  a.kind = Kind::IdentityOnNum;
  return a;
}

NumAction NumAction::explicit_matrix(IntMatrix p) {
  NumAction a;
  a.kind = Kind::ExplicitMatrix;
  a.matrix = std::move(p);
  return a;
}

NumAction NumAction::unavailable(std::string why) {
  NumAction a;
  a.kind = Kind::Unavailable;
  a.reason = std::move(why);
  return a;
}

IntMatrix p_matrix(const IntMatrix& m, bool allow_isogeny) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionError("p_matrix: 2x2 matrix required");
  const Int& a = m.at(0, 0);
  const Int& b = m.at(0, 1);
  const Int& c = m.at(1, 0);
  const Int& d = m.at(1, 1);
  Int det = a * d - b * c;
  if (!allow_isogeny && det != 1 && det != -1)
    throw DomainError("p_matrix: automorphism required (|det M| = 1)");
  if (det == 0) throw DomainError("p_matrix: matrix must be invertible over Q");

  Int ac = a + c, bd = b + d;
  IntMatrix p(3, 3);
  p.at(0, 0) = a * a - a * b;
  p.at(0, 1) = c * c - c * d;
  p.at(0, 2) = ac * ac - ac * bd;
  p.at(1, 0) = b * b - a * b;
  p.at(1, 1) = d * d - c * d;
  p.at(1, 2) = bd * bd - ac * bd;
  p.at(2, 0) = a * b;
  p.at(2, 1) = c * d;
  p.at(2, 2) = ac * bd;
  return p;
}

NumAction p_sigma(const VarietyModel& model, const Automorphism& sigma) {
  check_automorphism(model, sigma);
  if (sigma.alpha.is_identity()) return NumAction::identity_on_num();
  // Only the single elliptic-factor square has a published formula; the
  // translation part never contributes.
  if (model.blocks.size() == 1 && model.blocks[0].multiplicity == 2 &&
      model.blocks[0].factor_dim == 1)
    return NumAction::explicit_matrix(p_matrix(sigma.alpha.blocks[0]));
  return NumAction::unavailable("Num action formula beyond scope for this model shape");
}

GkResult gk_dimension(const VarietyModel& model, const Automorphism& sigma) {
  model.validate();
  NumAction action = p_sigma(model, sigma);
  GkResult out;
  if (action.kind == NumAction::Kind::Unavailable) {
    out.unavailable_reason = action.reason;
    return out;
  }

  long j = 0;
  if (action.kind == NumAction::Kind::ExplicitMatrix) {
    QuasiUnipotencyVerdict verdict = quasi_unipotency(action.matrix);
    if (!verdict.quasi_unipotent())
      throw NotQuasiUnipotentError(
          "P_sigma is not quasi-unipotent: no sigma-ample invertible sheaf exists");
    j = static_cast<long>(largest_jordan_block_quasi(action.matrix)) - 1;
  }

  const long dim = static_cast<long>(model.dim());
  out.j = j;
  out.lower = j + dim + 1;
  out.upper = j * (dim - 1) + dim + 1;
  if (*out.lower == *out.upper) out.exact = *out.lower;

  if (j % 2 != 0) throw ConsistencyError("largest Jordan block of P_sigma gave an odd j");
  if (dim == 2 && j != 0 && j != 2)
    throw ConsistencyError("dimension-2 model gave j outside {0, 2}");
  return out;
}

AmplenessVerdict ampleness_verdict(const NumAction& action) {
  switch (action.kind) {
    case NumAction::Kind::IdentityOnNum:
      return AmplenessVerdict::AllAmpleAreSigmaAmple;
    case NumAction::Kind::ExplicitMatrix:
      return quasi_unipotency(action.matrix).quasi_unipotent()
                 ? AmplenessVerdict::AllAmpleAreSigmaAmple
                 : AmplenessVerdict::NoSigmaAmpleExists;
    case NumAction::Kind::Unavailable:
      return AmplenessVerdict::Unknown;
  }
  return AmplenessVerdict::Unknown;
}

std::string to_string(AmplenessVerdict v) {
  switch (v) {
    case AmplenessVerdict::AllAmpleAreSigmaAmple:
      return "AllAmpleAreSigmaAmple";
    case AmplenessVerdict::NoSigmaAmpleExists:
      return "NoSigmaAmpleExists";
    case AmplenessVerdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

}  // namespace wildauto
