#include "wildauto/wildness.hpp"

#include "wildauto/charpoly.hpp"
#include "wildauto/error.hpp"
#include "wildauto/unipotency.hpp"

namespace wildauto {

namespace {

// Strip every x-1 factor from the block's characteristic polynomial. The
// block is unipotent iff nothing is left (charpoly = (x-1)^n).
IntPoly non_unipotent_cofactor(const IntMatrix& block) {
  IntPoly p = charpoly(block);
  const IntPoly x_minus_one({-1, 1});
  for (;;) {
    auto q = p.try_divide_monic(x_minus_one);
    if (!q) break;
    p = std::move(*q);
  }
  return p;
}

std::optional<NonUnipotentFactor> find_non_unipotent_block(const BlockEndomorphism& alpha) {
  for (std::size_t b = 0; b < alpha.blocks.size(); ++b) {
    IntPoly cofactor = non_unipotent_cofactor(alpha.blocks[b]);
    if (!cofactor.is_one()) return NonUnipotentFactor{b, std::move(cofactor)};
  }
  return std::nullopt;
}

}  // namespace

void check_automorphism(const VarietyModel& model, const Automorphism& sigma) {
  check_endo_shape(model, sigma.alpha);
  check_point_shape(model, sigma.b);
  for (const auto& block : sigma.alpha.blocks) {
    Int d = block.det();
    if (d != 1 && d != -1)
      throw DomainError("alpha is not an automorphism: a block determinant is not +-1");
  }
}

BlockEndomorphism beta_of(const VarietyModel& model, const Automorphism& sigma) {
  return sigma.alpha - BlockEndomorphism::identity(model);
}

std::vector<Point> beta_orbit(const VarietyModel& model, const Automorphism& sigma) {
  BlockEndomorphism beta = beta_of(model, sigma);
  std::vector<Point> orbit;
  Point current = sigma.b;
  for (std::size_t k = 0; k <= model.dim(); ++k) {
    if (current.is_zero()) break;
    orbit.push_back(current);
    current = apply_endo(model, beta, current);
  }
  return orbit;
}

WildnessVerdict is_wild(const VarietyModel& model, const Automorphism& sigma, WildRoute route) {
  model.validate();
  check_automorphism(model, sigma);

  WildnessVerdict verdict;
  verdict.route = route;

  auto non_unipotent = find_non_unipotent_block(sigma.alpha);
  verdict.alpha_unipotent = !non_unipotent.has_value();
  if (non_unipotent) {
    verdict.wild = false;
    verdict.certificate = std::move(*non_unipotent);
    return verdict;
  }

  GenerationResult generation;
  if (route == WildRoute::Quotient) {
    QuotientModel quotient = image_quotient(model, beta_of(model, sigma));
    generation = generates_in_quotient(quotient, sigma.b);
  } else {
    generation = generates_set(model, beta_orbit(model, sigma));
  }
  verdict.wild = generation.generates;
  if (!generation.generates) verdict.certificate = std::move(*generation.certificate);
  return verdict;
}

WildnessVerdict is_wild_checked(const VarietyModel& model, const Automorphism& sigma) {
  WildnessVerdict quotient = is_wild(model, sigma, WildRoute::Quotient);
  WildnessVerdict set_gen = is_wild(model, sigma, WildRoute::SetGeneration);
  if (quotient.wild != set_gen.wild)
    throw ConsistencyError("wildness routes disagree: quotient and set-generation criteria "
                           "returned different verdicts");
  return quotient;
}

Automorphism sigma_power(const VarietyModel& model, const Automorphism& sigma, unsigned long n) {
  if (n == 0) throw DomainError("sigma_power: exponent must be >= 1");
  check_automorphism(model, sigma);
  // gamma = sum_{i=0}^{n-1} alpha^i, evaluated blockwise by Horner steps.
  BlockEndomorphism gamma = BlockEndomorphism::identity(model);
  BlockEndomorphism power = sigma.alpha;
  for (unsigned long i = 1; i < n; ++i) {
    gamma = gamma + power;
    power = power * sigma.alpha;
  }
  return Automorphism{sigma.alpha.pow(n), apply_endo(model, gamma, sigma.b)};
}

bool nonidentity_unipotent_exists(const VarietyModel& model) {
  for (const auto& b : model.blocks)
    if (b.multiplicity >= 2) return true;
  return false;
}

bool verify_wildness_certificate(const VarietyModel& model, const Automorphism& sigma,
                                 const WildnessVerdict& verdict) {
  if (verdict.wild || !verdict.certificate) return false;
  if (const auto* nu = std::get_if<NonUnipotentFactor>(&*verdict.certificate)) {
    if (nu->block_index >= sigma.alpha.blocks.size()) return false;
    if (nu->factor.degree() < 1) return false;
    // The factor must divide the block charpoly and carry no x-1 factor.
    IntPoly p = charpoly(sigma.alpha.blocks[nu->block_index]);
    if (!p.try_divide_monic(nu->factor)) return false;
    return !nu->factor.try_divide_monic(IntPoly({-1, 1})).has_value();
  }
  const auto& relation = std::get<GenerationCertificate>(*verdict.certificate);
  if (verdict.route == WildRoute::Quotient) {
    QuotientModel quotient = image_quotient(model, beta_of(model, sigma));
    return verify_quotient_certificate(quotient, sigma.b, relation);
  }
  return verify_generation_certificate(model, beta_orbit(model, sigma), relation);
}

}  // namespace wildauto
