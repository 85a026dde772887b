#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wildauto/bigint.hpp"

namespace wildauto {

/// Polynomial with arbitrary-precision integer coefficients, stored lowest
/// degree first and kept normalized (no trailing zero coefficients; the zero
/// polynomial has an empty coefficient vector and degree -1).
///
/// Division is only defined against monic divisors, which is all the exact
/// routines need (cyclotomics, x - 1 powers, characteristic polynomials).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return constant(1); }
  static IntPoly constant(Int v);
  static IntPoly x() { return IntPoly({0, 1}); }
  /// x^n - 1
  static IntPoly x_pow_minus_one(unsigned long n);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const Int& leading() const { return c_.back(); }
  Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }

  bool operator==(const IntPoly& other) const = default;

  IntPoly operator+(const IntPoly& other) const;
  IntPoly operator-(const IntPoly& other) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& other) const;
  IntPoly pow(unsigned long k) const;

  /// Quotient and remainder against a monic divisor; exact over the integers.
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;
  /// Quotient if divisor (monic) divides exactly, nullopt otherwise.
  std::optional<IntPoly> try_divide_monic(const IntPoly& divisor) const;

  Int eval(const Int& v) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Int> c_;
};

/// Polynomial over the rationals, same layout. Carries the Euclidean-domain
/// operations the invariant-factor computation needs.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static RatPoly from_int_poly(const IntPoly& p);
  static RatPoly one();

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& leading() const { return c_.back(); }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

  bool operator==(const RatPoly& other) const = default;

  RatPoly operator+(const RatPoly& other) const;
  RatPoly operator-(const RatPoly& other) const;
  RatPoly operator*(const RatPoly& other) const;

  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
  RatPoly monic() const;

  /// Monic poly with the same integer-multiple coefficients; defined for
  /// polynomials that are rational multiples of integer monic polynomials.
  IntPoly to_int_poly_monic() const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

}  // namespace wildauto
