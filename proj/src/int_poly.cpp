#include "wildauto/int_poly.hpp"

#include <sstream>

#include "wildauto/error.hpp"

namespace wildauto {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPoly IntPoly::constant(Int v) {
  IntPoly p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::x_pow_minus_one(unsigned long n) {
  std::vector<Int> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return IntPoly(std::move(c));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
  std::vector<Int> c(std::max(c_.size(), other.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + other.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
  std::vector<Int> c(std::max(c_.size(), other.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - other.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> c(c_);
  for (Int& v : c) v = -v;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
  if (is_zero() || other.is_zero()) return IntPoly();
  std::vector<Int> c(c_.size() + other.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < other.c_.size(); ++j) c[i + j] += c_[i] * other.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(unsigned long k) const {
  IntPoly result = one();
  IntPoly base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    base = base * base;
    k >>= 1UL;
  }
  return result;
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
  if (!divisor.is_monic()) throw DomainError("integer polynomial division requires a monic divisor");
  std::vector<Int> rem(c_);
  const long dd = divisor.degree();
  long rd = static_cast<long>(rem.size()) - 1;
  if (rd < dd) return {IntPoly(), *this};
  std::vector<Int> quot(static_cast<std::size_t>(rd - dd) + 1);
  for (long k = rd - dd; k >= 0; --k) {
    Int q = rem[static_cast<std::size_t>(k + dd)];
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (long i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k + i)] -= q * divisor.c_[static_cast<std::size_t>(i)];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::optional<IntPoly> IntPoly::try_divide_monic(const IntPoly& divisor) const {
  auto [q, r] = divmod_monic(divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Int IntPoly::eval(const Int& v) const {
  Int acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
  return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Int& a = c_[i];
    if (a == 0) continue;
    Int abs_a = a < 0 ? Int(-a) : a;
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (i == 0 || abs_a != 1) os << abs_a.get_str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

RatPoly RatPoly::from_int_poly(const IntPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const Int& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

RatPoly RatPoly::one() { return RatPoly({Rat(1)}); }

void RatPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  for (Rat& v : c_) v.canonicalize();
}

RatPoly RatPoly::operator+(const RatPoly& other) const {
  std::vector<Rat> c(std::max(c_.size(), other.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + other.coeff(i);
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& other) const {
  std::vector<Rat> c(std::max(c_.size(), other.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - other.coeff(i);
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& other) const {
  if (is_zero() || other.is_zero()) return RatPoly();
  std::vector<Rat> c(c_.size() + other.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < other.c_.size(); ++j) c[i + j] += c_[i] * other.c_[j];
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("rational polynomial division by zero");
  std::vector<Rat> rem(c_);
  const long dd = divisor.degree();
  long rd = static_cast<long>(rem.size()) - 1;
  if (rd < dd) return {RatPoly(), *this};
  std::vector<Rat> quot(static_cast<std::size_t>(rd - dd) + 1);
  const Rat lead = divisor.leading();
  for (long k = rd - dd; k >= 0; --k) {
    Rat q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (long i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k + i)] -= q * divisor.c_[static_cast<std::size_t>(i)];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> c(c_);
  const Rat lead = c.back();
  for (Rat& v : c) v /= lead;
  return RatPoly(std::move(c));
}

IntPoly RatPoly::to_int_poly_monic() const {
  RatPoly m = monic();
  std::vector<Int> c;
  c.reserve(m.c_.size());
  for (const Rat& v : m.c_) {
    if (v.get_den() != 1)
      throw ConsistencyError("monic invariant factor of an integer matrix has a non-integer coefficient");
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

}  // namespace wildauto
