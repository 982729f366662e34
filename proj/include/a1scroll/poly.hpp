#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "a1scroll/integer.hpp"

namespace a1scroll {

/// Exponent pair of the monomial xi^xi * tau^tau.
struct Monomial {
  unsigned xi = 0;
  unsigned tau = 0;

  unsigned degree() const { return xi + tau; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in two commuting generators (xi, tau) with arbitrary
/// precision integer coefficients. No stored coefficient is ever zero.
class IntPoly {
 public:
  using Terms = std::map<Monomial, Integer>;

  IntPoly() = default;
  IntPoly(long constant);  // NOLINT: implicit from integer literals is intended
  IntPoly(const Integer& constant);  // NOLINT

  static IntPoly term(const Integer& coeff, unsigned xi_exp, unsigned tau_exp);
  static IntPoly xi(unsigned e = 1) { return term(1, e, 0); }
  static IntPoly tau(unsigned e = 1) { return term(1, 0, e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of xi^i tau^j (zero when absent).
  Integer coeff(unsigned xi_exp, unsigned tau_exp) const;

  /// Adds c * xi^i tau^j in place, erasing the entry if it cancels.
  void add_term(const Integer& c, const Monomial& mono);

  /// Total degree of the highest term; nullopt for the zero polynomial.
  std::optional<unsigned> total_degree() const;
  bool is_homogeneous() const;
  /// Homogeneous component of total degree d.
  IntPoly component(unsigned d) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Text form in the generators x (= xi) and t (= tau), decreasing tau-degree,
  /// e.g. "t^2 + 3*x*t". The zero polynomial prints as "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

IntPoly pow(const IntPoly& base, unsigned e);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace a1scroll
