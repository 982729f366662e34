#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "a1scroll/chow.hpp"
#include "a1scroll/integer.hpp"

namespace a1scroll {

/// f(x, y) = a x^3 + b x^2 y + c x y^2 + d y^3 with integer coefficients.
struct BinaryCubicForm {
  Integer a, b, c, d;

  BinaryCubicForm() = default;
  BinaryCubicForm(Integer a_, Integer b_, Integer c_, Integer d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  Integer operator()(const Integer& x, const Integer& y) const { return ((a * x + b * y) * x + c * y * y) * x + d * y * y * y; }
  BinaryCubicForm operator-() const { return {-a, -b, -c, -d}; }
  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  friend bool operator==(const BinaryCubicForm&, const BinaryCubicForm&) = default;

  /// "[A,B,C,D]".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const BinaryCubicForm& f) { return os << f.to_string(); }
};

/// 2x2 integer matrix [[p, q], [r, s]] with determinant +-1. It acts on a
/// form by substitution on column coordinate vectors:
///   act(f, M)(x, y) = f(p x + q y, r x + s y).
/// This is a right action: act(act(f, M), N) = act(f, M * N).
class UnimodularMatrix {
 public:
  /// Throws ArgumentError if ps - qr is not +-1.
  UnimodularMatrix(Integer p, Integer q, Integer r, Integer s);
  static UnimodularMatrix identity() { return {1, 0, 0, 1}; }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& r() const { return r_; }
  const Integer& s() const { return s_; }
  Integer det() const { return p_ * s_ - q_ * r_; }
  UnimodularMatrix inverse() const;

  friend UnimodularMatrix operator*(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs);
  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

  /// "[[p,q],[r,s]]".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m) { return os << m.to_string(); }

 private:
  Integer p_, q_, r_, s_;
};

BinaryCubicForm act(const BinaryCubicForm& f, const UnimodularMatrix& m);

/// 18abcd - 4b^3 d + b^2 c^2 - 4 a c^3 - 27 a^2 d^2.
Integer discriminant(const BinaryCubicForm& f);

/// Hessian covariant (b^2 - 3ac) x^2 + (bc - 9ad) xy + (c^2 - 3bd) y^2.
std::array<Integer, 3> hessian(const BinaryCubicForm& f);

/// gcd(a, b, c, d), nonnegative.
Integer content(const BinaryCubicForm& f);

/// Intersection cubic deg((x xi + y tau)^3) of a 3-fold with Picard rank 2:
/// (deg xi^3, 3 deg xi^2 tau, 3 deg xi tau^2, deg tau^3). Throws DomainError
/// unless the ring has dimension 3 and (m, r) is (1, 3) or (2, 2).
BinaryCubicForm intersection_cubic(const ChowRing& ring);

/// GL2(Z/m) orbit of a form reduced mod m.
struct OrbitLabel {
  int modulus = 0;
  /// Lexicographically smallest orbit element, entries in [0, modulus).
  std::array<int, 4> representative{};
  /// Factorisation type over F_m, e.g. "nonzero cube of a linear form".
  std::string type;

  std::string to_string() const;
  friend bool operator==(const OrbitLabel& l, const OrbitLabel& r) {
    return l.modulus == r.modulus && l.representative == r.representative;
  }
};

/// Orbit label under GL2(Z/p) for a small prime p, by exhaustive enumeration.
OrbitLabel orbit_label(const BinaryCubicForm& f, int p);

/// GL2(Z)-invariants used to certify inequivalence.
struct InvariantProfile {
  Integer content;
  Integer discriminant;
  OrbitLabel mod2;
  OrbitLabel mod3;
  Integer hessian_content;
  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const BinaryCubicForm& f);

/// First invariant on which the two profiles differ, as (name, description).
/// With allow_sign the comparison is against both g and -g.
std::optional<std::pair<std::string, std::string>> invariant_mismatch(const BinaryCubicForm& f, const BinaryCubicForm& g,
                                                                      bool allow_sign);

/// Smallest M with entries in [-height, height] such that act(f, M) = g (or
/// = -g when allow_sign). Matrices are ordered by max |entry|, then
/// lexicographically on (p-1, q, r, s-1) under 0 < 1 < -1 < 2 < -2 < ...,
/// so the identity is the least matrix. No witness is not a refutation.
std::optional<UnimodularMatrix> gl2z_search(const BinaryCubicForm& f, const BinaryCubicForm& g, long height,
                                            bool allow_sign);

/// Order key used by gl2z_search; exposed for tests.
std::array<long, 5> witness_order_key(const UnimodularMatrix& m);

enum class Convention { oriented, unoriented };
enum class EquivVerdict { equivalent, inequivalent, unknown };

const char* to_string(Convention c);
const char* to_string(EquivVerdict v);

struct Obstruction {
  std::string kind;
  std::string detail;
};

struct EquivDecision {
  EquivVerdict verdict = EquivVerdict::unknown;
  std::optional<UnimodularMatrix> witness;
  std::optional<Obstruction> obstruction;
  Convention convention = Convention::oriented;
};

/// Factorisation f = L^2 M with L primitive. Defined for every nonzero form
/// with zero discriminant.
struct RepeatedFactorSplit {
  std::array<Integer, 2> repeated;  ///< L = repeated[0] x + repeated[1] y
  std::array<Integer, 2> residual;  ///< M
};

/// Throws PreconditionError if f is zero or has nonzero discriminant.
RepeatedFactorSplit split_repeated_factor(const BinaryCubicForm& f);

/// Complete decision for forms of shape L^2 M. Throws PreconditionError
/// outside that family (use gl2z_search there).
EquivDecision degenerate_equiv(const BinaryCubicForm& f, const BinaryCubicForm& g, bool allow_sign);

/// Invariants first, then degenerate_equiv when both discriminants vanish,
/// otherwise gl2z_search up to height. Verdict unknown if nothing decides.
EquivDecision decide_equivalence(const BinaryCubicForm& f, const BinaryCubicForm& g, long height, bool allow_sign);

/// Intersection cubic of F_{2,a} = P(O + O(a)) over P^2.
BinaryCubicForm f2_intersection_cubic(const Integer& a);

struct DiscriminantScan {
  long bound = 0;
  /// (a, discriminant of the F_{2,a} cubic) for 0 <= a <= bound.
  std::vector<std::pair<long, Integer>> values;
  /// Pairs a < a' with equal discriminant.
  std::vector<std::pair<long, long>> collisions;
};

/// Throws ArgumentError if bound < 1.
DiscriminantScan discriminant_scan(long bound);

}  // namespace a1scroll
