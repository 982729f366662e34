#pragma once

#include <span>
#include <string>
#include <vector>

#include "a1scroll/integer.hpp"
#include "a1scroll/poly.hpp"

namespace a1scroll {

/// O(a_1) + ... + O(a_r) over P^m, with m >= 1 and r >= 2.
struct BundleSpec {
  int m = 1;
  std::vector<Integer> twists;

  BundleSpec() = default;
  /// Throws ArgumentError unless m >= 1 and twists.size() >= 2.
  BundleSpec(int base_dim, std::vector<Integer> twist_list);

  int rank() const { return static_cast<int>(twists.size()); }
  int dimension() const { return m + rank() - 1; }
  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;
};

/// e_i(a_1, ..., a_r); e_0 = 1. Throws ArgumentError for i outside [0, r].
Integer elementary_symmetric(std::span<const Integer> values, int i);

/// sum_{i=0}^{r} e_i(a) xi^i tau^{r-i}, i.e. prod_j (tau + a_j xi).
IntPoly chern_polynomial(const BundleSpec& spec);

/// Chow ring Z[xi, tau] / <xi^{m+1}, P_tau(E)> of P(E) -> P^m.
///
/// Normal forms are supported on the basis xi^i tau^j with 0 <= i <= m and
/// 0 <= j <= r-1. Rewriting uses tau^r -> -sum_{i>=1} c_i xi^i tau^{r-i}
/// (terms with i > m dropped) and xi^{m+1} -> 0. The two leading monomials
/// are coprime so the system is confluent.
class ChowRing {
 public:
  ChowRing(int m, std::vector<Integer> chern);

  int base_dim() const { return m_; }
  int rank() const { return static_cast<int>(chern_.size()) - 1; }
  int top_degree() const { return m_ + rank() - 1; }
  /// c_0 = 1, c_1, ..., c_r.
  const std::vector<Integer>& chern() const { return chern_; }

  /// Second relation with every term divisible by xi^{m+1} removed.
  IntPoly tau_relation() const;
  IntPoly fundamental_monomial() const { return IntPoly::term(1, m_, rank() - 1); }

  IntPoly normal_form(const IntPoly& p) const;
  IntPoly multiply(const IntPoly& p, const IntPoly& q) const;

  /// Coefficient of xi^m tau^{r-1} in the normal form. Throws DegreeError if
  /// the normal form has any term outside top degree.
  Integer degree(const IntPoly& p) const;
  /// Like degree() but projects onto top degree first instead of throwing.
  Integer integrate(const IntPoly& p) const;

  /// Number of basis monomials of total degree d.
  int graded_rank(int d) const;

  /// "Z[x,t]/<x^{m+1}, t^r + c1*x*t^{r-1} + ...>".
  std::string presentation() const;

  friend bool operator==(const ChowRing&, const ChowRing&) = default;

 private:
  int m_;
  std::vector<Integer> chern_;
};

ChowRing build_ring(const BundleSpec& spec);

}  // namespace a1scroll
