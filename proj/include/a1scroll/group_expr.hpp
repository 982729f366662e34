#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace a1scroll {

/// Kinds in canonical sort order: atoms first, then combinators.
enum class GroupKind { trivial, f1, gm, zmod, km, kmw, h1et_mu, opaque, central_ext, split_ext, product };

/// Action of the quotient on the kernel in a split extension, recorded only
/// through its character.
struct TwistDescriptor {
  enum class Kind { trivial, parity, residue };
  Kind kind = Kind::trivial;
  long modulus = 1;  ///< 2 for parity
  long value = 0;

  static TwistDescriptor none() { return {}; }
  static TwistDescriptor parity(long v) { return {Kind::parity, 2, ((v % 2) + 2) % 2}; }
  static TwistDescriptor residue(long n, long v) { return {Kind::residue, n, ((v % n) + n) % n}; }

  bool is_trivial() const { return kind == Kind::trivial || value % modulus == 0; }
  std::string to_string() const;
  friend auto operator<=>(const TwistDescriptor&, const TwistDescriptor&) = default;
};

/// Symbolic presentation of a sheaf of groups.
///
/// Atoms: Trivial, Gm, Z/n, K^MW_n, K^M_n, F(1), H^1_et(mu_n) and Opaque
/// groups tagged by (space, index) for pi_index of a space that is not
/// computed. Combinators: Product, SplitExt (kernel semidirect quotient) and
/// CentralExt (kernel central in the extension, with a factor-set tag).
struct GroupExpr {
  GroupKind kind = GroupKind::trivial;
  long n = 0;                     ///< zmod, km, kmw, h1et_mu
  std::string space;              ///< opaque
  long index = 0;                 ///< opaque
  std::vector<GroupExpr> children;  ///< product: factors; extensions: {kernel, quotient}
  TwistDescriptor twist;          ///< split_ext
  std::string factor_set;         ///< central_ext

  bool is_atom() const { return kind < GroupKind::central_ext; }

  /// S-expression: (Gm), (KMW 3), (Opaque A^2-0 2), (x (F1) (Gm)),
  /// (rtimes (F1) (Gm) parity:1), (cext (KMW 2) (Gm) symbol).
  std::string to_string() const;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
  friend std::strong_ordering operator<=>(const GroupExpr& l, const GroupExpr& r);
  friend std::ostream& operator<<(std::ostream& os, const GroupExpr& e) { return os << e.to_string(); }
};

namespace group {

GroupExpr trivial();
GroupExpr gm();
GroupExpr f1();
GroupExpr zmod(long n);
GroupExpr km(long n);
GroupExpr kmw(long n);
GroupExpr h1et_mu(long n);
GroupExpr opaque(std::string space, long index);
GroupExpr product(std::vector<GroupExpr> factors);
GroupExpr split_ext(GroupExpr kernel, GroupExpr quotient, TwistDescriptor twist);
GroupExpr central_ext(GroupExpr kernel, GroupExpr quotient, std::string factor_set);

}  // namespace group

/// F(1) as the central extension of Gm by K^MW_2 given by the symbol.
/// Normal forms keep F(1) atomic; this is its structure as metadata.
GroupExpr f1_structure();

/// Flatten and sort products, drop trivial factors, collapse split
/// extensions with trivial twist into products, and contract the F(1)
/// central extension to the atom. Idempotent.
GroupExpr normalize_expr(const GroupExpr& e);

/// Structural equality of normal forms. Decides equality of the canonical
/// presentations emitted here, not isomorphism of sheaves in general.
bool isomorphic(const GroupExpr& e1, const GroupExpr& e2);

/// Inverse of GroupExpr::to_string. Throws ParseError.
GroupExpr parse_group_expr(std::string_view text);

}  // namespace a1scroll
