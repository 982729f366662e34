#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "a1scroll/chow.hpp"
#include "a1scroll/forms.hpp"

namespace a1scroll {

/// Scroll F_{m,a} = P(O(a_1) + ... + O(a_r)) over P^m.
using ScrollSpec = BundleSpec;

/// Shift twists so the minimum is 0, then sort ascending. P(E) = P(E (x) L)
/// so the result describes the same variety.
ScrollSpec normalize(const ScrollSpec& spec);

/// "F(m;a1,...,ar)".
std::string to_string(const ScrollSpec& spec);

/// (sum of twists) mod r, the class of det E in Pic / r Pic. In [0, r).
long orientation_character(const ScrollSpec& spec);

enum class ScrollStatus { equivalent, inequivalent, undecided };
const char* to_string(ScrollStatus s);

/// sum a = sum1, sum a' = sum2, compared modulo `modulus`.
struct CongruenceCertificate {
  Integer sum1, sum2;
  long modulus = 0;
};

/// Normalised F_{2,a} twists and the discriminants of their intersection cubics.
struct DiscriminantCertificate {
  Integer a1, a2;
  Integer disc1, disc2;
};

/// Both specs normalise to the same spec.
struct IdentityCertificate {
  ScrollSpec normalized;
};

/// Specs are outside every implemented rule.
struct NoRuleCertificate {
  std::string reason;
};

using Certificate = std::variant<CongruenceCertificate, DiscriminantCertificate, IdentityCertificate, NoRuleCertificate>;

struct Verdict {
  ScrollStatus status = ScrollStatus::undecided;
  std::string rule;
  Certificate certificate;
};

/// Recomputes the verdict from its certificate; true if they agree.
bool verify_certificate(const Verdict& v);

/// m = 1 and equal rank r on both sides. Equivalent iff sums agree mod r.
/// Throws DomainError otherwise.
Verdict classify_p1_base(const ScrollSpec& s1, const ScrollSpec& s2);

/// F_{2,a} vs F_{2,a2} after normalising each twist to its absolute value.
Verdict classify_f2(const Integer& a, const Integer& a2);
/// Same comparison without the |a| normalisation (equivalent iff a == a2).
Verdict classify_f2_raw(const Integer& a, const Integer& a2);

/// Dispatch to the rule matching the two specs, or undecided.
Verdict classify(const ScrollSpec& s1, const ScrollSpec& s2);

struct CrosscheckReport {
  ScrollSpec s1, s2;
  Verdict classifier;
  BinaryCubicForm form1, form2;
  InvariantProfile profile1, profile2;
  EquivDecision oriented, unoriented;
  bool consistent = true;
  std::vector<std::string> notes;
};

/// Compares the classifier verdict against the intersection-cubic engines
/// under both sign conventions. Both specs must be 3-folds of Picard rank 2
/// (DomainError otherwise). Discrepancies are reported, never resolved.
CrosscheckReport crosscheck(const ScrollSpec& s1, const ScrollSpec& s2, long height = 10);

}  // namespace a1scroll
