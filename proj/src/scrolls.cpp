#include "a1scroll/scrolls.hpp"

#include <algorithm>
#include <numeric>

#include "a1scroll/errors.hpp"

namespace a1scroll {

ScrollSpec normalize(const ScrollSpec& spec) {
  ScrollSpec out = spec;
  const Integer shift = *std::min_element(out.twists.begin(), out.twists.end());
  for (Integer& a : out.twists) a -= shift;
  std::sort(out.twists.begin(), out.twists.end());
  return out;
}

std::string to_string(const ScrollSpec& spec) {
  std::string out = "F(" + std::to_string(spec.m) + ";";
  for (std::size_t i = 0; i < spec.twists.size(); ++i) {
    if (i != 0) out += ',';
    out += spec.twists[i].get_str();
  }
  return out + ")";
}

namespace {

Integer twist_sum(const ScrollSpec& spec) { return std::accumulate(spec.twists.begin(), spec.twists.end(), Integer(0)); }

}  // namespace

long orientation_character(const ScrollSpec& spec) { return mod_floor(twist_sum(spec), long(spec.rank())); }

const char* to_string(ScrollStatus s) {
  switch (s) {
    case ScrollStatus::equivalent: return "equivalent";
    case ScrollStatus::inequivalent: return "inequivalent";
    default: return "undecided";
  }
}

namespace {

ScrollStatus from_bool(bool equivalent) { return equivalent ? ScrollStatus::equivalent : ScrollStatus::inequivalent; }

struct CertificateCheck {
  const Verdict& v;
  bool operator()(const CongruenceCertificate& c) const {
    return c.modulus > 0 && v.status == from_bool(mod_floor(c.sum1 - c.sum2, c.modulus) == 0);
  }
  bool operator()(const DiscriminantCertificate& c) const {
    const bool same_disc = discriminant(f2_intersection_cubic(c.a1)) == c.disc1 &&
                           discriminant(f2_intersection_cubic(c.a2)) == c.disc2;
    if (!same_disc) return false;
    // Equal twists are the same variety; distinct discriminants certify the rest.
    if (c.a1 == c.a2) return v.status == ScrollStatus::equivalent;
    return c.disc1 != c.disc2 && v.status == ScrollStatus::inequivalent;
  }
  bool operator()(const IdentityCertificate&) const { return v.status == ScrollStatus::equivalent; }
  bool operator()(const NoRuleCertificate&) const { return v.status == ScrollStatus::undecided; }
};

}  // namespace

bool verify_certificate(const Verdict& v) { return std::visit(CertificateCheck{v}, v.certificate); }

Verdict classify_p1_base(const ScrollSpec& s1, const ScrollSpec& s2) {
  if (s1.m != 1 || s2.m != 1) throw DomainError("classify_p1_base: both scrolls must lie over P^1");
  if (s1.rank() != s2.rank()) throw DomainError("classify_p1_base: ranks differ");
  CongruenceCertificate cert{twist_sum(s1), twist_sum(s2), long(s1.rank())};
  const bool eq = mod_floor(cert.sum1 - cert.sum2, cert.modulus) == 0;
  return {from_bool(eq), "p1_base_sum_mod_rank", cert};
}

Verdict classify_f2(const Integer& a, const Integer& a2) {
  const Integer n1 = abs(a);
  const Integer n2 = abs(a2);
  DiscriminantCertificate cert{n1, n2, discriminant(f2_intersection_cubic(n1)), discriminant(f2_intersection_cubic(n2))};
  return {from_bool(n1 == n2), "f2_normalized_twist", cert};
}

Verdict classify_f2_raw(const Integer& a, const Integer& a2) {
  DiscriminantCertificate cert{a, a2, discriminant(f2_intersection_cubic(a)), discriminant(f2_intersection_cubic(a2))};
  // a and -a share a discriminant, so a raw "inequivalent" for a2 = -a has no certificate.
  ScrollStatus status = from_bool(a == a2);
  if (a != a2 && cert.disc1 == cert.disc2) status = ScrollStatus::undecided;
  return {status, "f2_raw_twist", cert};
}

Verdict classify(const ScrollSpec& s1, const ScrollSpec& s2) {
  if (s1.m == 1 && s2.m == 1 && s1.rank() == s2.rank()) return classify_p1_base(s1, s2);
  const ScrollSpec n1 = normalize(s1);
  const ScrollSpec n2 = normalize(s2);
  if (s1.m == 2 && s2.m == 2 && s1.rank() == 2 && s2.rank() == 2) return classify_f2(n1.twists[1], n2.twists[1]);
  if (n1 == n2) return {ScrollStatus::equivalent, "identical_normal_form", IdentityCertificate{n1}};
  return {ScrollStatus::undecided, "no_rule",
          NoRuleCertificate{"no classification rule for " + to_string(s1) + " vs " + to_string(s2)}};
}

CrosscheckReport crosscheck(const ScrollSpec& s1, const ScrollSpec& s2, long height) {
  if (s1.dimension() != 3 || s2.dimension() != 3)
    throw DomainError("crosscheck needs two 3-folds, got dimensions " + std::to_string(s1.dimension()) + " and " +
                      std::to_string(s2.dimension()));
  CrosscheckReport rep;
  rep.s1 = s1;
  rep.s2 = s2;
  rep.classifier = classify(s1, s2);
  rep.form1 = intersection_cubic(build_ring(s1));
  rep.form2 = intersection_cubic(build_ring(s2));
  rep.profile1 = invariant_profile(rep.form1);
  rep.profile2 = invariant_profile(rep.form2);
  rep.oriented = decide_equivalence(rep.form1, rep.form2, height, false);
  rep.unoriented = decide_equivalence(rep.form1, rep.form2, height, true);

  auto compare = [&rep](const EquivDecision& d) {
    const char* conv = to_string(d.convention);
    if (d.verdict == EquivVerdict::unknown) {
      rep.notes.push_back(std::string(conv) + ": form engine inconclusive");
      return;
    }
    if (rep.classifier.status == ScrollStatus::undecided) {
      rep.notes.push_back(std::string(conv) + ": classifier undecided, forms " + to_string(d.verdict));
      return;
    }
    const bool forms_eq = d.verdict == EquivVerdict::equivalent;
    const bool cls_eq = rep.classifier.status == ScrollStatus::equivalent;
    if (forms_eq == cls_eq) return;
    rep.consistent = false;
    if (forms_eq)
      rep.notes.push_back(std::string(conv) + ": classifier says inequivalent but intersection cubics are equivalent via " +
                          d.witness->to_string() + "; the cubic form does not separate these scrolls");
    else
      rep.notes.push_back(std::string(conv) + ": classifier says equivalent but intersection cubics are inequivalent (" +
                          (d.obstruction ? d.obstruction->kind + ": " + d.obstruction->detail : std::string("no detail")) + ")");
  };
  compare(rep.oriented);
  compare(rep.unoriented);
  return rep;
}

}  // namespace a1scroll
