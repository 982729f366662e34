#include "a1scroll/serialize.hpp"

namespace a1scroll {

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const ChowRing& ring) {
  Json chern = Json::array();
  for (const Integer& c : ring.chern()) chern.push_back(to_json(c));
  return Json{{"m", ring.base_dim()},
              {"r", ring.rank()},
              {"chern", std::move(chern)},
              {"relations", Json::array({IntPoly::xi(unsigned(ring.base_dim() + 1)).to_string(), ring.tau_relation().to_string()})},
              {"presentation", ring.presentation()}};
}

Json to_json(const BinaryCubicForm& f) { return Json::array({to_json(f.a), to_json(f.b), to_json(f.c), to_json(f.d)}); }

Json to_json(const UnimodularMatrix& m) {
  return Json::array({Json::array({to_json(m.p()), to_json(m.q())}), Json::array({to_json(m.r()), to_json(m.s())})});
}

namespace {

Json label_json(const OrbitLabel& l) {
  return Json{{"modulus", l.modulus}, {"representative", l.representative}, {"type", l.type}};
}

}  // namespace

Json to_json(const InvariantProfile& p) {
  return Json{{"content", to_json(p.content)},
              {"discriminant", to_json(p.discriminant)},
              {"mod2", label_json(p.mod2)},
              {"mod3", label_json(p.mod3)},
              {"hessian_content", to_json(p.hessian_content)}};
}

Json to_json(const EquivDecision& d) {
  Json out{{"verdict", to_string(d.verdict)}, {"convention", to_string(d.convention)}};
  if (d.witness) out["witness"] = to_json(*d.witness);
  if (d.obstruction) out["obstruction"] = Json{{"kind", d.obstruction->kind}, {"detail", d.obstruction->detail}};
  return out;
}

namespace {

struct CertificateJson {
  Json& data;
  Json& certs;

  void operator()(const CongruenceCertificate& c) const {
    data = Json{{"sum1", to_json(c.sum1)}, {"sum2", to_json(c.sum2)}, {"modulus", c.modulus}};
    certs.push_back(Json{{"kind", "congruence"},
                         {"residue1", mod_floor(c.sum1, c.modulus)},
                         {"residue2", mod_floor(c.sum2, c.modulus)}});
  }
  void operator()(const DiscriminantCertificate& c) const {
    data = Json{{"a1", to_json(c.a1)}, {"a2", to_json(c.a2)}};
    certs.push_back(Json{{"kind", "discriminant"}, {"disc1", to_json(c.disc1)}, {"disc2", to_json(c.disc2)}});
  }
  void operator()(const IdentityCertificate& c) const {
    data = Json{{"normalized", to_string(c.normalized)}};
    certs.push_back(Json{{"kind", "identity"}});
  }
  void operator()(const NoRuleCertificate& c) const {
    data = Json{{"reason", c.reason}};
  }
};

}  // namespace

Json to_json(const Verdict& v) {
  Json data = Json::object();
  Json certs = Json::array();
  std::visit(CertificateJson{data, certs}, v.certificate);
  for (auto& c : certs) c["verified"] = verify_certificate(v);
  return Json{{"status", to_string(v.status)}, {"rule", v.rule}, {"data", std::move(data)}, {"certificates", std::move(certs)}};
}

Json to_json(const CrosscheckReport& r) {
  return Json{{"scrolls", Json::array({to_string(r.s1), to_string(r.s2)})},
              {"classifier", to_json(r.classifier)},
              {"forms", Json::array({to_json(r.form1), to_json(r.form2)})},
              {"profiles", Json::array({to_json(r.profile1), to_json(r.profile2)})},
              {"oriented", to_json(r.oriented)},
              {"unoriented", to_json(r.unoriented)},
              {"status", r.consistent ? "consistent" : "discrepancy"},
              {"notes", r.notes}};
}

Json to_json(const DiscriminantScan& s) {
  Json values = Json::array();
  for (const auto& [a, disc] : s.values) values.push_back(Json{{"a", a}, {"discriminant", to_json(disc)}});
  Json collisions = Json::array();
  for (const auto& [a, b] : s.collisions) collisions.push_back(Json::array({a, b}));
  return Json{{"bound", s.bound}, {"values", std::move(values)}, {"collisions", std::move(collisions)}};
}

Json to_json(const std::vector<std::pair<int, GroupExpr>>& table) {
  Json rows = Json::array();
  for (const auto& [i, g] : table) rows.push_back(Json{{"i", i}, {"group", g.to_string()}});
  return rows;
}

}  // namespace a1scroll
