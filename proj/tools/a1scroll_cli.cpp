// a1scroll: Chow rings, intersection cubics and homotopy presentations of
// scrolls over projective space.
//
// Exit codes: 0 computed (and, for boolean verbs, a positive verdict),
// 1 negative verdict from a boolean verb (lens: false; equiv, classify:
// inequivalent), 2 usage or syntax error.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "a1scroll/a1pi.hpp"
#include "a1scroll/errors.hpp"
#include "a1scroll/parse.hpp"
#include "a1scroll/serialize.hpp"

namespace {

using namespace a1scroll;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string decision_line(const EquivDecision& d) {
  std::string out = std::string(to_string(d.convention)) + ": " + to_string(d.verdict);
  if (d.witness) out += " witness " + d.witness->to_string();
  if (d.obstruction) out += " (" + d.obstruction->kind + ": " + d.obstruction->detail + ")";
  return out;
}

std::string profile_line(const InvariantProfile& p) {
  return "content " + p.content.get_str() + ", discriminant " + p.discriminant.get_str() + ", hessian content " +
         p.hessian_content.get_str() + ", " + p.mod2.to_string() + ", " + p.mod3.to_string();
}

int run_ring(const std::string& scroll, bool json) {
  const ChowRing ring = build_ring(parse_scroll(scroll));
  if (json) {
    Json j{{"scroll", to_string(parse_scroll(scroll))}};
    j.update(to_json(ring));
    emit(j);
  } else {
    std::cout << ring.presentation() << "\n";
  }
  return 0;
}

int run_form(const std::string& scroll, bool json) {
  const ScrollSpec spec = parse_scroll(scroll);
  const BinaryCubicForm f = intersection_cubic(build_ring(spec));
  if (json) {
    emit(Json{{"scroll", to_string(spec)}, {"form", to_json(f)}, {"profile", to_json(invariant_profile(f))}});
  } else {
    std::cout << f.to_string() << "\n";
  }
  return 0;
}

int run_equiv(const std::string& lhs, const std::string& rhs, long height, bool allow_sign, bool json) {
  const BinaryCubicForm f = parse_form(lhs);
  const BinaryCubicForm g = parse_form(rhs);
  const EquivDecision oriented = decide_equivalence(f, g, height, false);
  const EquivDecision unoriented = decide_equivalence(f, g, height, true);
  const EquivDecision& selected = allow_sign ? unoriented : oriented;
  if (json) {
    emit(Json{{"forms", Json::array({to_json(f), to_json(g)})},
              {"height", height},
              {"selected", to_string(selected.convention)},
              {"decisions", Json::array({to_json(oriented), to_json(unoriented)})}});
  } else {
    std::cout << decision_line(oriented) << "\n" << decision_line(unoriented) << "\n";
  }
  return selected.verdict == EquivVerdict::inequivalent ? 1 : 0;
}

int run_classify(const std::string& lhs, const std::string& rhs, long height, bool json) {
  const ScrollSpec s1 = parse_scroll(lhs);
  const ScrollSpec s2 = parse_scroll(rhs);
  const Verdict verdict = classify(s1, s2);
  const bool threefolds = s1.dimension() == 3 && s2.dimension() == 3;
  if (json) {
    Json j{{"scrolls", Json::array({to_string(s1), to_string(s2)})}, {"verdict", to_json(verdict)}};
    if (threefolds) j["crosscheck"] = to_json(crosscheck(s1, s2, height));
    emit(j);
  } else {
    std::cout << to_string(verdict.status) << "\n";
    std::cout << "rule: " << verdict.rule << "\n";
    std::cout << "certificate: " << to_json(verdict)["data"].dump() << " verified "
              << (verify_certificate(verdict) ? "yes" : "no") << "\n";
    if (threefolds) {
      const CrosscheckReport rep = crosscheck(s1, s2, height);
      std::cout << "forms: " << rep.form1.to_string() << " " << rep.form2.to_string() << "\n";
      std::cout << "profile 1: " << profile_line(rep.profile1) << "\n";
      std::cout << "profile 2: " << profile_line(rep.profile2) << "\n";
      std::cout << decision_line(rep.oriented) << "\n" << decision_line(rep.unoriented) << "\n";
      std::cout << "crosscheck: " << (rep.consistent ? "consistent" : "discrepancy") << "\n";
      for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
    }
  }
  return verdict.status == ScrollStatus::inequivalent ? 1 : 0;
}

int run_pi(const std::string& scroll, int i, bool json) {
  const ScrollSpec spec = parse_scroll(scroll);
  if (i < 1) throw ArgumentError("--i must be >= 1");
  const GroupExpr g = i == 1 ? pi1_scroll(spec) : pi_scroll(spec, i);
  if (json) {
    emit(Json{{"scroll", to_string(spec)}, {"i", i}, {"group", g.to_string()}});
  } else {
    std::cout << g.to_string() << "\n";
  }
  return 0;
}

int run_table(const std::string& scroll, int max, bool json) {
  const ScrollSpec spec = parse_scroll(scroll);
  const auto table = homotopy_table(spec, max);
  if (json) {
    emit(Json{{"scroll", to_string(spec)}, {"rows", to_json(table)}});
  } else {
    for (const auto& [i, g] : table) std::cout << i << "\t" << g.to_string() << "\n";
  }
  return 0;
}

int run_lens(const std::string& lhs, const std::string& rhs, bool json) {
  const LensSpace l1 = parse_lens(lhs);
  const LensSpace l2 = parse_lens(rhs);
  const bool eq = homotopy_equivalent(l1, l2);
  if (json) {
    emit(Json{{"lens", Json::array({l1.to_string(), l2.to_string()})}, {"homotopy_equivalent", eq}});
  } else {
    std::cout << (eq ? "true" : "false") << "\n";
  }
  return eq ? 0 : 1;
}

int run_scan(long bound, bool json) {
  const DiscriminantScan scan = discriminant_scan(bound);
  if (json) {
    emit(to_json(scan));
  } else {
    for (const auto& [a, disc] : scan.values) std::cout << "a=" << a << "\tdiscriminant=" << disc.get_str() << "\n";
    if (scan.collisions.empty()) std::cout << "collisions: none\n";
    for (const auto& [a, b] : scan.collisions) std::cout << "collision: " << a << " " << b << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow rings, intersection cubics and A1-homotopy presentations of scrolls"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  std::string a, b;
  long height = 10;
  bool allow_sign = false;
  int index = 1;
  int max = 1;
  long bound = 100;

  auto* ring = app.add_subcommand("ring", "Chow ring presentation of a scroll");
  ring->add_option("scroll", a, "F(m;a1,...,ar)")->required();

  auto* form = app.add_subcommand("form", "Intersection cubic of a 3-fold scroll");
  form->add_option("scroll", a, "F(m;a1,...,ar)")->required();

  auto* equiv = app.add_subcommand("equiv", "GL2(Z) equivalence of two binary cubics");
  equiv->add_option("lhs", a, "[A,B,C,D]")->required();
  equiv->add_option("rhs", b, "[A,B,C,D]")->required();
  equiv->add_option("--height", height, "Entry bound for the witness search")->check(CLI::PositiveNumber);
  equiv->add_flag("--allow-sign", allow_sign, "Exit code follows the unoriented convention (f ~ +-g)");

  auto* cls = app.add_subcommand("classify", "A1-weak equivalence verdict with cubic-form crosscheck");
  cls->add_option("lhs", a, "F(m;a1,...,ar)")->required();
  cls->add_option("rhs", b, "F(m;a1,...,ar)")->required();
  cls->add_option("--height", height, "Entry bound for the witness search")->check(CLI::PositiveNumber);

  auto* pi = app.add_subcommand("pi", "A1-homotopy sheaf pi_i of a scroll");
  pi->add_option("scroll", a, "F(m;a1,...,ar)")->required();
  pi->add_option("--i", index, "Homotopy degree")->required()->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "pi_1 .. pi_max of a scroll");
  table->add_option("scroll", a, "F(m;a1,...,ar)")->required();
  table->add_option("--max", max, "Largest homotopy degree")->required()->check(CLI::PositiveNumber);

  auto* lens = app.add_subcommand("lens", "Homotopy equivalence of lens spaces");
  lens->add_option("lhs", a, "L(p,q)")->required();
  lens->add_option("rhs", b, "L(p,q)")->required();

  auto* scan = app.add_subcommand("scan", "Discriminants of the F_{2,a} intersection cubics");
  scan->add_option("--bound", bound, "Largest a")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ring->parsed()) return run_ring(a, json);
    if (form->parsed()) return run_form(a, json);
    if (equiv->parsed()) return run_equiv(a, b, height, allow_sign, json);
    if (cls->parsed()) return run_classify(a, b, height, json);
    if (pi->parsed()) return run_pi(a, index, json);
    if (table->parsed()) return run_table(a, max, json);
    if (lens->parsed()) return run_lens(a, b, json);
    if (scan->parsed()) return run_scan(bound, json);
  } catch (const a1scroll::ParseError& e) {
    std::cerr << "error: " << e.annotated() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
