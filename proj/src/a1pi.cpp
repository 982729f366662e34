#include "a1scroll/a1pi.hpp"

#include <numeric>
#include <string>

#include "a1scroll/errors.hpp"

namespace a1scroll {

namespace {

std::string projective(int n) { return "P^" + std::to_string(n); }
std::string punctured(int n) { return "A^" + std::to_string(n) + "-0"; }

}  // namespace

GroupExpr pi_projective_space(int n, int i) {
  if (n < 1 || i < 1) throw ArgumentError("pi_projective_space needs n >= 1 and i >= 1");
  if (n == 1) return i == 1 ? group::f1() : group::opaque(punctured(2), i);
  if (i == 1) return group::gm();
  if (i < n) return group::trivial();
  if (i == n) return group::kmw(n + 1);
  return group::opaque(projective(n), i);
}

GroupExpr pi_punctured_affine(int n, int i) {
  if (n < 2 || i < 1) throw ArgumentError("pi_punctured_affine needs n >= 2 and i >= 1");
  if (i < n - 1) return group::trivial();
  if (i == n - 1) return group::kmw(n);
  return group::opaque(punctured(n), i);
}

GroupExpr pi1_sln(int n) {
  if (n < 2) throw ArgumentError("pi1_sln needs n >= 2");
  return n == 2 ? group::kmw(2) : group::km(2);
}

GroupExpr pi1_projective_bundle(const GroupExpr& base_pi1, int rank, int det_mod2, EulerStatus euler,
                                BaseHypothesis /*hypothesis*/) {
  if (rank < 2) throw ArgumentError("pi1_projective_bundle needs rank >= 2");
  if (rank >= 3) return normalize_expr(group::product({group::gm(), base_pi1}));
  if (euler != EulerStatus::trivial) return group::opaque("pi1-undetermined-nontrivial-euler-class", 1);
  return normalize_expr(group::split_ext(group::f1(), base_pi1, TwistDescriptor::parity(det_mod2)));
}

GroupExpr pi1_scroll(const ScrollSpec& spec) {
  if (spec.rank() >= 3)
    return normalize_expr(group::product({group::gm(), spec.m == 1 ? group::f1() : group::gm()}));
  const Integer sum = std::accumulate(spec.twists.begin(), spec.twists.end(), Integer(0));
  // Rank 2 over P^1 uses the same Gm quotient as over P^m, m > 1.
  return pi1_projective_bundle(group::gm(), 2, int(mod_floor(sum, 2L)), EulerStatus::trivial,
                               BaseHypothesis::split_torus_pi1);
}

GroupExpr pi_scroll(const ScrollSpec& spec, int i) {
  if (i < 2) throw ArgumentError("pi_scroll needs i >= 2; use pi1_scroll for i = 1");
  return normalize_expr(group::product({pi_projective_space(spec.rank() - 1, i), pi_projective_space(spec.m, i)}));
}

GroupExpr pi1_blowup_linear(int n, int k) {
  if (n < 3) throw ArgumentError("pi1_blowup_linear needs n >= 3");
  if (k < 1 || k > n) throw ArgumentError("pi1_blowup_linear needs 1 <= k <= n");
  if (k == 1) return group::gm();  // blowing up a hyperplane changes nothing
  if (k == n) return group::split_ext(group::f1(), group::gm(), TwistDescriptor::parity(1));
  if (k == 2) return normalize_expr(group::product({group::f1(), group::gm()}));
  return normalize_expr(group::product({group::gm(), group::gm()}));
}

std::vector<std::pair<int, GroupExpr>> homotopy_table(const ScrollSpec& spec, int i_max) {
  if (i_max < 1) throw ArgumentError("homotopy_table needs i_max >= 1");
  std::vector<std::pair<int, GroupExpr>> table;
  table.emplace_back(1, pi1_scroll(spec));
  for (int i = 2; i <= i_max; ++i) table.emplace_back(i, pi_scroll(spec, i));
  return table;
}

}  // namespace a1scroll
