#pragma once

#include <utility>
#include <vector>

#include "a1scroll/group_expr.hpp"
#include "a1scroll/scrolls.hpp"

namespace a1scroll {

/// Status of the Euler class of a rank 2 bundle. Split bundles are trivial.
enum class EulerStatus { trivial, nontrivial, unknown };

/// Hypothesis on the base that the caller asserts for pi1_projective_bundle.
enum class BaseHypothesis { split_torus_pi1, has_homotopy_section };

/// pi_i of P^n. For n >= 2: Gm at i = 1, trivial for 1 < i < n, K^MW_{n+1}
/// at i = n, Opaque above. For n = 1: F(1) at i = 1, Opaque pi_i(A^2-0) above.
GroupExpr pi_projective_space(int n, int i);

/// pi_i of A^n - 0 (n >= 2): trivial below n-1, K^MW_n at n-1, Opaque above.
GroupExpr pi_punctured_affine(int n, int i);

/// pi_1 of SL_n: K^MW_2 for n = 2, K^M_2 for n >= 3.
GroupExpr pi1_sln(int n);

/// pi_1 of P(E) over a base X whose pi_1 is given. Rank >= 3 gives Gm x pi_1(X);
/// rank 2 with trivial Euler class gives F(1) semidirect pi_1(X) twisted by
/// det E mod 2; otherwise the group is left undetermined (Opaque).
GroupExpr pi1_projective_bundle(const GroupExpr& base_pi1, int rank, int det_mod2, EulerStatus euler,
                                BaseHypothesis hypothesis);

GroupExpr pi1_scroll(const ScrollSpec& spec);

/// pi_i (i >= 2) of a split scroll: pi_i(P^{r-1}) x pi_i(P^m).
GroupExpr pi_scroll(const ScrollSpec& spec, int i);

/// pi_1 of the blow-up of P^n (n >= 3) along a linear P^{n-k}, 1 <= k <= n.
GroupExpr pi1_blowup_linear(int n, int k);

/// [(1, pi_1), (2, pi_2), ..., (i_max, pi_{i_max})], all normalised.
std::vector<std::pair<int, GroupExpr>> homotopy_table(const ScrollSpec& spec, int i_max);

}  // namespace a1scroll
