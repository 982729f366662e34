#include <gtest/gtest.h>

#include <algorithm>

#include "a1scroll/errors.hpp"
#include "a1scroll/forms.hpp"
#include "generators.hpp"

using namespace a1scroll;

namespace {

BinaryCubicForm degenerate(long b) { return {0, 0, 3, -b}; }

UnimodularMatrix M(long p, long q, long r, long s) { return {p, q, r, s}; }

using gen::random_form;
using gen::random_matrix;

// Every witness of smallest order key among all matrices with entries in
// [-h, h], by listing them all.
std::optional<UnimodularMatrix> naive_search(const BinaryCubicForm& f, const BinaryCubicForm& g, long h, bool allow_sign) {
  std::optional<UnimodularMatrix> best;
  for (long p = -h; p <= h; ++p)
    for (long q = -h; q <= h; ++q)
      for (long r = -h; r <= h; ++r)
        for (long s = -h; s <= h; ++s) {
          const long det = p * s - q * r;
          if (det != 1 && det != -1) continue;
          const std::array<Integer, 4> fa{f.a, f.b, f.c, f.d};
          const auto img = oracle::substitute_by_evaluation(fa, p, q, r, s);
          const BinaryCubicForm image{img[0], img[1], img[2], img[3]};
          if (image != g && !(allow_sign && image == -g)) continue;
          const UnimodularMatrix cand = M(p, q, r, s);
          if (!best || witness_order_key(cand) < witness_order_key(*best)) best = cand;
        }
  return best;
}

}  // namespace

TEST(UnimodularMatrix, RejectsNonUnimodular) {
  EXPECT_THROW(M(2, 0, 0, 1), ArgumentError);
  EXPECT_THROW(M(0, 0, 0, 0), ArgumentError);
  EXPECT_NO_THROW(M(0, 1, 1, 0));
  EXPECT_EQ(M(2, 1, 1, 1).to_string(), "[[2,1],[1,1]]");
}

TEST(UnimodularMatrix, InverseAndProduct) {
  oracle::Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const UnimodularMatrix m = random_matrix(rng, 6);
    EXPECT_EQ(m * m.inverse(), UnimodularMatrix::identity());
    EXPECT_EQ(m.inverse() * m, UnimodularMatrix::identity());
  }
}

TEST(Act, Examples) {
  const BinaryCubicForm f{4, -2, 7, 1};
  EXPECT_EQ(act(f, UnimodularMatrix::identity()), f);
  EXPECT_EQ(act(degenerate(5), M(1, 1, 0, 1)), degenerate(2));
  const long a = 6;
  EXPECT_EQ(act(BinaryCubicForm{0, 3, -3 * a, a * a}, M(0, 1, 1, 0)), (BinaryCubicForm{a * a, -3 * a, 3, 0}));
  // -I negates a cubic.
  EXPECT_EQ(act(f, M(-1, 0, 0, -1)), -f);
}

TEST(Act, MatchesEvaluationOracle) {
  oracle::Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const BinaryCubicForm f = random_form(rng, 20);
    const auto m = oracle::random_unimodular(rng, 10);
    const auto img = oracle::substitute_by_evaluation({f.a, f.b, f.c, f.d}, m[0], m[1], m[2], m[3]);
    ASSERT_EQ(act(f, M(m[0], m[1], m[2], m[3])), (BinaryCubicForm{img[0], img[1], img[2], img[3]}));
  }
}

TEST(Act, RightGroupAction) {
  oracle::Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const BinaryCubicForm f = random_form(rng, 10);
    const UnimodularMatrix m = random_matrix(rng, 5), n = random_matrix(rng, 5);
    ASSERT_EQ(act(act(f, m), n), act(f, m * n));
    ASSERT_EQ(act(f, UnimodularMatrix::identity()), f);
  }
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(degenerate(4)), 0);
  EXPECT_EQ(discriminant({1, 0, 0, -1}), -27);
  EXPECT_EQ(oracle::discriminant_by_resultant(1, 0, 0, -1), -27);
  // F_{2,a}: the standard discriminant is -27 a^2.
  for (long a = -6; a <= 6; ++a) {
    const BinaryCubicForm f{0, 3, -3 * a, a * a};
    EXPECT_EQ(discriminant(f), -27 * a * a);
    EXPECT_EQ(discriminant(f), oracle::discriminant_by_resultant(f.a, f.b, f.c, f.d));
  }
}

TEST(Discriminant, AgreesWithResultantOracle) {
  oracle::Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const BinaryCubicForm f = random_form(rng, 50);
    ASSERT_EQ(discriminant(f), oracle::discriminant_by_resultant(f.a, f.b, f.c, f.d));
  }
}

TEST(Discriminant, ContentAndHessianInvariantUnderGL2Z) {
  oracle::Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const BinaryCubicForm f = random_form(rng, 12);
    const UnimodularMatrix m = random_matrix(rng, 10);
    const BinaryCubicForm g = act(f, m);
    ASSERT_EQ(discriminant(g), discriminant(f));
    ASSERT_EQ(content(g), content(f));
    ASSERT_EQ(invariant_profile(g).hessian_content, invariant_profile(f).hessian_content);
  }
}

TEST(IntersectionCubic, Examples) {
  EXPECT_EQ(intersection_cubic(build_ring(BundleSpec(1, {2, 3, -9}))), degenerate(-4));
  EXPECT_EQ(intersection_cubic(build_ring(BundleSpec(2, {0, 0}))), (BinaryCubicForm{0, 3, 0, 0}));
  EXPECT_EQ(f2_intersection_cubic(4), (BinaryCubicForm{0, 3, -12, 16}));
  EXPECT_THROW(intersection_cubic(build_ring(BundleSpec(2, {0, 1, 2}))), DomainError);
  EXPECT_THROW(intersection_cubic(build_ring(BundleSpec(1, {0, 1}))), DomainError);
}

TEST(IntersectionCubic, P1BaseDependsOnlyOnSum) {
  oracle::Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const long a1 = rng.uniform(-10, 10), a2 = rng.uniform(-10, 10), a3 = rng.uniform(-10, 10);
    const long c = rng.uniform(-10, 10);
    const auto f = intersection_cubic(build_ring(BundleSpec(1, {a1, a2, a3})));
    const auto g = intersection_cubic(build_ring(BundleSpec(1, {a1 + c, a2 - c, a3})));
    ASSERT_EQ(f, g);
    ASSERT_EQ(f, degenerate(a1 + a2 + a3));
  }
}

TEST(OrbitLabels, Mod3) {
  const OrbitLabel nonzero = orbit_label(degenerate(1), 3);
  EXPECT_EQ(nonzero.type, "nonzero cube of a linear form");
  EXPECT_EQ(orbit_label(degenerate(2), 3), nonzero);
  EXPECT_EQ(orbit_label(degenerate(-5), 3), nonzero);
  const OrbitLabel zero = orbit_label(degenerate(0), 3);
  EXPECT_EQ(zero.type, "zero form");
  EXPECT_EQ(zero.representative, (std::array<int, 4>{0, 0, 0, 0}));
  EXPECT_FALSE(zero == nonzero);
  EXPECT_EQ(orbit_label({1, 0, 0, -1}, 3).type, "nonzero cube of a linear form");  // x^3 - y^3 = (x - y)^3 mod 3
  EXPECT_EQ(orbit_label({1, 0, 0, 1}, 2).type, "linear times irreducible quadratic");
  EXPECT_EQ(orbit_label({1, 1, 0, 1}, 2).type, "irreducible cubic");
}

TEST(OrbitLabels, InvariantUnderGL2Z) {
  oracle::Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const BinaryCubicForm f = random_form(rng, 9);
    const BinaryCubicForm g = act(f, random_matrix(rng, 6));
    ASSERT_EQ(orbit_label(f, 2), orbit_label(g, 2));
    ASSERT_EQ(orbit_label(f, 3), orbit_label(g, 3));
  }
}

TEST(InvariantProfile, Content) {
  EXPECT_EQ(invariant_profile({0, 0, 6, -2}).content, 2);
  EXPECT_EQ(invariant_profile({0, 0, 0, 0}).content, 0);
}

TEST(Gl2zSearch, Examples) {
  const auto w = gl2z_search(degenerate(2), degenerate(5), 2, false);
  ASSERT_TRUE(w);
  EXPECT_EQ(act(degenerate(2), *w), degenerate(5));
  EXPECT_EQ(*w, M(1, -1, 0, 1));

  const BinaryCubicForm f{2, -1, 5, 3};
  EXPECT_EQ(gl2z_search(f, f, 3, false), UnimodularMatrix::identity());
  EXPECT_EQ(gl2z_search(degenerate(0), degenerate(0), 3, false), UnimodularMatrix::identity());

  for (long h : {1, 3, 6}) EXPECT_FALSE(gl2z_search(degenerate(0), degenerate(1), h, true));
  EXPECT_FALSE(orbit_label(degenerate(0), 3) == orbit_label(degenerate(1), 3));
  EXPECT_THROW(gl2z_search(f, f, 0, false), ArgumentError);
}

TEST(Gl2zSearch, MatchesNaiveEnumeration) {
  oracle::Rng rng(8);
  for (int i = 0; i < 150; ++i) {
    const BinaryCubicForm f = random_form(rng, 4);
    // Mostly pairs in the same orbit so witnesses exist.
    const BinaryCubicForm g = rng.uniform(0, 3) == 0 ? random_form(rng, 4) : act(f, random_matrix(rng, 2));
    const bool sign = rng.coin();
    ASSERT_EQ(gl2z_search(f, g, 2, sign), naive_search(f, g, 2, sign)) << f.to_string() << " " << g.to_string();
  }
}

TEST(Gl2zSearch, WitnessesVerify) {
  oracle::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const BinaryCubicForm f = random_form(rng, 6);
    const BinaryCubicForm g = act(f, random_matrix(rng, 3));
    const auto w = gl2z_search(f, g, 4, false);
    if (w) ASSERT_EQ(act(f, *w), g);
  }
}

TEST(SplitRepeatedFactor, RecoversFactors) {
  oracle::Rng rng(10);
  for (int i = 0; i < 300; ++i) {
    Integer al = rng.uniform(-6, 6), be = rng.uniform(-6, 6);
    if (al == 0 && be == 0) continue;
    const Integer g = gcd(al, be);
    al /= g;
    be /= g;
    const Integer u = rng.uniform(-9, 9), v = rng.uniform(-9, 9);
    if (u == 0 && v == 0) continue;
    const BinaryCubicForm f{al * al * u, 2 * al * be * u + al * al * v, be * be * u + 2 * al * be * v, be * be * v};
    ASSERT_EQ(discriminant(f), 0);
    const auto split = split_repeated_factor(f);
    const auto& [l0, l1] = split.repeated;
    const auto& [m0, m1] = split.residual;
    ASSERT_EQ(f, (BinaryCubicForm{l0 * l0 * m0, 2 * l0 * l1 * m0 + l0 * l0 * m1, l1 * l1 * m0 + 2 * l0 * l1 * m1, l1 * l1 * m1}));
  }
  EXPECT_THROW(split_repeated_factor({1, 0, 0, -1}), PreconditionError);
  EXPECT_THROW(split_repeated_factor({0, 0, 0, 0}), PreconditionError);
}

TEST(DegenerateEquiv, Examples) {
  auto d = degenerate_equiv(degenerate(2), degenerate(5), false);
  EXPECT_EQ(d.verdict, EquivVerdict::equivalent);
  ASSERT_TRUE(d.witness);
  EXPECT_EQ(act(degenerate(2), *d.witness), degenerate(5));

  d = degenerate_equiv(degenerate(4), degenerate(4), false);
  EXPECT_EQ(d.verdict, EquivVerdict::equivalent);
  EXPECT_EQ(d.witness, UnimodularMatrix::identity());

  d = degenerate_equiv(degenerate(0), degenerate(1), true);
  EXPECT_EQ(d.verdict, EquivVerdict::inequivalent);
  ASSERT_TRUE(d.obstruction);
  EXPECT_EQ(d.obstruction->kind, "residual_congruence");
  EXPECT_FALSE(invariant_profile(degenerate(0)).mod3 == invariant_profile(degenerate(1)).mod3);

  EXPECT_THROW(degenerate_equiv({1, 0, 0, -1}, degenerate(1), false), PreconditionError);
}

TEST(DegenerateEquiv, B1VersusB2IsEquivalentUnderBothConventions) {
  // y -> -y relates b and -b; the repeated factor's stabiliser allows it.
  for (bool sign : {false, true}) {
    const auto d = degenerate_equiv(degenerate(1), degenerate(2), sign);
    EXPECT_EQ(d.verdict, EquivVerdict::equivalent);
    EXPECT_EQ(act(degenerate(1), *d.witness), degenerate(2));
  }
}

TEST(DegenerateEquiv, AgreesWithSearchOnFamily) {
  for (long b = -6; b <= 6; ++b)
    for (long b2 = -6; b2 <= 6; ++b2)
      for (bool sign : {false, true}) {
        const auto d = degenerate_equiv(degenerate(b), degenerate(b2), sign);
        const auto w = gl2z_search(degenerate(b), degenerate(b2), 10, sign);
        ASSERT_EQ(d.verdict == EquivVerdict::equivalent, w.has_value()) << b << " " << b2;
        const long rb = ((b % 3) + 3) % 3, rb2 = ((b2 % 3) + 3) % 3;
        ASSERT_EQ(w.has_value(), rb == rb2 || (rb + rb2) % 3 == 0);
      }
}

TEST(DegenerateEquiv, RandomOrbitsAreFound) {
  oracle::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    Integer u = rng.uniform(-9, 9), v = rng.uniform(-9, 9);
    if (u == 0 && v == 0) u = 1;
    const BinaryCubicForm f{0, 0, u, v};
    const BinaryCubicForm g = act(f, random_matrix(rng, 8));
    const auto d = degenerate_equiv(f, g, false);
    ASSERT_EQ(d.verdict, EquivVerdict::equivalent);
    ASSERT_EQ(act(f, *d.witness), g);
  }
}

TEST(DecideEquivalence, InvariantsThenEngines) {
  auto d = decide_equivalence({0, 0, 3, 0}, {0, 0, 6, 0}, 5, false);
  EXPECT_EQ(d.verdict, EquivVerdict::inequivalent);
  EXPECT_EQ(d.obstruction->kind, "content");
  d = decide_equivalence({1, 0, 0, -1}, {1, 0, 0, 1}, 5, false);
  EXPECT_EQ(d.verdict, EquivVerdict::equivalent);
  d = decide_equivalence(f2_intersection_cubic(2), f2_intersection_cubic(4), 10, true);
  EXPECT_EQ(d.verdict, EquivVerdict::inequivalent);
  EXPECT_EQ(d.obstruction->kind, "discriminant");
  EXPECT_EQ(d.convention, Convention::unoriented);
}

TEST(DiscriminantScan, Examples) {
  auto scan = discriminant_scan(1);
  ASSERT_EQ(scan.values.size(), 2u);
  EXPECT_NE(scan.values[0].second, scan.values[1].second);
  EXPECT_TRUE(scan.collisions.empty());
  scan = discriminant_scan(100);
  EXPECT_TRUE(scan.collisions.empty());
  for (const auto& [a, disc] : scan.values) EXPECT_EQ(disc, Integer(-27) * a * a);
  EXPECT_THROW(discriminant_scan(0), ArgumentError);
}
