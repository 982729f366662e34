#include "a1scroll/forms.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "a1scroll/errors.hpp"

namespace a1scroll {

std::string BinaryCubicForm::to_string() const {
  return "[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str() + "]";
}

UnimodularMatrix::UnimodularMatrix(Integer p, Integer q, Integer r, Integer s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
  const Integer dt = det();
  if (dt != 1 && dt != -1) throw ArgumentError("matrix " + to_string() + " has determinant " + dt.get_str() + ", not +-1");
}

UnimodularMatrix UnimodularMatrix::inverse() const {
  const Integer dt = det();
  // For det = +-1 the adjugate divided by det is the inverse.
  return {s_ * dt, -q_ * dt, -r_ * dt, p_ * dt};
}

UnimodularMatrix operator*(const UnimodularMatrix& l, const UnimodularMatrix& r) {
  return {l.p_ * r.p_ + l.q_ * r.r_, l.p_ * r.q_ + l.q_ * r.s_, l.r_ * r.p_ + l.s_ * r.r_, l.r_ * r.q_ + l.s_ * r.s_};
}

std::string UnimodularMatrix::to_string() const {
  return "[[" + p_.get_str() + "," + q_.get_str() + "],[" + r_.get_str() + "," + s_.get_str() + "]]";
}

namespace {

// Binary forms as coefficient arrays in descending powers of x.
template <std::size_t N, std::size_t K>
std::array<Integer, N + K - 1> mul(const std::array<Integer, N>& u, const std::array<Integer, K>& v) {
  std::array<Integer, N + K - 1> out;
  for (auto& c : out) c = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < K; ++j) out[i + j] += u[i] * v[j];
  return out;
}

}  // namespace

BinaryCubicForm act(const BinaryCubicForm& f, const UnimodularMatrix& m) {
  const std::array<Integer, 2> u{m.p(), m.q()};
  const std::array<Integer, 2> v{m.r(), m.s()};
  const auto uu = mul(u, u);
  const auto vv = mul(v, v);
  const auto uuu = mul(uu, u);
  const auto uuv = mul(uu, v);
  const auto uvv = mul(u, vv);
  const auto vvv = mul(vv, v);
  std::array<Integer, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = f.a * uuu[k] + f.b * uuv[k] + f.c * uvv[k] + f.d * vvv[k];
  return {out[0], out[1], out[2], out[3]};
}

Integer discriminant(const BinaryCubicForm& f) {
  const auto& [a, b, c, d] = f;
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

std::array<Integer, 3> hessian(const BinaryCubicForm& f) {
  const auto& [a, b, c, d] = f;
  return {b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d};
}

Integer content(const BinaryCubicForm& f) { return gcd(gcd(f.a, f.b), gcd(f.c, f.d)); }

BinaryCubicForm intersection_cubic(const ChowRing& ring) {
  const int m = ring.base_dim();
  const int r = ring.rank();
  if (ring.top_degree() != 3 || !((m == 1 && r == 3) || (m == 2 && r == 2)))
    throw DomainError("intersection cubic needs a 3-fold of Picard rank 2, got (m, r) = (" + std::to_string(m) + ", " +
                      std::to_string(r) + ")");
  return {ring.degree(IntPoly::xi(3)), 3 * ring.degree(IntPoly::term(1, 2, 1)), 3 * ring.degree(IntPoly::term(1, 1, 2)),
          ring.degree(IntPoly::tau(3))};
}

// ---------------------------------------------------------------------------
// Orbits mod p

namespace {

using SmallForm = std::array<int, 4>;

SmallForm reduce(const BinaryCubicForm& f, int p) {
  return {int(mod_floor(f.a, long(p))), int(mod_floor(f.b, long(p))), int(mod_floor(f.c, long(p))),
          int(mod_floor(f.d, long(p)))};
}

int md(long v, int p) { return int(((v % p) + p) % p); }

SmallForm act_small(const SmallForm& f, int p, int q, int r, int s, int mod) {
  const long u0 = p, u1 = q, v0 = r, v1 = s;
  // (u0 x + u1 y)^i (v0 x + v1 y)^(3-i), expanded by hand.
  const std::array<std::array<long, 4>, 4> basis{{
      {u0 * u0 * u0, 3 * u0 * u0 * u1, 3 * u0 * u1 * u1, u1 * u1 * u1},
      {u0 * u0 * v0, u0 * u0 * v1 + 2 * u0 * u1 * v0, 2 * u0 * u1 * v1 + u1 * u1 * v0, u1 * u1 * v1},
      {u0 * v0 * v0, u1 * v0 * v0 + 2 * u0 * v0 * v1, u0 * v1 * v1 + 2 * u1 * v0 * v1, u1 * v1 * v1},
      {v0 * v0 * v0, 3 * v0 * v0 * v1, 3 * v0 * v1 * v1, v1 * v1 * v1},
  }};
  SmallForm out{};
  for (int k = 0; k < 4; ++k) {
    long acc = 0;
    for (int i = 0; i < 4; ++i) acc += long(f[i]) * basis[i][k];
    out[k] = md(acc, mod);
  }
  return out;
}

long eval_small(const SmallForm& f, long x, long y) { return f[0] * x * x * x + f[1] * x * x * y + f[2] * x * y * y + f[3] * y * y * y; }

std::string factorisation_type(const SmallForm& f, int p) {
  if (f == SmallForm{0, 0, 0, 0}) return "zero form";
  // Linear forms alpha x + beta y up to scalars, one per point of P^1(F_p).
  std::vector<std::pair<int, int>> lines{{0, 1}};
  for (int alpha = 0; alpha < p; ++alpha) lines.emplace_back(1, alpha);
  for (int lambda = 1; lambda < p; ++lambda)
    for (auto [al, be] : lines) {
      const SmallForm cube = act_small({lambda, 0, 0, 0}, al, be, 0, 1, p);
      if (cube == f) return "nonzero cube of a linear form";
    }
  int roots = 0;
  // Zeros on P^1: [1:t] and [0:1].
  if (md(eval_small(f, 0, 1), p) == 0) ++roots;
  for (int t = 0; t < p; ++t)
    if (md(eval_small(f, 1, t), p) == 0) ++roots;
  switch (roots) {
    case 3: return "three distinct linear factors";
    case 2: return "square of a linear form times another";
    case 1: return "linear times irreducible quadratic";
    default: return "irreducible cubic";
  }
}

}  // namespace

std::string OrbitLabel::to_string() const {
  std::ostringstream os;
  os << "mod" << modulus << ":[" << representative[0] << "," << representative[1] << "," << representative[2] << ","
     << representative[3] << "] " << type;
  return os.str();
}

OrbitLabel orbit_label(const BinaryCubicForm& f, int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) throw ArgumentError("orbit_label supports p in {2, 3, 5, 7}");
  const SmallForm base = reduce(f, p);
  SmallForm best = base;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (md(long(a) * d - long(b) * c, p) == 0) continue;
          best = std::min(best, act_small(base, a, b, c, d, p));
        }
  return OrbitLabel{p, best, factorisation_type(base, p)};
}

InvariantProfile invariant_profile(const BinaryCubicForm& f) {
  const auto h = hessian(f);
  return {content(f), discriminant(f), orbit_label(f, 2), orbit_label(f, 3), gcd(gcd(h[0], h[1]), h[2])};
}

std::optional<std::pair<std::string, std::string>> invariant_mismatch(const BinaryCubicForm& f, const BinaryCubicForm& g,
                                                                      bool allow_sign) {
  const InvariantProfile pf = invariant_profile(f);
  std::vector<InvariantProfile> targets{invariant_profile(g)};
  if (allow_sign) targets.push_back(invariant_profile(-g));

  auto differs_from_all = [&targets](auto getter) {
    return std::all_of(targets.begin(), targets.end(), getter);
  };
  const InvariantProfile& pg = targets.front();
  if (differs_from_all([&](const InvariantProfile& t) { return t.content != pf.content; }))
    return std::pair{std::string("content"), pf.content.get_str() + " vs " + pg.content.get_str()};
  if (differs_from_all([&](const InvariantProfile& t) { return t.discriminant != pf.discriminant; }))
    return std::pair{std::string("discriminant"), pf.discriminant.get_str() + " vs " + pg.discriminant.get_str()};
  if (differs_from_all([&](const InvariantProfile& t) { return t.hessian_content != pf.hessian_content; }))
    return std::pair{std::string("hessian_content"), pf.hessian_content.get_str() + " vs " + pg.hessian_content.get_str()};
  if (differs_from_all([&](const InvariantProfile& t) { return !(t.mod2 == pf.mod2); }))
    return std::pair{std::string("mod2_orbit"), pf.mod2.to_string() + " vs " + pg.mod2.to_string()};
  if (differs_from_all([&](const InvariantProfile& t) { return !(t.mod3 == pf.mod3); }))
    return std::pair{std::string("mod3_orbit"), pf.mod3.to_string() + " vs " + pg.mod3.to_string()};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bounded search

namespace {

long zigzag(long v) { return v == 0 ? 0 : (v > 0 ? 2 * v - 1 : -2 * v); }

}  // namespace

std::array<long, 5> witness_order_key(const UnimodularMatrix& m) {
  const long p = m.p().get_si(), q = m.q().get_si(), r = m.r().get_si(), s = m.s().get_si();
  const long maxabs = std::max({std::labs(p), std::labs(q), std::labs(r), std::labs(s)});
  return {maxabs, zigzag(p - 1), zigzag(q), zigzag(r), zigzag(s - 1)};
}

std::optional<UnimodularMatrix> gl2z_search(const BinaryCubicForm& f, const BinaryCubicForm& g, long height,
                                            bool allow_sign) {
  if (height < 1) throw ArgumentError("gl2z_search: height must be >= 1");
  std::vector<BinaryCubicForm> targets{g};
  if (allow_sign && !g.is_zero()) targets.push_back(-g);

  std::optional<UnimodularMatrix> best;
  std::array<long, 5> best_key{};
  for (const BinaryCubicForm& target : targets) {
    // The first column (p, r) fixes the x^3 coefficient f(p, r); the second
    // column (q, s) fixes the y^3 coefficient f(q, s).
    std::vector<std::pair<long, long>> first, second;
    for (long x = -height; x <= height; ++x)
      for (long y = -height; y <= height; ++y) {
        const Integer v = f(x, y);
        if (v == target.a) first.emplace_back(x, y);
        if (v == target.d) second.emplace_back(x, y);
      }
    for (auto [p, r] : first)
      for (auto [q, s] : second) {
        const long dt = p * s - q * r;
        if (dt != 1 && dt != -1) continue;
        UnimodularMatrix m(p, q, r, s);
        const auto key = witness_order_key(m);
        if (best && key >= best_key) continue;
        if (act(f, m) != target) continue;
        best = m;
        best_key = key;
      }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Degenerate family L^2 M

const char* to_string(Convention c) { return c == Convention::oriented ? "oriented" : "unoriented"; }

const char* to_string(EquivVerdict v) {
  switch (v) {
    case EquivVerdict::equivalent: return "equivalent";
    case EquivVerdict::inequivalent: return "inequivalent";
    default: return "unknown";
  }
}

namespace {

std::array<Integer, 2> primitive(Integer x, Integer y) {
  const Integer g = gcd(x, y);
  x /= g;
  y /= g;
  if (x < 0 || (x == 0 && y < 0)) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

// Unimodular P with L(P v) = y, where L = alpha x + beta y is primitive.
UnimodularMatrix straighten(const std::array<Integer, 2>& line) {
  const Integer& alpha = line[0];
  const Integer& beta = line[1];
  Integer g, u, w;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
  // alpha*u + beta*w = 1, so (alpha, beta) [[beta, u], [-alpha, w]] = (0, 1).
  return {beta, u, -alpha, w};
}

}  // namespace

RepeatedFactorSplit split_repeated_factor(const BinaryCubicForm& f) {
  if (f.is_zero()) throw PreconditionError("zero form has no repeated-factor split");
  if (discriminant(f) != 0)
    throw PreconditionError("form " + f.to_string() + " has nonzero discriminant; use gl2z_search");
  const auto h = hessian(f);
  std::array<Integer, 2> line;
  if (h[0] != 0 || h[1] != 0 || h[2] != 0) {
    // H = k L^2 when f = L^2 M with M not proportional to L.
    line = h[0] != 0 ? primitive(2 * h[0], h[1]) : primitive(Integer(0), Integer(1));
  } else {
    // f = k L^3.
    line = f.a != 0 ? primitive(3 * f.a, f.b) : primitive(Integer(0), Integer(1));
  }
  const Integer& al = line[0];
  const Integer& be = line[1];
  Integer u, v;
  if (al != 0) {
    u = f.a / (al * al);
    v = (f.b - 2 * al * be * u) / (al * al);
  } else {
    v = f.d;  // beta = 1
    u = f.c;
  }
  // Verify L^2 (u x + v y) == f exactly.
  const BinaryCubicForm check{al * al * u, 2 * al * be * u + al * al * v, be * be * u + 2 * al * be * v, be * be * v};
  if (check != f) throw PreconditionError("form " + f.to_string() + " does not split as L^2 M over Z");
  return {line, {u, v}};
}

EquivDecision degenerate_equiv(const BinaryCubicForm& f, const BinaryCubicForm& g, bool allow_sign) {
  const auto sf = split_repeated_factor(f);
  const auto sg = split_repeated_factor(g);
  const UnimodularMatrix pf = straighten(sf.repeated);
  const UnimodularMatrix pg = straighten(sg.repeated);
  // After straightening, f' = y^2 (u x + v y) and likewise g'.
  const BinaryCubicForm fs = act(f, pf);
  const BinaryCubicForm gs = act(g, pg);
  const Integer& uf = fs.c;
  const Integer& vf = fs.d;
  const Integer& ug = gs.c;
  const Integer& vg = gs.d;

  EquivDecision out;
  out.convention = allow_sign ? Convention::unoriented : Convention::oriented;

  // Stabiliser of the line y up to sign: [[p, q], [0, s]], p, s = +-1, which
  // sends y^2 (u x + v y) to y^2 (u p x + (u q + v s) y).
  std::vector<int> signs{1};
  if (allow_sign) signs.push_back(-1);
  for (int eps : signs) {
    for (int s : {1, -1}) {
      const Integer tu = eps * ug;
      const Integer tv = eps * vg;
      Integer p, q;
      if (uf == 0) {
        if (tu != 0 || vf * s != tv) continue;
        p = 1;
        q = 0;
      } else {
        if (tu != uf && tu != -uf) continue;
        p = tu / uf;
        const Integer num = tv - vf * s;
        if (mod_floor(num, abs(uf)) != 0) continue;
        q = num / uf;
      }
      const UnimodularMatrix stab(p, q, 0, s);
      UnimodularMatrix witness = pf * stab * pg.inverse();
      const BinaryCubicForm target = eps == 1 ? g : -g;
      if (act(f, witness) != target) throw std::logic_error("degenerate_equiv: witness failed verification");
      out.verdict = EquivVerdict::equivalent;
      out.witness = std::move(witness);
      return out;
    }
  }

  out.verdict = EquivVerdict::inequivalent;
  if (abs(uf) != abs(ug)) {
    out.obstruction = Obstruction{"residual_resultant", "|Res(L, M)| differs: " + Integer(abs(uf)).get_str() + " vs " +
                                                            Integer(abs(ug)).get_str()};
  } else if (uf == 0) {
    out.obstruction = Obstruction{"cube_coefficient", "cube coefficients " + vf.get_str() + " and " + vg.get_str() +
                                                          " are not related by a unit"};
  } else {
    out.obstruction = Obstruction{"residual_congruence",
                                  vg.get_str() + " is not congruent to +-" + vf.get_str() + " mod " + Integer(abs(uf)).get_str()};
  }
  return out;
}

EquivDecision decide_equivalence(const BinaryCubicForm& f, const BinaryCubicForm& g, long height, bool allow_sign) {
  EquivDecision out;
  out.convention = allow_sign ? Convention::unoriented : Convention::oriented;
  if (auto mismatch = invariant_mismatch(f, g, allow_sign)) {
    out.verdict = EquivVerdict::inequivalent;
    out.obstruction = Obstruction{mismatch->first, mismatch->second};
    return out;
  }
  if (f.is_zero()) {
    // content matched, so g is zero too
    out.verdict = EquivVerdict::equivalent;
    out.witness = UnimodularMatrix::identity();
    return out;
  }
  if (discriminant(f) == 0) return degenerate_equiv(f, g, allow_sign);
  if (auto w = gl2z_search(f, g, height, allow_sign)) {
    out.verdict = EquivVerdict::equivalent;
    out.witness = std::move(w);
  }
  return out;
}

BinaryCubicForm f2_intersection_cubic(const Integer& a) {
  return intersection_cubic(build_ring(BundleSpec(2, {Integer(0), a})));
}

DiscriminantScan discriminant_scan(long bound) {
  if (bound < 1) throw ArgumentError("discriminant_scan: bound must be >= 1");
  DiscriminantScan scan;
  scan.bound = bound;
  for (long a = 0; a <= bound; ++a) scan.values.emplace_back(a, discriminant(f2_intersection_cubic(a)));
  for (std::size_t i = 0; i < scan.values.size(); ++i)
    for (std::size_t j = i + 1; j < scan.values.size(); ++j)
      if (scan.values[i].second == scan.values[j].second) scan.collisions.emplace_back(scan.values[i].first, scan.values[j].first);
  return scan;
}

}  // namespace a1scroll
