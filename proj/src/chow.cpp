#include "a1scroll/chow.hpp"

#include <algorithm>

#include "a1scroll/errors.hpp"

namespace a1scroll {

BundleSpec::BundleSpec(int base_dim, std::vector<Integer> twist_list) : m(base_dim), twists(std::move(twist_list)) {
  if (m < 1) throw ArgumentError("base dimension must be >= 1, got " + std::to_string(m));
  if (twists.size() < 2) throw ArgumentError("bundle rank must be >= 2, got " + std::to_string(twists.size()));
}

Integer elementary_symmetric(std::span<const Integer> values, int i) {
  const int r = static_cast<int>(values.size());
  if (i < 0 || i > r)
    throw ArgumentError("elementary symmetric index " + std::to_string(i) + " outside [0, " + std::to_string(r) + "]");
  // e[k] after processing a prefix; the usual prod (1 + a_j t) recurrence.
  std::vector<Integer> e(static_cast<std::size_t>(i) + 1, Integer(0));
  e[0] = 1;
  for (const Integer& a : values)
    for (int k = i; k >= 1; --k) e[k] += a * e[k - 1];
  return e[i];
}

IntPoly chern_polynomial(const BundleSpec& spec) {
  const int r = spec.rank();
  IntPoly p;
  for (int i = 0; i <= r; ++i) p.add_term(elementary_symmetric(spec.twists, i), Monomial{unsigned(i), unsigned(r - i)});
  return p;
}

ChowRing::ChowRing(int m, std::vector<Integer> chern) : m_(m), chern_(std::move(chern)) {
  if (m_ < 1) throw ArgumentError("base dimension must be >= 1");
  if (chern_.size() < 3 || chern_[0] != 1) throw ArgumentError("chern list must be 1, c_1, ..., c_r with r >= 2");
}

ChowRing build_ring(const BundleSpec& spec) {
  std::vector<Integer> chern;
  chern.reserve(spec.twists.size() + 1);
  for (int i = 0; i <= spec.rank(); ++i) chern.push_back(elementary_symmetric(spec.twists, i));
  return ChowRing(spec.m, std::move(chern));
}

IntPoly ChowRing::tau_relation() const {
  const int r = rank();
  IntPoly p;
  for (int i = 0; i <= std::min(r, m_); ++i) p.add_term(chern_[i], Monomial{unsigned(i), unsigned(r - i)});
  return p;
}

IntPoly ChowRing::normal_form(const IntPoly& p) const {
  const unsigned r = unsigned(rank());
  const unsigned m = unsigned(m_);
  IntPoly::Terms work;
  for (const auto& [mono, c] : p.terms())
    if (mono.xi <= m) work.emplace(mono, c);

  IntPoly out;
  // Drain the highest tau power first; every rewrite lowers tau by at least one.
  while (!work.empty()) {
    auto top = std::max_element(work.begin(), work.end(),
                                [](const auto& a, const auto& b) { return a.first.tau < b.first.tau; });
    const unsigned top_tau = top->first.tau;
    if (top_tau < r) break;
    std::vector<std::pair<Monomial, Integer>> batch;
    for (auto it = work.begin(); it != work.end();) {
      if (it->first.tau == top_tau) {
        batch.emplace_back(it->first, it->second);
        it = work.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& [mono, c] : batch) {
      for (unsigned i = 1; i <= r; ++i) {
        const unsigned xi = mono.xi + i;
        if (xi > m || chern_[i] == 0) continue;
        const Monomial target{xi, mono.tau - i};
        Integer delta = -c * chern_[i];
        auto [it, inserted] = work.try_emplace(target, delta);
        if (!inserted) {
          it->second += delta;
          if (it->second == 0) work.erase(it);
        }
      }
    }
  }
  for (const auto& [mono, c] : work) out.add_term(c, mono);
  return out;
}

IntPoly ChowRing::multiply(const IntPoly& p, const IntPoly& q) const { return normal_form(p * q); }

Integer ChowRing::degree(const IntPoly& p) const {
  const IntPoly nf = normal_form(p);
  const unsigned top = unsigned(top_degree());
  for (const auto& [mono, c] : nf.terms())
    if (mono.degree() != top)
      throw DegreeError("degree: element has a nonzero component in degree " + std::to_string(mono.degree()) +
                        ", expected only degree " + std::to_string(top));
  return nf.coeff(unsigned(m_), unsigned(rank() - 1));
}

Integer ChowRing::integrate(const IntPoly& p) const {
  return normal_form(p.component(unsigned(top_degree()))).coeff(unsigned(m_), unsigned(rank() - 1));
}

int ChowRing::graded_rank(int d) const {
  if (d < 0) throw ArgumentError("graded_rank: degree must be >= 0");
  int count = 0;
  for (int i = 0; i <= m_; ++i) {
    const int j = d - i;
    if (j >= 0 && j <= rank() - 1) ++count;
  }
  return count;
}

std::string ChowRing::presentation() const {
  return "Z[x,t]/<" + IntPoly::xi(unsigned(m_ + 1)).to_string() + ", " + tau_relation().to_string() + ">";
}

}  // namespace a1scroll
