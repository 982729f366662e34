#include "a1scroll/poly.hpp"

#include <algorithm>
#include <vector>

namespace a1scroll {

IntPoly::IntPoly(long constant) : IntPoly(Integer(constant)) {}

IntPoly::IntPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

IntPoly IntPoly::term(const Integer& coeff, unsigned xi_exp, unsigned tau_exp) {
  IntPoly p;
  p.add_term(coeff, Monomial{xi_exp, tau_exp});
  return p;
}

Integer IntPoly::coeff(unsigned xi_exp, unsigned tau_exp) const {
  auto it = terms_.find(Monomial{xi_exp, tau_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

void IntPoly::add_term(const Integer& c, const Monomial& mono) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::optional<unsigned> IntPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

bool IntPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return kv.first.degree() == d; });
}

IntPoly IntPoly::component(unsigned d) const {
  IntPoly out;
  for (const auto& [mono, c] : terms_)
    if (mono.degree() == d) out.terms_.emplace(mono, c);
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(c, mono);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(-c, mono);
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ca * cb, Monomial{ma.xi + mb.xi, ma.tau + mb.tau});
  return out;
}

IntPoly pow(const IntPoly& base, unsigned e) {
  IntPoly result(1);
  IntPoly sq = base;
  while (e != 0) {
    if (e & 1u) result *= sq;
    e >>= 1;
    if (e != 0) sq *= sq;
  }
  return result;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  auto factor = [&s](const char* var, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (e > 1) s += "^" + std::to_string(e);
  };
  factor("x", m.xi);
  factor("t", m.tau);
  return s;
}

}  // namespace

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Integer>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    if (l.first.tau != r.first.tau) return l.first.tau > r.first.tau;
    return l.first.xi > r.first.xi;
  });
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : ordered) {
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mtext = monomial_text(mono);
    if (mtext.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mtext;
    } else {
      out += mag.get_str() + "*" + mtext;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

}  // namespace a1scroll
