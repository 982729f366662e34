#include "a1scroll/group_expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "a1scroll/errors.hpp"

namespace a1scroll {

std::string TwistDescriptor::to_string() const {
  switch (kind) {
    case Kind::trivial: return "trivial";
    case Kind::parity: return "parity:" + std::to_string(value);
    default: return "residue:" + std::to_string(modulus) + ":" + std::to_string(value);
  }
}

std::strong_ordering operator<=>(const GroupExpr& l, const GroupExpr& r) {
  if (auto c = l.kind <=> r.kind; c != 0) return c;
  if (auto c = l.n <=> r.n; c != 0) return c;
  if (auto c = l.space <=> r.space; c != 0) return c;
  if (auto c = l.index <=> r.index; c != 0) return c;
  if (auto c = l.twist <=> r.twist; c != 0) return c;
  if (auto c = l.factor_set <=> r.factor_set; c != 0) return c;
  const std::size_t n = std::min(l.children.size(), r.children.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = l.children[i] <=> r.children[i]; c != 0) return c;
  return l.children.size() <=> r.children.size();
}

namespace group {

namespace {
GroupExpr atom(GroupKind k, long n = 0) {
  GroupExpr e;
  e.kind = k;
  e.n = n;
  return e;
}
}  // namespace

GroupExpr trivial() { return atom(GroupKind::trivial); }
GroupExpr gm() { return atom(GroupKind::gm); }
GroupExpr f1() { return atom(GroupKind::f1); }
GroupExpr zmod(long n) { return atom(GroupKind::zmod, n); }
GroupExpr km(long n) { return atom(GroupKind::km, n); }
GroupExpr kmw(long n) { return atom(GroupKind::kmw, n); }
GroupExpr h1et_mu(long n) { return atom(GroupKind::h1et_mu, n); }

GroupExpr opaque(std::string space, long index) {
  GroupExpr e = atom(GroupKind::opaque);
  e.space = std::move(space);
  e.index = index;
  return e;
}

GroupExpr product(std::vector<GroupExpr> factors) {
  GroupExpr e = atom(GroupKind::product);
  e.children = std::move(factors);
  return e;
}

GroupExpr split_ext(GroupExpr kernel, GroupExpr quotient, TwistDescriptor twist) {
  GroupExpr e = atom(GroupKind::split_ext);
  e.children = {std::move(kernel), std::move(quotient)};
  e.twist = twist;
  return e;
}

GroupExpr central_ext(GroupExpr kernel, GroupExpr quotient, std::string factor_set) {
  GroupExpr e = atom(GroupKind::central_ext);
  e.children = {std::move(kernel), std::move(quotient)};
  e.factor_set = std::move(factor_set);
  return e;
}

}  // namespace group

GroupExpr f1_structure() { return group::central_ext(group::kmw(2), group::gm(), "symbol"); }

std::string GroupExpr::to_string() const {
  switch (kind) {
    case GroupKind::trivial: return "(Trivial)";
    case GroupKind::f1: return "(F1)";
    case GroupKind::gm: return "(Gm)";
    case GroupKind::zmod: return "(Zmod " + std::to_string(n) + ")";
    case GroupKind::km: return "(KM " + std::to_string(n) + ")";
    case GroupKind::kmw: return "(KMW " + std::to_string(n) + ")";
    case GroupKind::h1et_mu: return "(H1etMu " + std::to_string(n) + ")";
    case GroupKind::opaque: return "(Opaque " + space + " " + std::to_string(index) + ")";
    case GroupKind::product: {
      std::string out = "(x";
      for (const auto& c : children) out += " " + c.to_string();
      return out + ")";
    }
    case GroupKind::split_ext:
      return "(rtimes " + children[0].to_string() + " " + children[1].to_string() + " " + twist.to_string() + ")";
    case GroupKind::central_ext:
      return "(cext " + children[0].to_string() + " " + children[1].to_string() + " " + factor_set + ")";
  }
  return {};
}

namespace {

TwistDescriptor canonical_twist(const TwistDescriptor& t) {
  if (t.is_trivial()) return TwistDescriptor::none();
  if (t.kind == TwistDescriptor::Kind::residue && t.modulus == 2) return TwistDescriptor::parity(t.value);
  return t;
}

}  // namespace

GroupExpr normalize_expr(const GroupExpr& e) {
  switch (e.kind) {
    case GroupKind::zmod:
      return e.n == 1 ? group::trivial() : e;
    case GroupKind::product: {
      std::vector<GroupExpr> flat;
      for (const auto& c : e.children) {
        GroupExpr nc = normalize_expr(c);
        if (nc.kind == GroupKind::trivial) continue;
        if (nc.kind == GroupKind::product) {
          for (auto& g : nc.children) flat.push_back(std::move(g));
        } else {
          flat.push_back(std::move(nc));
        }
      }
      if (flat.empty()) return group::trivial();
      if (flat.size() == 1) return std::move(flat.front());
      std::sort(flat.begin(), flat.end());
      return group::product(std::move(flat));
    }
    case GroupKind::split_ext: {
      GroupExpr kernel = normalize_expr(e.children[0]);
      GroupExpr quotient = normalize_expr(e.children[1]);
      const TwistDescriptor twist = canonical_twist(e.twist);
      if (twist.is_trivial() || kernel.kind == GroupKind::trivial || quotient.kind == GroupKind::trivial)
        return normalize_expr(group::product({std::move(kernel), std::move(quotient)}));
      return group::split_ext(std::move(kernel), std::move(quotient), twist);
    }
    case GroupKind::central_ext: {
      GroupExpr kernel = normalize_expr(e.children[0]);
      GroupExpr quotient = normalize_expr(e.children[1]);
      if (kernel.kind == GroupKind::trivial) return quotient;
      if (quotient.kind == GroupKind::trivial) return kernel;
      GroupExpr out = group::central_ext(std::move(kernel), std::move(quotient), e.factor_set);
      if (out == f1_structure()) return group::f1();
      return out;
    }
    default:
      return e;
  }
}

bool isomorphic(const GroupExpr& e1, const GroupExpr& e2) { return normalize_expr(e1) == normalize_expr(e2); }

// ---------------------------------------------------------------------------
// S-expression reader

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, std::string(text_), pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string token() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected a token");
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer(std::string_view tok, std::size_t at) const {
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError("expected an integer", std::string(text_), at);
    return v;
  }

  long integer() {
    skip_ws();
    const std::size_t at = pos_;
    return integer(token(), at);
  }

  TwistDescriptor twist() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string tok = token();
    if (tok == "trivial") return TwistDescriptor::none();
    if (tok.rfind("parity:", 0) == 0) {
      TwistDescriptor t;
      t.kind = TwistDescriptor::Kind::parity;
      t.modulus = 2;
      t.value = integer(std::string_view(tok).substr(7), at + 7);
      if (t.value < 0 || t.value > 1) throw ParseError("parity must be 0 or 1", std::string(text_), at + 7);
      return t;
    }
    if (tok.rfind("residue:", 0) == 0) {
      const std::string_view rest = std::string_view(tok).substr(8);
      const std::size_t colon = rest.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected residue:n:v", std::string(text_), at);
      TwistDescriptor t;
      t.kind = TwistDescriptor::Kind::residue;
      t.modulus = integer(rest.substr(0, colon), at + 8);
      t.value = integer(rest.substr(colon + 1), at + 9 + colon);
      if (t.modulus < 1 || t.value < 0 || t.value >= t.modulus)
        throw ParseError("residue value out of range", std::string(text_), at);
      return t;
    }
    throw ParseError("unknown twist '" + tok + "'", std::string(text_), at);
  }

  GroupExpr expr() {
    expect('(');
    skip_ws();
    const std::size_t at = pos_;
    const std::string head = token();
    GroupExpr e;
    if (head == "Trivial") {
      e = group::trivial();
    } else if (head == "Gm") {
      e = group::gm();
    } else if (head == "F1") {
      e = group::f1();
    } else if (head == "Zmod") {
      e = group::zmod(integer());
    } else if (head == "KM") {
      e = group::km(integer());
    } else if (head == "KMW") {
      e = group::kmw(integer());
    } else if (head == "H1etMu") {
      e = group::h1et_mu(integer());
    } else if (head == "Opaque") {
      std::string space = token();
      e = group::opaque(std::move(space), integer());
    } else if (head == "x") {
      std::vector<GroupExpr> factors;
      while (!peek(')')) factors.push_back(expr());
      e = group::product(std::move(factors));
    } else if (head == "rtimes") {
      GroupExpr k = expr();
      GroupExpr q = expr();
      e = group::split_ext(std::move(k), std::move(q), twist());
    } else if (head == "cext") {
      GroupExpr k = expr();
      GroupExpr q = expr();
      e = group::central_ext(std::move(k), std::move(q), token());
    } else {
      throw ParseError("unknown group constructor '" + head + "'", std::string(text_), at);
    }
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return Reader(text).parse(); }

}  // namespace a1scroll
