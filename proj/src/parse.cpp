#include "a1scroll/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "a1scroll/errors.hpp"

namespace a1scroll {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, std::string(text_), at); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::size_t pos() {
    skip_ws();
    return pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "' but found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer", start);
    std::string tok(text_.substr(start, pos_ - start));
    if (tok[0] == '+') tok.erase(0, 1);
    return Integer(tok);
  }

  long small_integer(const char* what) {
    const std::size_t at = pos();
    const Integer v = integer();
    if (!v.fits_slong_p() || abs(v) > 1000000000) fail(std::string(what) + " out of range", at);
    return v.get_si();
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ScrollSpec parse_scroll(std::string_view text) {
  Cursor cur(text);
  cur.expect('F');
  cur.expect('(');
  const std::size_t m_at = cur.pos();
  const long m = cur.small_integer("base dimension");
  if (m < 1) cur.fail("base dimension must be >= 1", m_at);
  cur.expect(';');
  const std::size_t twists_at = cur.pos();
  std::vector<Integer> twists{cur.integer()};
  while (cur.accept(',')) twists.push_back(cur.integer());
  cur.expect(')');
  cur.finish();
  if (twists.size() < 2) cur.fail("a scroll needs at least two twists", twists_at);
  return ScrollSpec(int(m), std::move(twists));
}

BinaryCubicForm parse_form(std::string_view text) {
  Cursor cur(text);
  cur.expect('[');
  Integer c[4];
  for (int i = 0; i < 4; ++i) {
    if (i != 0) cur.expect(',');
    c[i] = cur.integer();
  }
  cur.expect(']');
  cur.finish();
  return {c[0], c[1], c[2], c[3]};
}

UnimodularMatrix parse_matrix(std::string_view text) {
  Cursor cur(text);
  const std::size_t start = cur.pos();
  cur.expect('[');
  Integer e[4];
  for (int row = 0; row < 2; ++row) {
    if (row != 0) cur.expect(',');
    cur.expect('[');
    e[2 * row] = cur.integer();
    cur.expect(',');
    e[2 * row + 1] = cur.integer();
    cur.expect(']');
  }
  cur.expect(']');
  cur.finish();
  const Integer det = e[0] * e[3] - e[1] * e[2];
  if (det != 1 && det != -1) cur.fail("matrix determinant is " + det.get_str() + ", not +-1", start);
  return {e[0], e[1], e[2], e[3]};
}

LensSpace parse_lens(std::string_view text) {
  Cursor cur(text);
  cur.expect('L');
  cur.expect('(');
  const std::size_t p_at = cur.pos();
  const long p = cur.small_integer("p");
  cur.expect(',');
  const std::size_t q_at = cur.pos();
  const long q = cur.small_integer("q");
  cur.expect(')');
  cur.finish();
  if (p == 2 || !is_prime(p)) cur.fail("p must be an odd prime", p_at);
  if (q % p == 0) cur.fail("q must be coprime to p", q_at);
  return LensSpace(p, q);
}

}  // namespace a1scroll
