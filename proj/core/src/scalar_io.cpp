#include <cctype>
#include <sstream>

#include "qcat/scalar.hpp"

namespace qcat {

namespace {

std::string power_of_q(int v_exponent) {
  if (v_exponent % 2 != 0) return "q^(" + std::to_string(v_exponent) + "/2)";
  const int e = v_exponent / 2;
  if (e == 1) return "q";
  if (e < 0) return "q^(" + std::to_string(e) + ")";
  return "q^" + std::to_string(e);
}

// Descending powers of q; "0" for the zero polynomial.
std::string format_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.high(); e >= p.low(); --e) {
    const mpz_class c = p.coeff(e);
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << power_of_q(e);
    }
  }
  return os.str();
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  ScalarQ parse() {
    ScalarQ value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse scalar \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  int small_int() {
    const mpz_class z = integer();
    if (!z.fits_sint_p()) fail("exponent out of range");
    return static_cast<int>(z.get_si());
  }

  ScalarQ expr() {
    ScalarQ acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  ScalarQ term() {
    ScalarQ acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        ScalarQ d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  ScalarQ unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  // Exponent after '^': an integer, or a parenthesized signed integer or
  // signed half-integer. Returned in halves.
  int exponent_in_halves() {
    if (accept('(')) {
      const bool neg = accept('-');
      if (!neg) accept('+');
      int n = small_int();
      int den = 1;
      if (accept('/')) den = small_int();
      expect(')');
      if (den != 1 && den != 2) fail("only integer and half-integer exponents are supported");
      if (neg) n = -n;
      return den == 1 ? 2 * n : n;
    }
    bool neg = accept('-');
    const int n = small_int();
    return 2 * (neg ? -n : n);
  }

  ScalarQ power() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == 'q') {
      ++pos_;
      if (!accept('^')) return ScalarQ::q();
      return ScalarQ::v_pow(exponent_in_halves());
    }
    ScalarQ base;
    if (accept('(')) {
      base = expr();
      expect(')');
    } else {
      base = ScalarQ(integer());
    }
    if (!accept('^')) return base;
    const int halves = exponent_in_halves();
    if (halves % 2 != 0) fail("half-integer power of a general expression");
    if (halves < 0 && base.is_zero()) fail("negative power of zero");
    return base.pow(halves / 2);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string ScalarQ::to_string() const {
  if (den_.is_one()) return format_poly(num_);
  std::string n = format_poly(num_);
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = format_poly(den_);
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

ScalarQ ScalarQ::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace qcat
