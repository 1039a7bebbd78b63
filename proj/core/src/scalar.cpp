#include "qcat/scalar.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

namespace qcat {

namespace {

// Move v-powers of the denominator into the numerator and fix the sign.
// Does not cancel common factors.
void normalize_units(LaurentPoly& num, LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den = LaurentPoly(1);
    return;
  }
  if (den.low() != 0) {
    num = num.shifted(-den.low());
    den = den.shifted(-den.low());
  }
  if (den.leading() < 0) {
    num = -num;
    den = -den;
  }
}

}  // namespace

ScalarQ::ScalarQ(const mpq_class& r)
    : num_(mpz_class(r.get_num())), den_(mpz_class(r.get_den())) {}

ScalarQ::ScalarQ(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

ScalarQ ScalarQ::v() { return ScalarQ(LaurentPoly::monomial(1, 1)); }
ScalarQ ScalarQ::q() { return ScalarQ(LaurentPoly::monomial(1, 2)); }
ScalarQ ScalarQ::v_pow(int k) { return ScalarQ(LaurentPoly::monomial(1, k)); }

void ScalarQ::canonicalize() {
  normalize_units(num_, den_);
  if (num_.is_zero() || den_.is_one()) return;
  LaurentPoly g;
  if (den_.is_constant()) {
    mpz_class c = num_.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), den_.leading().get_mpz_t());
    g = LaurentPoly(c);
  } else {
    g = LaurentPoly::gcd(num_, den_);
  }
  if (!g.is_one()) {
    num_ = LaurentPoly::divexact(num_, g);
    den_ = LaurentPoly::divexact(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

ScalarQ ScalarQ::operator-() const {
  ScalarQ r = *this;
  r.num_ = -r.num_;
  return r;
}

ScalarQ& ScalarQ::operator+=(const ScalarQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  // Henrici: with g = gcd(b, d), a/b + c/d = (a d' + c b') / (b' d), and the
  // only possible cancellation is against g.
  const LaurentPoly g = LaurentPoly::gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  const LaurentPoly b1 = LaurentPoly::divexact(den_, g);
  const LaurentPoly d1 = LaurentPoly::divexact(o.den_, g);
  LaurentPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = ScalarQ();
  const LaurentPoly g2 = LaurentPoly::gcd(n, g);
  if (g2.is_one()) {
    num_ = std::move(n);
    den_ = b1 * o.den_;
  } else {
    num_ = LaurentPoly::divexact(n, g2);
    den_ = b1 * LaurentPoly::divexact(o.den_, g2);
  }
  normalize_units(num_, den_);
  return *this;
}

ScalarQ& ScalarQ::operator-=(const ScalarQ& o) { return *this += -o; }

ScalarQ& ScalarQ::operator*=(const ScalarQ& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = ScalarQ();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one()) {
    const LaurentPoly g = LaurentPoly::gcd(a, d);
    if (!g.is_one()) {
      a = LaurentPoly::divexact(a, g);
      d = LaurentPoly::divexact(d, g);
    }
  }
  if (!b.is_one()) {
    const LaurentPoly g = LaurentPoly::gcd(c, b);
    if (!g.is_one()) {
      c = LaurentPoly::divexact(c, g);
      b = LaurentPoly::divexact(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  normalize_units(num_, den_);
  return *this;
}

ScalarQ ScalarQ::inverse() const {
  if (is_zero()) throw DivisionByZero();
  ScalarQ r;
  r.num_ = den_;
  r.den_ = num_;
  normalize_units(r.num_, r.den_);
  return r;
}

ScalarQ& ScalarQ::operator/=(const ScalarQ& o) { return *this *= o.inverse(); }

ScalarQ ScalarQ::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  ScalarQ result(1), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const ScalarQ& s) { return os << s.to_string(); }

ScalarQ qint(int n) {
  if (n == 0) return ScalarQ();
  if (n < 0) return -qint(-n);
  // q^{n-1} + q^{n-3} + ... + q^{1-n}, in powers of v.
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(4 * (n - 1) + 1), mpz_class(0));
  for (int k = 0; k < n; ++k) coeffs[static_cast<std::size_t>(4 * k)] = 1;
  return ScalarQ(LaurentPoly::from_coeffs(-2 * (n - 1), std::move(coeffs)));
}

ScalarQ qfact(int n) {
  if (n < 0) throw DomainError("qfact: negative argument " + std::to_string(n));
  ScalarQ r(1);
  for (int k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

QComplex eval_at(const ScalarQ& s, double t) {
  const QComplex vv = std::polar(1.0, std::numbers::pi * t / 2.0);
  const QComplex den = s.denominator().evaluate(vv);
  if (std::abs(den) < 1e-12)
    throw EvaluationSingularity("eval_at: denominator of " + s.to_string() +
                                " vanishes at t = " + std::to_string(t));
  return s.numerator().evaluate(vv) / den;
}

}  // namespace qcat
