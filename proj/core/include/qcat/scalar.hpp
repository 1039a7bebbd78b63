#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qcat/errors.hpp"
#include "qcat/laurent_poly.hpp"

namespace qcat {

/// Numeric value of a scalar after specializing q = e^{i pi t}.
using QComplex = std::complex<double>;

/// Exact element of Q(v), v = q^{1/2}.
///
/// Canonical form: numerator and denominator are coprime in Z[v, 1/v], the
/// denominator has lowest exponent 0 and positive leading coefficient. Two
/// scalars are equal iff their canonical forms agree coefficient-wise.
class ScalarQ {
public:
  ScalarQ() = default;
  ScalarQ(long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  explicit ScalarQ(const mpz_class& n) : num_(n) {}
  explicit ScalarQ(const mpq_class& r);
  explicit ScalarQ(LaurentPoly p) : num_(std::move(p)) {}
  /// num / den, reduced to canonical form. Throws DivisionByZero if den == 0.
  ScalarQ(LaurentPoly num, LaurentPoly den);

  /// The variable v = q^{1/2}.
  static ScalarQ v();
  /// q = v^2.
  static ScalarQ q();
  /// q^{k/2} = v^k.
  static ScalarQ v_pow(int k);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// Denominator is 1.
  bool is_laurent() const { return den_.is_one(); }

  ScalarQ operator-() const;
  ScalarQ& operator+=(const ScalarQ& o);
  ScalarQ& operator-=(const ScalarQ& o);
  ScalarQ& operator*=(const ScalarQ& o);
  ScalarQ& operator/=(const ScalarQ& o);
  friend ScalarQ operator+(ScalarQ a, const ScalarQ& b) { return a += b; }
  friend ScalarQ operator-(ScalarQ a, const ScalarQ& b) { return a -= b; }
  friend ScalarQ operator*(ScalarQ a, const ScalarQ& b) { return a *= b; }
  friend ScalarQ operator/(ScalarQ a, const ScalarQ& b) { return a /= b; }

  ScalarQ inverse() const;
  /// Integer power; negative k requires a nonzero base.
  ScalarQ pow(int k) const;

  friend bool operator==(const ScalarQ& a, const ScalarQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

  /// Canonical text, v rendered as q^(1/2): e.g. "(-q^3 + q)/(q^2 - 1)".
  std::string to_string() const;
  /// Parses expressions over q with + - * / ^ and parentheses, where q may be
  /// raised to half-integer powers, e.g. "q^(1/2)", "(q + 1)/2", "-q^(-3/2)".
  /// Throws ParseError.
  static ScalarQ parse(std::string_view text);

private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_{1};
};

std::ostream& operator<<(std::ostream& os, const ScalarQ& s);

inline ScalarQ pow(const ScalarQ& s, int k) { return s.pow(k); }

/// Quantum integer [n] = (q^n - q^{-n}) / (q - q^{-1}).
ScalarQ qint(int n);
/// [n]! = [n][n-1]...[1], [0]! = 1. Throws DomainError for n < 0.
ScalarQ qfact(int n);

/// Numerical value at v = e^{i pi t / 2}, i.e. q = e^{i pi t}. Throws
/// EvaluationSingularity if the denominator has magnitude below 1e-12 there.
QComplex eval_at(const ScalarQ& s, double t);

}  // namespace qcat

template <>
struct std::hash<qcat::ScalarQ> {
  std::size_t operator()(const qcat::ScalarQ& s) const noexcept { return s.hash(); }
};
