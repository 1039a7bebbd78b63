#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qcat {

/// Laurent polynomial in one variable with arbitrary-precision integer
/// coefficients. Stored as a dense coefficient vector starting at the lowest
/// nonzero exponent; the zero polynomial has no coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(const mpz_class& constant);
  explicit LaurentPoly(long constant) : LaurentPoly(mpz_class(constant)) {}

  /// c * x^exponent
  static LaurentPoly monomial(const mpz_class& c, int exponent);
  /// coefficients[k] multiplies x^(low + k)
  static LaurentPoly from_coeffs(int low, std::vector<mpz_class> coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return coeffs_.size() <= 1 && (coeffs_.empty() || low_ == 0); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  std::size_t term_count() const;

  /// Lowest / highest exponent with nonzero coefficient. Undefined on zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// high() - low()
  int span() const { return static_cast<int>(coeffs_.size()) - 1; }

  mpz_class coeff(int exponent) const;
  const mpz_class& leading() const { return coeffs_.back(); }
  const mpz_class& trailing() const { return coeffs_.front(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const mpz_class& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpz_class& c) { return a *= c; }

  /// Multiply by x^k.
  LaurentPoly shifted(int k) const;

  /// gcd of the integer coefficients, nonnegative; 0 for the zero polynomial.
  mpz_class content() const;
  /// Divide every coefficient by c, which must divide all of them.
  LaurentPoly divexact(const mpz_class& c) const;
  /// Exact quotient a / b where b divides a in Z[x, 1/x]. Throws
  /// std::logic_error if the division leaves a remainder.
  static LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);

  /// Greatest common divisor in Z[x, 1/x], normalized to lowest exponent 0 and
  /// positive leading coefficient. gcd(0, 0) = 0.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  std::complex<double> evaluate(std::complex<double> x) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  std::size_t hash() const;

private:
  void trim();

  int low_ = 0;
  std::vector<mpz_class> coeffs_;
};

}  // namespace qcat
