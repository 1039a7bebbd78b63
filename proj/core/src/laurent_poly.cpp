#include "qcat/laurent_poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace qcat {

namespace {

using Coeffs = std::vector<mpz_class>;

void trim_high(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class coeffs_content(const Coeffs& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_content(Coeffs& p, const mpz_class& c) {
  if (c == 1) return;
  for (auto& a : p) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
}

Coeffs primitive_part(Coeffs p) {
  divide_content(p, coeffs_content(p));
  if (!p.empty() && p.back() < 0)
    for (auto& a : p) a = -a;
  return p;
}

// Pseudo-remainder of a by b (ordinary polynomials, deg a >= deg b >= 0).
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  mpz_class t;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) {
      t = la * b[k];
      a[k + shift] -= t;
    }
    trim_high(a);
    // Keep intermediate coefficients small.
    divide_content(a, coeffs_content(a));
  }
  return a;
}

// Remainder modulo a word-sized prime; used for a cheap coprimality test.
using ModPoly = std::vector<std::uint64_t>;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<unsigned __int128>(r) * b % m;
    b = static_cast<unsigned __int128>(b) * b % m;
    e >>= 1;
  }
  return r;
}

ModPoly reduce_mod(const Coeffs& p, std::uint64_t m) {
  ModPoly out(p.size());
  mpz_class r;
  for (std::size_t k = 0; k < p.size(); ++k) {
    mpz_fdiv_r_ui(r.get_mpz_t(), p[k].get_mpz_t(), m);
    out[k] = r.get_ui();
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Degree of gcd over GF(m); -1 when both are zero.
int mod_gcd_degree(ModPoly a, ModPoly b, std::uint64_t m) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = pow_mod(b.back(), m - 2, m);
    while (a.size() >= b.size()) {
      const std::uint64_t f = static_cast<unsigned __int128>(a.back()) * inv % m;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) {
        const std::uint64_t sub = static_cast<unsigned __int128>(f) * b[k] % m;
        a[k + shift] = (a[k + shift] + m - sub) % m;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

Coeffs poly_gcd(const Coeffs& a, const Coeffs& b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  mpz_class ca = coeffs_content(a), cb = coeffs_content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Coeffs pa = a, pb = b;
  divide_content(pa, ca);
  divide_content(pb, cb);
  if (pa.size() == 1 || pb.size() == 1) return Coeffs{cg};

  // If the reductions modulo a large prime keep both degrees and are coprime,
  // the integer gcd is a constant.
  constexpr std::uint64_t kPrime = 4611686018427387847ULL;  // 2^62 - 57
  {
    ModPoly ma = reduce_mod(pa, kPrime), mb = reduce_mod(pb, kPrime);
    if (ma.size() == pa.size() && mb.size() == pb.size() && mod_gcd_degree(ma, mb, kPrime) == 0)
      return Coeffs{cg};
  }

  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    Coeffs r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    pb = primitive_part(std::move(r));
    if (pb.size() == 1) return Coeffs{cg};
  }
  Coeffs g = primitive_part(std::move(pa));
  for (auto& c : g) c *= cg;
  return g;
}

}  // namespace

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int exponent) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<mpz_class> coefficients) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coefficients);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  trim_high(coeffs_);
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

bool LaurentPoly::is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; }));
}

mpz_class LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(high(), other.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[static_cast<std::size_t>(other.low_ - low_) + k] += other.coeffs_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

mpz_class LaurentPoly::content() const { return coeffs_content(coeffs_); }

LaurentPoly LaurentPoly::divexact(const mpz_class& c) const {
  LaurentPoly r = *this;
  divide_content(r.coeffs_, c);
  return r;
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::logic_error("LaurentPoly::divexact: division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    LaurentPoly r = a.divexact(b.coeffs_[0]);
    r.low_ -= b.low_;
    return r;
  }
  Coeffs rem = a.coeffs_;
  const Coeffs& d = b.coeffs_;
  if (rem.size() < d.size()) throw std::logic_error("LaurentPoly::divexact: inexact division");
  Coeffs quot(rem.size() - d.size() + 1);
  mpz_class q, r;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpz_class& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
    if (r != 0) throw std::logic_error("LaurentPoly::divexact: inexact division");
    quot[k] = q;
    for (std::size_t j = 0; j < d.size(); ++j)
      mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), d[j].get_mpz_t());
  }
  for (const auto& c : rem)
    if (c != 0) throw std::logic_error("LaurentPoly::divexact: inexact division");
  return from_coeffs(a.low_ - b.low_, std::move(quot));
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  Coeffs g = poly_gcd(a.coeffs_, b.coeffs_);
  return from_coeffs(0, std::move(g));
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> x) const {
  if (is_zero()) return {0.0, 0.0};
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k].get_d();
  return acc * std::pow(x, low_);
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = std::hash<int>{}(low_);
  for (const auto& c : coeffs_) {
    const std::size_t hc = std::hash<long>{}(mpz_fdiv_ui(c.get_mpz_t(), 1000000007UL)) ^
                           (static_cast<std::size_t>(mpz_sgn(c.get_mpz_t())) << 1);
    h ^= hc + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace qcat
