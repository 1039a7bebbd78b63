#include "qcat/virasoro.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "qcat/fusion.hpp"

namespace qcat {

namespace {

// GMP arithmetic expects canonical operands; mpq_class(n, d) is not reduced.
mpq_class ratio(long n, long d) {
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

mpq_class central_charge(const mpq_class& t) {
  if (sgn(t) == 0) throw DomainError("central_charge: t must be nonzero");
  mpq_class c = 13 - 6 * (t + 1 / t);
  c.canonicalize();
  return c;
}

double central_charge(double t) {
  if (t == 0.0) throw DomainError("central_charge: t must be nonzero");
  return 13.0 - 6.0 * (t + 1.0 / t);
}

mpq_class h_weight(int ell, const mpq_class& t) {
  if (ell < 0) throw DomainError("h_weight: negative label");
  return ratio(ell * (ell + 2), 4) * t - ratio(ell, 2);
}

double h_weight(int ell, double t) {
  if (ell < 0) throw DomainError("h_weight: negative label");
  return ell * (ell + 2) * t / 4.0 - ell / 2.0;
}

int fusion_dim(int ell1, int ell2, int ell3) { return in_sel(ell3, ell1, ell2) ? 1 : 0; }

namespace {

// log|Gamma(x)| accumulated with its sign; rejects arguments near a pole.
void accumulate_gamma(double x, int power, double& log_abs, int& sign) {
  if (x <= 0.0 && std::abs(x - std::round(x)) < 1e-9)
    throw EvaluationSingularity("b_const: Gamma argument " + std::to_string(x) + " is at a pole");
  int s = 1;
  const double lg = lgamma_r(x, &s);
  log_abs += power * lg;
  if (s < 0) sign = -sign;
}

}  // namespace

double b_const(int ell1, int ell2, int ell3, double t) {
  if (!in_sel(ell3, ell1, ell2)) throw DomainError("b_const: channel not in Sel");
  const int s = (ell1 + ell2 - ell3) / 2;
  double log_abs = -std::lgamma(s + 1.0);
  int sign = 1;
  for (int j = 1; j <= s; ++j) {
    accumulate_gamma(1.0 + t * j, 1, log_abs, sign);
    accumulate_gamma(1.0 - t * (ell1 + 1 - j), 1, log_abs, sign);
    accumulate_gamma(1.0 - t * (ell2 + 1 - j), 1, log_abs, sign);
    accumulate_gamma(1.0 + t, -1, log_abs, sign);
    accumulate_gamma(2.0 - t * (2 - j + ell1 + ell2 - s), -1, log_abs, sign);
  }
  return sign * std::exp(log_abs);
}

QComplex braid_phase(int ell, int ell1, int ell2, double t) {
  if (!in_sel(ell, ell1, ell2)) throw DomainError("braid_phase: channel not in Sel");
  const double exponent = h_weight(ell, t) - h_weight(ell1, t) - h_weight(ell2, t);
  return std::polar(1.0, std::numbers::pi * exponent);
}

QComplex twist_phase(int ell, double t) {
  return std::polar(1.0, 2.0 * std::numbers::pi * h_weight(ell, t));
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  if (n < 0) return out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace {

// Vectors of M(c, h) in the PBW basis L_{-m1} L_{-m2} ... v, m1 >= m2 >= ... >= 1.
using Word = std::vector<int>;
using State = std::map<Word, mpq_class>;

class VermaModule {
public:
  VermaModule(mpq_class c, mpq_class h) : c_(std::move(c)), h_(std::move(h)) {}

  /// L_k applied to a basis word, expressed in the PBW basis.
  const State& act(int k, const Word& word) {
    const auto key = std::make_pair(k, word);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    State result = compute(k, word);
    return memo_.emplace(key, std::move(result)).first->second;
  }

  State act(int k, const State& state) {
    State out;
    for (const auto& [w, coeff] : state) add(out, act(k, w), coeff);
    return out;
  }

private:
  static void add(State& into, const State& from, const mpq_class& scale) {
    for (const auto& [w, coeff] : from) {
      mpq_class& slot = into[w];
      slot += coeff * scale;
      if (sgn(slot) == 0) into.erase(w);
    }
  }

  State compute(int k, const Word& word) {
    if (k == 0) {
      int level = 0;
      for (int m : word) level += m;
      mpq_class eigen = h_ + level;
      if (sgn(eigen) == 0) return {};
      return {{word, eigen}};
    }
    if (word.empty()) {
      if (k > 0) return {};
      return {{Word{-k}, mpq_class(1)}};
    }
    const int m1 = word.front();
    if (k < 0 && -k >= m1) {
      Word w{-k};
      w.insert(w.end(), word.begin(), word.end());
      return {{std::move(w), mpq_class(1)}};
    }
    const Word rest(word.begin() + 1, word.end());
    // L_k L_{-m} R = L_{-m} (L_k R) + [L_k, L_{-m}] R,
    // [L_k, L_{-m}] = (k + m) L_{k-m} + delta_{k,m} c (k^3 - k)/12.
    State out;
    const State inner = act(k, rest);
    for (const auto& [w, coeff] : inner) add(out, act(-m1, w), coeff);
    if (k + m1 != 0) add(out, act(k - m1, rest), mpq_class(k + m1));
    if (k == m1) {
      const mpq_class central = c_ * ratio(k * k * k - k, 12);
      if (sgn(central) != 0) add(out, State{{rest, mpq_class(1)}}, central);
    }
    return out;
  }

  mpq_class c_;
  mpq_class h_;
  std::map<std::pair<int, Word>, State> memo_;
};

}  // namespace

RationalMatrix shapovalov_gram(const mpq_class& c, const mpq_class& h, int level, int level_cap) {
  if (level < 0) throw DomainError("shapovalov_gram: negative level");
  if (level > level_cap)
    throw LevelCapExceeded("shapovalov_gram: level " + std::to_string(level) + " exceeds cap " +
                           std::to_string(level_cap));
  const auto basis = partitions(level);
  VermaModule verma(c, h);
  RationalMatrix gram(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      // <L_{-lambda} v, L_{-mu} v> = coefficient of v in L_{lambda_k} ... L_{lambda_1} L_{-mu} v.
      State state{{basis[j], mpq_class(1)}};
      for (int part : basis[i]) state = verma.act(part, state);
      auto it = state.find(Word{});
      gram(i, j) = it == state.end() ? mpq_class(0) : it->second;
    }
  }
  return gram;
}

KacCheck kac_first_row_check(int ell, const mpq_class& t, int level_cap) {
  if (ell < 0) throw DomainError("kac_first_row_check: negative label");
  if (ell + 1 > level_cap)
    throw LevelCapExceeded("kac_first_row_check: level " + std::to_string(ell + 1) +
                           " exceeds cap " + std::to_string(level_cap));
  const mpq_class c = central_charge(t);
  const mpq_class h = h_weight(ell, t);
  KacCheck result;
  result.ell = ell;
  result.t = t;
  result.level = ell + 1;
  for (int n = 1; n <= ell; ++n)
    result.lower_levels.push_back({n, sgn(determinant(shapovalov_gram(c, h, n, level_cap))) == 0});
  result.det_zero = sgn(determinant(shapovalov_gram(c, h, ell + 1, level_cap))) == 0;
  return result;
}

}  // namespace qcat
