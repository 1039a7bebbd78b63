#include "qcat/braid.hpp"

#include <array>
#include <sstream>

#include "qcat/parallel.hpp"

namespace qcat {

namespace {

// q^{n(n-1)/2} (q - q^-1)^n / [n]!
ScalarQ rmatrix_coeff(int n) {
  const ScalarQ q = ScalarQ::q();
  return ScalarQ::v_pow(n * (n - 1)) * (q - q.inverse()).pow(n) / qfact(n);
}

std::string labels_text(std::initializer_list<int> labels) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int l : labels) {
    os << (first ? "" : ",") << l;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

LinMap rmatrix(const TensorWord& left, const TensorWord& right) {
  const TensorWord word = left.concat(right);
  const QMatrix f = tensor_generator_matrix(Generator::F, left, CoproductSide::Delta);
  const QMatrix e = tensor_generator_matrix(Generator::E, right, CoproductSide::Delta);

  QMatrix sum(word.dim(), word.dim());
  QMatrix fn = QMatrix::identity(left.dim());
  QMatrix en = QMatrix::identity(right.dim());
  for (int n = 0; !fn.is_zero() && !en.is_zero(); ++n) {
    sum += kron(fn, en) * rmatrix_coeff(n);
    fn = f * fn;
    en = e * en;
  }
  // Cartan factor q^{mn/2} = v^{mn} on a vector of weights (m, n).
  for (std::size_t r = 0; r < word.dim(); ++r) {
    const int m = left.weight(r / right.dim());
    const int n = right.weight(r % right.dim());
    if (m * n == 0) continue;
    const ScalarQ factor = ScalarQ::v_pow(m * n);
    for (std::size_t c = 0; c < word.dim(); ++c)
      if (!sum(r, c).is_zero()) sum(r, c) *= factor;
  }
  return LinMap(word, word, std::move(sum));
}

LinMap braiding(const TensorWord& left, const TensorWord& right) {
  std::vector<std::size_t> perm(left.size() + right.size());
  for (std::size_t k = 0; k < left.size(); ++k) perm[k] = right.size() + k;
  for (std::size_t k = 0; k < right.size(); ++k) perm[left.size() + k] = k;
  return LinMap::permutation(left.concat(right), perm) * rmatrix(left, right);
}

ScalarQ braiding_eigenvalue_closed_form(int ell, int ell1, int ell2) {
  if (!in_sel(ell, ell1, ell2)) throw DomainError("braiding_eigenvalue: channel not in Sel");
  const int s = (ell1 + ell2 - ell) / 2;
  const ScalarQ lambda = ScalarQ::v_pow(ell1 * ell2 - 2 * s * (ell1 + ell2) + 2 * s * s - 2 * s);
  return s % 2 == 0 ? lambda : -lambda;
}

ScalarQ braiding_eigenvalue_matrix(int ell, int ell1, int ell2) {
  if (!in_sel(ell, ell1, ell2)) throw DomainError("braiding_eigenvalue: channel not in Sel");
  const LinMap composite = cg_projection(ell, ell2, ell1, CoproductSide::Delta) *
                           braiding(ell1, ell2) * cg_embedding(ell, ell1, ell2, CoproductSide::Delta);
  auto lambda = composite.as_scalar();
  if (!lambda)
    throw ConsistencyError("braiding restricted to channel " + std::to_string(ell) + " of " +
                           labels_text({ell1, ell2}) + " is not scalar");
  return *lambda;
}

ScalarQ braiding_eigenvalue(int ell, int ell1, int ell2) {
  const ScalarQ by_matrix = braiding_eigenvalue_matrix(ell, ell1, ell2);
  const ScalarQ closed = braiding_eigenvalue_closed_form(ell, ell1, ell2);
  if (!(by_matrix == closed))
    throw ConsistencyError("braiding eigenvalue mismatch on channel " + std::to_string(ell) +
                           " of " + labels_text({ell1, ell2}) + ": matrix " +
                           by_matrix.to_string() + " vs closed form " + closed.to_string());
  return by_matrix;
}

BraidData braid_data(int ell1, int ell2) {
  BraidData data{ell1, ell2, rmatrix(ell1, ell2), {}, {}};
  data.braiding = LinMap::flip(ell1, ell2) * data.rmatrix;
  for (int l : sel(ell1, ell2).members) data.eigenvalues.emplace(l, braiding_eigenvalue(l, ell1, ell2));
  return data;
}

LinMap twist_inverse_action(const TensorWord& word) {
  constexpr auto side = CoproductSide::Delta;
  const QMatrix e = tensor_generator_matrix(Generator::E, word, side);
  const QMatrix f = tensor_generator_matrix(Generator::F, word, side);
  const QMatrix kinv = tensor_generator_matrix(Generator::Kinv, word, side);
  const QMatrix lowering = (kinv * e) * ScalarQ(-1);  // -K^-1 E

  QMatrix gaussian(word.dim(), word.dim());  // q^{-H^2/2}
  for (std::size_t i = 0; i < word.dim(); ++i) {
    const int w = word.weight(i);
    gaussian(i, i) = ScalarQ::v_pow(-w * w);
  }

  QMatrix sum(word.dim(), word.dim());
  QMatrix fn = QMatrix::identity(word.dim());
  QMatrix ln = QMatrix::identity(word.dim());
  for (int n = 0; !fn.is_zero(); ++n) {
    sum += (ln * gaussian * fn) * rmatrix_coeff(n);
    fn = f * fn;
    ln = lowering * ln;
  }
  // (-1)^H K on the output weight.
  for (std::size_t r = 0; r < word.dim(); ++r) {
    const int w = word.weight(r);
    ScalarQ factor = ScalarQ::v_pow(2 * w);
    if (w % 2 != 0) factor = -factor;
    for (std::size_t c = 0; c < word.dim(); ++c)
      if (!sum(r, c).is_zero()) sum(r, c) *= factor;
  }
  return LinMap(word, word, std::move(sum));
}

ScalarQ twist_closed_form(int ell) {
  if (ell < 0) throw DomainError("twist: negative label");
  const ScalarQ t = ScalarQ::v_pow(ell * (ell + 2));
  return ell % 2 == 0 ? t : -t;
}

ScalarQ twist(int ell) {
  if (ell < 0) throw DomainError("twist: negative label");
  auto inv = twist_inverse_action(TensorWord{ell}).as_scalar();
  if (!inv) throw ConsistencyError("twist: theta^-1 is not scalar on V_" + std::to_string(ell));
  const ScalarQ theta = inv->inverse();
  if (!(theta == twist_closed_form(ell)))
    throw ConsistencyError("twist on V_" + std::to_string(ell) + " is " + theta.to_string() +
                           ", expected " + twist_closed_form(ell).to_string());
  return theta;
}

CheckReport hexagon_check(int ell1, int ell2, int ell3) {
  CheckReport report{"hexagon", {ell1, ell2, ell3}, true, {}};
  const TensorWord word{ell1, ell2, ell3};
  const std::string tag = labels_text({ell1, ell2, ell3});

  const LinMap id1 = LinMap::identity(TensorWord{ell1});
  const LinMap id3 = LinMap::identity(TensorWord{ell3});
  const LinMap r12 = rmatrix(ell1, ell2).tensor(id3);
  const LinMap r23 = id1.tensor(rmatrix(ell2, ell3));
  // R13 = sigma (R_{l1 l3} (x) id_{l2}) sigma^-1 with sigma swapping slots 2, 3.
  const LinMap to_132 = LinMap::permutation(word, {0, 2, 1});
  const LinMap from_132 = LinMap::permutation(to_132.codomain(), {0, 2, 1});
  const LinMap r13 = from_132 * rmatrix(ell1, ell3).tensor(LinMap::identity(TensorWord{ell2})) * to_132;

  if (!(rmatrix(TensorWord{ell1, ell2}, TensorWord{ell3}) == r13 * r23))
    report.fail(tag + " (Delta x id)(R) != R13 R23");
  if (!(rmatrix(TensorWord{ell1}, TensorWord{ell2, ell3}) == r13 * r12))
    report.fail(tag + " (id x Delta)(R) != R13 R12");
  if (!(r12 * r13 * r23 == r23 * r13 * r12)) report.fail(tag + " Yang-Baxter");
  return report;
}

CheckReport hexagon_sweep(int lmax) {
  std::vector<std::array<int, 3>> tuples;
  for (int a = 0; a <= lmax; ++a)
    for (int b = 0; b <= lmax; ++b)
      for (int c = 0; c <= lmax; ++c) tuples.push_back({a, b, c});
  std::vector<CheckReport> parts(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t i) {
    parts[i] = hexagon_check(tuples[i][0], tuples[i][1], tuples[i][2]);
  });
  CheckReport report{"hexagon", {lmax}, true, {}};
  for (const auto& p : parts) report.absorb(p);
  return report;
}

CheckReport ribbon_check(int ell1, int ell2) {
  CheckReport report{"ribbon", {ell1, ell2}, true, {}};
  const std::string tag = labels_text({ell1, ell2});
  const ScalarQ t1 = twist(ell1), t2 = twist(ell2);

  const TensorWord word{ell1, ell2};
  const LinMap double_braid = braiding(ell2, ell1) * braiding(ell1, ell2);
  const LinMap balanced = twist_inverse_action(word) * ((t1 * t2) * double_braid);
  if (!(balanced == LinMap::identity(word))) report.fail(tag + " theta_{UV} != (theta_U x theta_V) c c");

  for (int l : sel(ell1, ell2).members) {
    const ScalarQ rhs = t1 * t2 * braiding_eigenvalue(l, ell2, ell1) * braiding_eigenvalue(l, ell1, ell2);
    if (!(twist(l) == rhs)) report.fail(tag + " channel " + std::to_string(l));
  }
  return report;
}

CheckReport ribbon_sweep(int lmax) {
  std::vector<std::array<int, 2>> pairs;
  for (int a = 0; a <= lmax; ++a)
    for (int b = 0; b <= lmax; ++b) pairs.push_back({a, b});
  std::vector<CheckReport> parts(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) { parts[i] = ribbon_check(pairs[i][0], pairs[i][1]); });
  CheckReport report{"ribbon", {lmax}, true, {}};
  for (const auto& p : parts) report.absorb(p);
  return report;
}

}  // namespace qcat
