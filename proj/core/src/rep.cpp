#include "qcat/rep.hpp"

#include <numeric>

namespace qcat {

namespace {

// [i][ell - i + 1]: coefficient of e_{i-1} in E e_i.
ScalarQ raising_coeff(int ell, int i) { return qint(i) * qint(ell - i + 1); }

void check_index(Irrep rep, int i) {
  if (rep.ell < 0) throw DomainError("negative irrep label " + std::to_string(rep.ell));
  if (i < 0 || i > rep.ell)
    throw DomainError("basis index " + std::to_string(i) + " out of range for V_" +
                      std::to_string(rep.ell));
}

// Calls emit(flat_out, coeff) for every nonzero term of gen applied to the
// basis vector with index `flat`.
template <typename Emit>
void coproduct_terms(Generator gen, const TensorWord& word, CoproductSide side, std::size_t flat,
                     Emit&& emit) {
  const std::vector<int> idx = word.multi_index(flat);
  const std::size_t k = word.size();
  std::vector<int> weights(k);
  for (std::size_t j = 0; j < k; ++j) weights[j] = word.label(j) - 2 * idx[j];
  const int total = std::accumulate(weights.begin(), weights.end(), 0);

  switch (gen) {
    case Generator::K:
      emit(flat, ScalarQ::v_pow(2 * total));
      return;
    case Generator::Kinv:
      emit(flat, ScalarQ::v_pow(-2 * total));
      return;
    case Generator::E:
    case Generator::F:
      break;
  }

  // Weight of the factors strictly left of position j.
  int left = 0;
  std::size_t stride = word.dim();
  for (std::size_t j = 0; j < k; ++j) {
    const int ell = word.label(j);
    stride /= static_cast<std::size_t>(ell + 1);
    const int right = total - left - weights[j];
    if (gen == Generator::E) {
      if (idx[j] > 0) {
        // Delta(E) = E (x) 1 + K (x) E: K's on the left of the acting slot.
        // Delta^op(E) = 1 (x) E + E (x) K: K's on the right.
        const int kexp = side == CoproductSide::Delta ? left : right;
        emit(flat - stride, raising_coeff(ell, idx[j]) * ScalarQ::v_pow(2 * kexp));
      }
    } else {
      if (idx[j] < ell) {
        // Delta(F) = F (x) K^-1 + 1 (x) F: K^-1's on the right.
        // Delta^op(F) = K^-1 (x) F + F (x) 1: K^-1's on the left.
        const int kexp = side == CoproductSide::Delta ? right : left;
        emit(flat + stride, ScalarQ::v_pow(-2 * kexp));
      }
    }
    left += weights[j];
  }
}

}  // namespace

std::string to_string(Generator g) {
  switch (g) {
    case Generator::K: return "K";
    case Generator::Kinv: return "Kinv";
    case Generator::E: return "E";
    case Generator::F: return "F";
  }
  return "?";
}

std::string to_string(CoproductSide side) {
  return side == CoproductSide::Delta ? "delta" : "delta_op";
}

std::vector<ScalarQ> act_generator(Generator gen, Irrep rep, int i) {
  check_index(rep, i);
  std::vector<ScalarQ> out(rep.dim());
  const auto at = static_cast<std::size_t>(i);
  switch (gen) {
    case Generator::K: out[at] = ScalarQ::v_pow(2 * rep.weight(i)); break;
    case Generator::Kinv: out[at] = ScalarQ::v_pow(-2 * rep.weight(i)); break;
    case Generator::E:
      if (i > 0) out[at - 1] = raising_coeff(rep.ell, i);
      break;
    case Generator::F:
      if (i < rep.ell) out[at + 1] = ScalarQ(1);
      break;
  }
  return out;
}

QMatrix generator_matrix(Generator gen, Irrep rep) {
  QMatrix m(rep.dim(), rep.dim());
  for (int i = 0; i <= rep.ell; ++i) m.set_column(static_cast<std::size_t>(i), act_generator(gen, rep, i));
  return m;
}

std::vector<ScalarQ> act_tensor(Generator gen, const TensorWord& word, CoproductSide side,
                                const std::vector<ScalarQ>& x) {
  if (x.size() != word.dim())
    throw DomainError("act_tensor: vector of length " + std::to_string(x.size()) +
                      " does not match word " + word.to_string());
  std::vector<ScalarQ> y(word.dim());
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c].is_zero()) continue;
    coproduct_terms(gen, word, side, c,
                    [&](std::size_t r, const ScalarQ& coeff) { y[r] += coeff * x[c]; });
  }
  return y;
}

QMatrix tensor_generator_matrix(Generator gen, const TensorWord& word, CoproductSide side) {
  QMatrix m(word.dim(), word.dim());
  for (std::size_t c = 0; c < word.dim(); ++c)
    coproduct_terms(gen, word, side, c,
                    [&](std::size_t r, const ScalarQ& coeff) { m(r, c) += coeff; });
  return m;
}

namespace {

std::vector<RelationCheck> check_relations(const QMatrix& k, const QMatrix& kinv,
                                           const QMatrix& e, const QMatrix& f) {
  const auto id = QMatrix::identity(k.rows());
  const ScalarQ q = ScalarQ::q();
  const ScalarQ q2 = q * q;
  const ScalarQ qm2 = q2.inverse();
  const ScalarQ denom = (q - q.inverse()).inverse();
  return {
      {"K Kinv = 1", k * kinv == id},
      {"Kinv K = 1", kinv * k == id},
      {"K E = q^2 E K", k * e == (e * k) * q2},
      {"K F = q^-2 F K", k * f == (f * k) * qm2},
      {"E F - F E = (K - Kinv)/(q - q^-1)", e * f - f * e == (k - kinv) * denom},
  };
}

}  // namespace

std::vector<RelationCheck> verify_relations(Irrep rep) {
  return check_relations(generator_matrix(Generator::K, rep), generator_matrix(Generator::Kinv, rep),
                         generator_matrix(Generator::E, rep), generator_matrix(Generator::F, rep));
}

std::vector<RelationCheck> verify_relations(const TensorWord& word, CoproductSide side) {
  return check_relations(tensor_generator_matrix(Generator::K, word, side),
                         tensor_generator_matrix(Generator::Kinv, word, side),
                         tensor_generator_matrix(Generator::E, word, side),
                         tensor_generator_matrix(Generator::F, word, side));
}

std::map<int, std::vector<std::vector<ScalarQ>>, std::greater<>> highest_weight_vectors(
    const TensorWord& word, CoproductSide side) {
  std::map<int, std::vector<std::size_t>, std::greater<>> by_weight;
  for (std::size_t c = 0; c < word.dim(); ++c) by_weight[word.weight(c)].push_back(c);

  const QMatrix e = tensor_generator_matrix(Generator::E, word, side);
  std::map<int, std::vector<std::vector<ScalarQ>>, std::greater<>> out;
  for (const auto& [w, cols] : by_weight) {
    // E maps weight w into weight w + 2.
    std::vector<std::size_t> rows;
    if (auto it = by_weight.find(w + 2); it != by_weight.end()) rows = it->second;
    QMatrix block(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) block(r, c) = e(rows[r], cols[c]);
    auto kernel = null_space(block);
    if (kernel.empty()) continue;
    auto& dest = out[w];
    for (auto& local : kernel) {
      std::vector<ScalarQ> full(word.dim());
      for (std::size_t c = 0; c < cols.size(); ++c) full[cols[c]] = std::move(local[c]);
      dest.push_back(std::move(full));
    }
  }
  return out;
}

}  // namespace qcat
