#include "qcat/fusion.hpp"

#include <algorithm>
#include <tuple>

#include "qcat/memo.hpp"
#include "qcat/parallel.hpp"

namespace qcat {

bool SelSet::contains(int ell) const {
  return std::binary_search(members.begin(), members.end(), ell);
}

bool ChanSet::contains(int ell) const {
  return std::binary_search(members.begin(), members.end(), ell);
}

bool in_sel(int ell, int ell1, int ell2) {
  if (ell < 0 || ell1 < 0 || ell2 < 0) return false;
  return std::abs(ell1 - ell2) <= ell && ell <= ell1 + ell2 && (ell + ell1 + ell2) % 2 == 0;
}

SelSet sel(int ell1, int ell2) {
  if (ell1 < 0 || ell2 < 0) throw DomainError("sel: negative label");
  SelSet s{ell1, ell2, {}};
  for (int l = std::abs(ell1 - ell2); l <= ell1 + ell2; l += 2) s.members.push_back(l);
  return s;
}

ChanSet chan(int ell1, int ell2, int ell3, int ell4) {
  ChanSet c{ell1, ell2, ell3, ell4, {}};
  const SelSet a = sel(ell1, ell2), b = sel(ell3, ell4);
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(c.members));
  return c;
}

ScalarQ cg_coefficient(int ell, int ell1, int ell2, int j) {
  if (!in_sel(ell, ell1, ell2))
    throw DomainError("cg_coefficient: " + std::to_string(ell) + " not in Sel(" +
                      std::to_string(ell1) + "," + std::to_string(ell2) + ")");
  const int s = (ell1 + ell2 - ell) / 2;
  if (j < 0 || j > s) throw DomainError("cg_coefficient: index out of range");
  const ScalarQ q = ScalarQ::q();
  ScalarQ c = qfact(ell1 - j) * qfact(ell2 - s + j) / (qfact(j) * qfact(s - j) * qfact(ell1) * qfact(ell2));
  c *= ScalarQ::v_pow(2 * j * (ell1 - j + 1)) / (q - q.inverse()).pow(s);
  return j % 2 == 0 ? c : -c;
}

bool intertwines(const LinMap& map, CoproductSide side) {
  for (Generator g : kAllGenerators) {
    const QMatrix out = tensor_generator_matrix(g, map.codomain(), side);
    const QMatrix in = tensor_generator_matrix(g, map.domain(), side);
    if (!(out * map.matrix() == map.matrix() * in)) return false;
  }
  return true;
}

namespace {

using CgKey = std::tuple<int, int, int, CoproductSide>;

LinMap build_delta_embedding(int ell, int ell1, int ell2) {
  const TensorWord word{ell1, ell2};
  LinMap iota(TensorWord{ell}, word);
  const int s = (ell1 + ell2 - ell) / 2;
  std::vector<ScalarQ> col(word.dim());
  for (int j = 0; j <= s; ++j) col[word.flat_index({j, s - j})] = cg_coefficient(ell, ell1, ell2, j);
  for (int k = 0; k <= ell; ++k) {
    if (k > 0) col = act_tensor(Generator::F, word, CoproductSide::Delta, col);
    iota.matrix().set_column(static_cast<std::size_t>(k), col);
  }
  return iota;
}

LinMap build_embedding(int ell, int ell1, int ell2, CoproductSide side) {
  if (!in_sel(ell, ell1, ell2))
    throw DomainError("cg_embedding: " + std::to_string(ell) + " not in Sel(" +
                      std::to_string(ell1) + "," + std::to_string(ell2) + ")");
  LinMap iota = side == CoproductSide::Delta
                    ? build_delta_embedding(ell, ell1, ell2)
                    : LinMap::flip(ell2, ell1) * cg_embedding(ell, ell2, ell1, CoproductSide::Delta);
  if (!intertwines(iota, side))
    throw ConsistencyError("cg_embedding(" + std::to_string(ell) + ";" + std::to_string(ell1) +
                           "," + std::to_string(ell2) + "," + to_string(side) +
                           ") is not a module map");
  return iota;
}

MemoTable<CgKey, LinMap>& embedding_table() {
  static MemoTable<CgKey, LinMap> table;
  return table;
}

using FamilyKey = std::tuple<int, int, CoproductSide>;

MemoTable<FamilyKey, std::vector<LinMap>>& projection_table() {
  static MemoTable<FamilyKey, std::vector<LinMap>> table;
  return table;
}

// Projections for every channel of (l1, l2) at once: the inverse of the
// square matrix whose column blocks are the embeddings.
std::vector<LinMap> build_projections(int ell1, int ell2, CoproductSide side) {
  const TensorWord word{ell1, ell2};
  const SelSet channels = sel(ell1, ell2);
  QMatrix assembled(word.dim(), word.dim());
  std::size_t offset = 0;
  for (int l : channels.members) {
    const LinMap& iota = cg_embedding(l, ell1, ell2, side);
    for (std::size_t r = 0; r < word.dim(); ++r)
      for (std::size_t c = 0; c <= static_cast<std::size_t>(l); ++c) assembled(r, offset + c) = iota(r, c);
    offset += static_cast<std::size_t>(l) + 1;
  }
  auto inv = inverse(std::move(assembled));
  if (!inv)
    throw ConsistencyError("cg_projection: embeddings of " + word.to_string() +
                           " are linearly dependent");
  std::vector<LinMap> out;
  offset = 0;
  for (int l : channels.members) {
    LinMap pi(word, TensorWord{l});
    for (std::size_t r = 0; r <= static_cast<std::size_t>(l); ++r)
      for (std::size_t c = 0; c < word.dim(); ++c) pi(r, c) = (*inv)(offset + r, c);
    offset += static_cast<std::size_t>(l) + 1;
    out.push_back(std::move(pi));
  }
  return out;
}

}  // namespace

const LinMap& cg_embedding(int ell, int ell1, int ell2, CoproductSide side) {
  if (!in_sel(ell, ell1, ell2))
    throw DomainError("cg_embedding: " + std::to_string(ell) + " not in Sel(" +
                      std::to_string(ell1) + "," + std::to_string(ell2) + ")");
  return embedding_table().get({ell, ell1, ell2, side},
                               [&] { return build_embedding(ell, ell1, ell2, side); });
}

const LinMap& cg_projection(int ell, int ell1, int ell2, CoproductSide side) {
  if (!in_sel(ell, ell1, ell2))
    throw DomainError("cg_projection: " + std::to_string(ell) + " not in Sel(" +
                      std::to_string(ell1) + "," + std::to_string(ell2) + ")");
  const auto& family = projection_table().get(
      {ell1, ell2, side}, [&] { return build_projections(ell1, ell2, side); });
  // Channels are consecutive with step 2 starting at |l1 - l2|.
  return family[static_cast<std::size_t>((ell - std::abs(ell1 - ell2)) / 2)];
}

namespace {

std::string pair_tag(int ell1, int ell2, CoproductSide side) {
  return "(" + std::to_string(ell1) + "," + std::to_string(ell2) + "," + to_string(side) + ")";
}

}  // namespace

CheckReport intertwiner_check(int ell1, int ell2, CoproductSide side) {
  CheckReport report{"intertwiner", {ell1, ell2}, true, {}};
  const std::string tag = pair_tag(ell1, ell2, side);
  const TensorWord word{ell1, ell2};
  const SelSet channels = sel(ell1, ell2);
  LinMap total(word, word);
  for (int l : channels.members) {
    const LinMap& iota = cg_embedding(l, ell1, ell2, side);
    const LinMap& pi = cg_projection(l, ell1, ell2, side);
    if (!intertwines(iota, side)) report.fail(tag + " iota^" + std::to_string(l) + " not a module map");
    if (!intertwines(pi, side)) report.fail(tag + " pi^" + std::to_string(l) + " not a module map");
    if (rank(iota.matrix()) != static_cast<std::size_t>(l) + 1)
      report.fail(tag + " iota^" + std::to_string(l) + " not injective");
    for (int lp : channels.members) {
      const LinMap composite = pi * cg_embedding(lp, ell1, ell2, side);
      const bool ok = l == lp ? composite == LinMap::identity(TensorWord{l}) : composite.is_zero();
      if (!ok) report.fail(tag + " pi^" + std::to_string(l) + " o iota^" + std::to_string(lp));
    }
    total += iota * pi;
  }
  if (!(total == LinMap::identity(word))) report.fail(tag + " completeness");
  return report;
}

CheckReport intertwiner_sweep(int lmax) {
  std::vector<std::tuple<int, int, CoproductSide>> cases;
  for (int a = 0; a <= lmax; ++a)
    for (int b = 0; b <= lmax; ++b)
      for (auto side : {CoproductSide::Delta, CoproductSide::DeltaOp}) cases.emplace_back(a, b, side);
  std::vector<CheckReport> parts(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& [a, b, side] = cases[i];
    parts[i] = intertwiner_check(a, b, side);
  });
  CheckReport report{"intertwiner", {lmax}, true, {}};
  for (const auto& p : parts) report.absorb(p);
  return report;
}

CheckReport fusion_count_check(int ell1, int ell2, CoproductSide side) {
  CheckReport report{"fusion", {ell1, ell2}, true, {}};
  const auto hw = highest_weight_vectors(TensorWord{ell1, ell2}, side);
  const SelSet channels = sel(ell1, ell2);
  std::size_t total = 0;
  for (const auto& [w, vectors] : hw) {
    total += vectors.size();
    if (!channels.contains(w) || vectors.size() != 1)
      report.fail(pair_tag(ell1, ell2, side) + " weight " + std::to_string(w) + " has " +
                  std::to_string(vectors.size()) + " highest-weight vectors");
  }
  if (total != channels.size())
    report.fail(pair_tag(ell1, ell2, side) + " |Sel| = " + std::to_string(channels.size()) +
                " but found " + std::to_string(total) + " highest-weight vectors");
  return report;
}

CheckReport fusion_count_sweep(int lmax) {
  std::vector<std::tuple<int, int, CoproductSide>> cases;
  for (int a = 0; a <= lmax; ++a)
    for (int b = 0; b <= lmax; ++b)
      for (auto side : {CoproductSide::Delta, CoproductSide::DeltaOp}) cases.emplace_back(a, b, side);
  std::vector<CheckReport> parts(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& [a, b, side] = cases[i];
    parts[i] = fusion_count_check(a, b, side);
  });
  CheckReport report{"fusion", {lmax}, true, {}};
  for (const auto& p : parts) report.absorb(p);
  return report;
}

}  // namespace qcat
