#include "qcat/sixj.hpp"

#include <sstream>

#include "qcat/memo.hpp"
#include "qcat/parallel.hpp"

namespace qcat {

ScalarQ SixJTable::at(int m, int n) const {
  auto it = entries.find({m, n});
  return it == entries.end() ? ScalarQ() : it->second;
}

QMatrix SixJTable::as_matrix() const {
  QMatrix out(ms.size(), ns.size());
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ns.size(); ++j) out(i, j) = at(ms[i], ns[j]);
  return out;
}

LinMap left_tree(int ell1, int ell2, int ell3, int ell4, int m, CoproductSide side) {
  return cg_embedding(m, ell1, ell2, side).tensor(LinMap::identity(TensorWord{ell3})) *
         cg_embedding(ell4, m, ell3, side);
}

LinMap right_tree(int ell1, int ell2, int ell3, int ell4, int n, CoproductSide side) {
  return LinMap::identity(TensorWord{ell1}).tensor(cg_embedding(n, ell2, ell3, side)) *
         cg_embedding(ell4, ell1, n, side);
}

namespace {

std::string tuple_text(std::initializer_list<int> labels) {
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

SixJTable compute_sixj(int ell1, int ell2, int ell3, int ell4) {
  constexpr auto side = CoproductSide::DeltaOp;
  SixJTable table;
  table.labels = {ell1, ell2, ell3, ell4};
  table.ms = chan(ell1, ell2, ell3, ell4).members;
  table.ns = chan(ell2, ell3, ell1, ell4).members;
  if (table.ms.size() != table.ns.size())
    throw ConsistencyError("sixj" + tuple_text({ell1, ell2, ell3, ell4}) +
                           ": channel sets differ in size");
  if (table.ms.empty()) return table;

  std::vector<LinMap> left;
  for (int m : table.ms) left.push_back(left_tree(ell1, ell2, ell3, ell4, m, side));

  // Homomorphisms out of V_{l4} are fixed by the image of e_0; solve there on
  // the rows that are not identically zero.
  std::vector<std::size_t> rows;
  const std::size_t dim = left.front().codomain().dim();
  for (std::size_t r = 0; r < dim; ++r)
    for (const auto& l : left)
      if (!l(r, 0).is_zero()) {
        rows.push_back(r);
        break;
      }
  QMatrix system(rows.size(), left.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < left.size(); ++k) system(i, k) = left[k](rows[i], 0);

  for (int n : table.ns) {
    const LinMap right = right_tree(ell1, ell2, ell3, ell4, n, side);
    std::vector<ScalarQ> rhs(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rhs[i] = right(rows[i], 0);
    // Rows outside `rows` must vanish for the right tree as well.
    for (std::size_t r = 0, i = 0; r < dim; ++r) {
      if (i < rows.size() && rows[i] == r) {
        ++i;
        continue;
      }
      if (!right(r, 0).is_zero())
        throw ConsistencyError("sixj" + tuple_text({ell1, ell2, ell3, ell4}) +
                               ": right tree leaves the span of the left trees");
    }
    auto coeffs = solve(system, rhs);
    if (!coeffs)
      throw ConsistencyError("sixj" + tuple_text({ell1, ell2, ell3, ell4}) +
                             ": change-of-basis solve is singular or inconsistent");
    LinMap recombined(right.domain(), right.codomain());
    for (std::size_t k = 0; k < left.size(); ++k) {
      if ((*coeffs)[k].is_zero()) continue;
      recombined += (*coeffs)[k] * left[k];
      table.entries.emplace(std::make_pair(table.ms[k], n), (*coeffs)[k]);
    }
    if (!(recombined == right))
      throw ConsistencyError("sixj" + tuple_text({ell1, ell2, ell3, ell4}) +
                             ": full-matrix check failed for n = " + std::to_string(n));
  }
  return table;
}

}  // namespace

const SixJTable& sixj(int ell1, int ell2, int ell3, int ell4) {
  if (ell1 < 0 || ell2 < 0 || ell3 < 0 || ell4 < 0) throw DomainError("sixj: negative label");
  static MemoTable<std::array<int, 4>, SixJTable> table;
  return table.get({ell1, ell2, ell3, ell4}, [&] { return compute_sixj(ell1, ell2, ell3, ell4); });
}

CheckReport pentagon_check(int a, int b, int c, int d, int e) {
  CheckReport report{"pentagon", {a, b, c, d, e}, true, {}};
  for (int x : sel(a, b).members)
    for (int y : sel(x, c).members) {
      if (!in_sel(e, y, d)) continue;
      for (int z : sel(c, d).members)
        for (int w : sel(b, z).members) {
          if (!in_sel(e, a, w)) continue;
          const ScalarQ lhs = sixj(a, b, z, e).at(x, w) * sixj(x, c, d, e).at(y, z);
          ScalarQ rhs;
          for (int u : sel(b, c).members) {
            if (!in_sel(y, a, u) || !in_sel(w, u, d)) continue;
            rhs += sixj(a, b, c, y).at(x, u) * sixj(a, u, d, e).at(y, w) * sixj(b, c, d, w).at(u, z);
          }
          if (!(lhs == rhs))
            report.fail(tuple_text({a, b, c, d, e}) + " x=" + std::to_string(x) +
                        " y=" + std::to_string(y) + " z=" + std::to_string(z) +
                        " w=" + std::to_string(w));
        }
    }
  return report;
}

CheckReport pentagon_sweep(int lmax) {
  std::vector<std::array<int, 5>> tuples;
  for (int a = 0; a <= lmax; ++a)
    for (int b = 0; b <= lmax; ++b)
      for (int c = 0; c <= lmax; ++c)
        for (int d = 0; d <= lmax; ++d)
          for (int e = 0; e <= lmax; ++e)
            if ((a + b + c + d + e) % 2 == 0) tuples.push_back({a, b, c, d, e});
  std::vector<CheckReport> parts(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t i) {
    const auto& t = tuples[i];
    parts[i] = pentagon_check(t[0], t[1], t[2], t[3], t[4]);
  });
  CheckReport report{"pentagon", {lmax}, true, {}};
  for (const auto& p : parts) report.absorb(p);
  return report;
}

}  // namespace qcat
