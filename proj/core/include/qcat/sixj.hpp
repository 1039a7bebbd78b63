#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "qcat/fusion.hpp"
#include "qcat/report.hpp"

namespace qcat {

/// Associator matrix elements for Delta^op: for n in Chan(l2,l3;l1,l4),
///
///   (id (x) iota^n_{l2 l3}) o iota^{l4}_{l1 n}
///       = sum_m S(m, n) (iota^m_{l1 l2} (x) id) o iota^{l4}_{m l3},
///
/// with m in Chan(l1,l2;l3,l4). Associativity is the identity on flat
/// coordinates, so both sides are maps V_{l4} -> V_{l1} (x) V_{l2} (x) V_{l3}.
struct SixJTable {
  std::array<int, 4> labels{};
  std::vector<int> ms;  // left-bracket channels
  std::vector<int> ns;  // right-bracket channels
  std::map<std::pair<int, int>, ScalarQ> entries;

  bool empty() const { return ms.empty(); }
  /// S(m, n), zero when (m, n) is not an admissible pair.
  ScalarQ at(int m, int n) const;
  /// Rows indexed by ms, columns by ns.
  QMatrix as_matrix() const;
};

/// Left-bracket basis map (iota^m_{l1 l2} (x) id) o iota^{l4}_{m l3}.
LinMap left_tree(int ell1, int ell2, int ell3, int ell4, int m, CoproductSide side);
/// Right-bracket basis map (id (x) iota^n_{l2 l3}) o iota^{l4}_{l1 n}.
LinMap right_tree(int ell1, int ell2, int ell3, int ell4, int n, CoproductSide side);

/// 6j table for Delta^op, computed by an exact solve on the image of the
/// highest-weight vector of V_{l4} and then checked on the full matrices.
/// Empty when either channel set is empty. Throws ConsistencyError on a rank
/// defect or a failed full-matrix check. Memoized.
const SixJTable& sixj(int ell1, int ell2, int ell3, int ell4);

/// Biedenharn-Elliott identity for one outer label tuple (a,b,c,d;e):
///
///   S^{abze}(x,w) S^{xcde}(y,z) = sum_u S^{abcy}(x,u) S^{aude}(y,w) S^{bcdw}(u,z)
///
/// for every admissible x, y, z, w.
CheckReport pentagon_check(int a, int b, int c, int d, int e);
/// All outer tuples with labels <= lmax.
CheckReport pentagon_sweep(int lmax);

}  // namespace qcat
