#pragma once

#include <vector>

#include "qcat/report.hpp"
#include "qcat/rep.hpp"

namespace qcat {

/// Channels of V_{l1} (x) V_{l2}: |l1 - l2| <= l <= l1 + l2 with l + l1 + l2
/// even, sorted ascending.
struct SelSet {
  int ell1 = 0;
  int ell2 = 0;
  std::vector<int> members;

  bool contains(int ell) const;
  std::size_t size() const { return members.size(); }
};

/// Sel(l1, l2) intersected with Sel(l3, l4).
struct ChanSet {
  int ell1 = 0, ell2 = 0, ell3 = 0, ell4 = 0;
  std::vector<int> members;

  bool contains(int ell) const;
  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
};

SelSet sel(int ell1, int ell2);
bool in_sel(int ell, int ell1, int ell2);
ChanSet chan(int ell1, int ell2, int ell3, int ell4);

/// Coefficient of e_j (x) e_{s-j} in the image of the highest-weight vector
/// of V_ell inside V_{l1} (x)_Delta V_{l2}, s = (l1 + l2 - ell)/2.
ScalarQ cg_coefficient(int ell, int ell1, int ell2, int j);

/// The fixed embedding V_ell -> V_{l1} (x) V_{l2} for the given coproduct.
/// The highest-weight image is fixed by cg_coefficient; the rest of V_ell
/// follows by applying the coproduct of F. The Delta^op embedding is the
/// flip of the Delta embedding with swapped legs. Every result is checked to
/// intertwine K, K^-1, E, F before it is returned.
///
/// Throws DomainError if ell is not in Sel(l1, l2), ConsistencyError if the
/// intertwiner check fails. Results are memoized process-wide.
const LinMap& cg_embedding(int ell, int ell1, int ell2, CoproductSide side);

/// The projection V_{l1} (x) V_{l2} -> V_ell dual to the embeddings:
/// pi^l o iota^l' = delta_{l l'} id and sum_l iota^l o pi^l = id. Obtained by
/// inverting the block matrix of all embeddings. Memoized.
const LinMap& cg_projection(int ell, int ell1, int ell2, CoproductSide side);

/// True if `map` commutes with K, K^-1, E, F between the irreducible domain
/// and the tensor-word codomain (or vice versa for projections).
bool intertwines(const LinMap& map, CoproductSide side);

/// For one pair (l1, l2) and coproduct: every embedding intertwines, has
/// rank ell + 1, pi^l o iota^l' = delta id and sum_l iota^l o pi^l = id.
CheckReport intertwiner_check(int ell1, int ell2, CoproductSide side);
/// Both coproducts, all l1, l2 <= lmax.
CheckReport intertwiner_sweep(int lmax);

/// Highest-weight vectors of V_{l1} (x) V_{l2} (found by kernel computation)
/// occur exactly at the weights in Sel(l1, l2), once each.
CheckReport fusion_count_check(int ell1, int ell2, CoproductSide side);
CheckReport fusion_count_sweep(int lmax);

}  // namespace qcat
