#pragma once

#include <vector>

#include <gmpxx.h>

#include "qcat/matrix.hpp"
#include "qcat/scalar.hpp"

namespace qcat {

inline constexpr int kDefaultLevelCap = 8;

/// c(t) = 13 - 6(t + 1/t). Throws DomainError for t = 0.
mpq_class central_charge(const mpq_class& t);
double central_charge(double t);

/// First-row Kac weight h_ell(t) = ell(ell+2)t/4 - ell/2.
mpq_class h_weight(int ell, const mpq_class& t);
double h_weight(int ell, double t);

/// Dimension of the space of intertwining operators among first-row modules:
/// 1 iff l3 is in Sel(l1, l2).
int fusion_dim(int ell1, int ell2, int ell3);

/// Normalization constant of the first-row intertwining operator, with the
/// product index j used in the last Gamma factor of the denominator.
/// Throws DomainError if l3 is not in Sel(l1, l2) and EvaluationSingularity if
/// a Gamma argument lies within 1e-9 of a pole.
double b_const(int ell1, int ell2, int ell3, double t);

/// e^{i pi (h_ell - h_l1 - h_l2)}.
QComplex braid_phase(int ell, int ell1, int ell2, double t);
/// e^{2 pi i h_ell}.
QComplex twist_phase(int ell, double t);

/// Partitions of n, each as a non-increasing list of parts, in reverse
/// lexicographic order ((n) first, (1,...,1) last).
std::vector<std::vector<int>> partitions(int n);

/// Gram matrix of the Shapovalov form on level N of the Verma module M(c, h),
/// in the basis L_{-l1} ... L_{-lk} v indexed by partitions(N). Throws
/// LevelCapExceeded if N > level_cap.
RationalMatrix shapovalov_gram(const mpq_class& c, const mpq_class& h, int level,
                               int level_cap = kDefaultLevelCap);

struct KacLevel {
  int level = 0;
  bool det_zero = false;
};

struct KacCheck {
  int ell = 0;
  mpq_class t;
  int level = 0;          // ell + 1
  bool det_zero = false;  // determinant at `level` vanishes
  std::vector<KacLevel> lower_levels;
  bool passed() const { return det_zero; }
};

/// Reducibility of M(c(t), h_ell(t)): the level-(ell+1) Shapovalov
/// determinant must vanish. Lower levels are reported alongside.
KacCheck kac_first_row_check(int ell, const mpq_class& t, int level_cap = kDefaultLevelCap);

}  // namespace qcat
