#pragma once

#include <map>

#include "qcat/fusion.hpp"
#include "qcat/report.hpp"

namespace qcat {

/// Action of the universal R-matrix
///   q^{H(x)H/2} sum_n q^{n(n-1)/2} (q - q^-1)^n / [n]! F^n (x) E^n
/// on left (x) right, each leg carrying its Delta action. The sum stops once
/// F^n on the left leg or E^n on the right leg vanishes.
LinMap rmatrix(const TensorWord& left, const TensorWord& right);
inline LinMap rmatrix(int ell1, int ell2) { return rmatrix(TensorWord{ell1}, TensorWord{ell2}); }

/// c = P o R : left (x) right -> right (x) left.
LinMap braiding(const TensorWord& left, const TensorWord& right);
inline LinMap braiding(int ell1, int ell2) { return braiding(TensorWord{ell1}, TensorWord{ell2}); }

/// (-1)^s v^{l1 l2 - 2s(l1 + l2) + 2s^2 - 2s}, s = (l1 + l2 - ell)/2.
ScalarQ braiding_eigenvalue_closed_form(int ell, int ell1, int ell2);
/// lambda with pi^ell_{l2 l1} o c_{l1,l2} o iota^ell_{l1 l2} = lambda id, by
/// matrix computation. Throws ConsistencyError if the composite is not scalar.
ScalarQ braiding_eigenvalue_matrix(int ell, int ell1, int ell2);
/// Both routes; throws ConsistencyError when they disagree.
ScalarQ braiding_eigenvalue(int ell, int ell1, int ell2);

struct BraidData {
  int ell1 = 0;
  int ell2 = 0;
  LinMap rmatrix;
  LinMap braiding;
  std::map<int, ScalarQ> eigenvalues;  // channel -> lambda
};

BraidData braid_data(int ell1, int ell2);

/// theta^{-1} = (-1)^H K sum_n q^{n(n-1)/2}(q - q^-1)^n/[n]! (-K^-1 E)^n q^{-H^2/2} F^n
/// acting on the word through Delta.
LinMap twist_inverse_action(const TensorWord& word);

/// (-1)^ell v^{ell(ell+2)}.
ScalarQ twist_closed_form(int ell);
/// Twist scalar on V_ell from the theta^{-1} formula. Throws ConsistencyError
/// if the action is not scalar or disagrees with twist_closed_form.
ScalarQ twist(int ell);

/// (Delta (x) id)(R) = R13 R23, (id (x) Delta)(R) = R13 R12 and
/// R12 R13 R23 = R23 R13 R12 on V_{l1} (x) V_{l2} (x) V_{l3}.
CheckReport hexagon_check(int ell1, int ell2, int ell3);
CheckReport hexagon_sweep(int lmax);

/// theta_{U (x) V} = (theta_U (x) theta_V) c_{V,U} c_{U,V} as matrices, and per
/// channel twist(ell) = twist(l1) twist(l2) lambda(ell; l2, l1) lambda(ell; l1, l2).
CheckReport ribbon_check(int ell1, int ell2);
CheckReport ribbon_sweep(int lmax);

}  // namespace qcat
