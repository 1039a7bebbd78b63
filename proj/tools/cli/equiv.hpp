#pragma once

#include <string>
#include <vector>

namespace qcat::cli {

struct PhaseDeviation {
  int ell1 = 0;
  int ell2 = 0;
  int ell = 0;
  std::string exact;  // lambda or theta as a scalar string
  double deviation = 0.0;
};

/// Quantum-group data evaluated at q = e^{i pi t} against the first-row
/// Virasoro phases, plus the exact fusion count and a small pentagon sweep.
struct EquivReport {
  double t = 0.0;
  int lmax = 0;
  double tol = 1e-9;
  bool fusion_match = true;
  std::vector<std::string> fusion_failures;
  std::vector<PhaseDeviation> braiding;  // one row per (l1, l2, l in Sel)
  std::vector<PhaseDeviation> twists;    // one row per l <= 2 lmax (ell1 = ell2 = ell)
  double braiding_max_deviation = 0.0;
  double twist_max_deviation = 0.0;
  int pentagon_lmax = 0;
  bool pentagon_pass = true;

  bool pass() const {
    return fusion_match && pentagon_pass && braiding_max_deviation < tol && twist_max_deviation < tol;
  }
};

EquivReport compute_equivalence(double t, int lmax, double tol, int pentagon_lmax);

}  // namespace qcat::cli
