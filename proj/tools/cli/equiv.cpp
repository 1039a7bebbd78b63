#include "equiv.hpp"

#include <algorithm>
#include <cmath>

#include "qcat/braid.hpp"
#include "qcat/errors.hpp"
#include "qcat/sixj.hpp"
#include "qcat/virasoro.hpp"

namespace qcat::cli {

EquivReport compute_equivalence(double t, int lmax, double tol, int pentagon_lmax) {
  if (lmax < 0) throw DomainError("equiv: lmax must be nonnegative");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("equiv: tolerance must be positive");
  EquivReport report;
  report.t = t;
  report.lmax = lmax;
  report.tol = tol;
  report.pentagon_lmax = pentagon_lmax;

  for (int a = 0; a <= lmax; ++a) {
    for (int b = 0; b <= lmax; ++b) {
      const auto hw = highest_weight_vectors(TensorWord{a, b}, CoproductSide::Delta);
      for (int l = 0; l <= a + b; ++l) {
        auto it = hw.find(l);
        const int count = it == hw.end() ? 0 : static_cast<int>(it->second.size());
        if (count != fusion_dim(a, b, l)) {
          report.fusion_match = false;
          report.fusion_failures.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ";" +
                                           std::to_string(l) + ")");
        }
      }
      for (int l : sel(a, b).members) {
        const ScalarQ lambda = braiding_eigenvalue(l, a, b);
        const double dev = std::abs(eval_at(lambda, t) - braid_phase(l, a, b, t));
        report.braiding.push_back({a, b, l, lambda.to_string(), dev});
        report.braiding_max_deviation = std::max(report.braiding_max_deviation, dev);
      }
    }
  }
  for (int l = 0; l <= 2 * lmax; ++l) {
    const ScalarQ theta = twist(l);
    const double dev = std::abs(eval_at(theta, t) - twist_phase(l, t));
    report.twists.push_back({l, l, l, theta.to_string(), dev});
    report.twist_max_deviation = std::max(report.twist_max_deviation, dev);
  }
  report.pentagon_pass = pentagon_sweep(pentagon_lmax).pass;
  return report;
}

}  // namespace qcat::cli
