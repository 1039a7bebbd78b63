#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcat/braid.hpp"
#include "qcat/sixj.hpp"

using qcat::CoproductSide;
using qcat::LinMap;
using qcat::ScalarQ;
using qcat::TensorWord;

namespace {

std::vector<oracle::cd> flatten_numeric(const LinMap& map, double t) {
  std::vector<oracle::cd> out;
  for (std::size_t r = 0; r < map.matrix().rows(); ++r)
    for (std::size_t c = 0; c < map.matrix().cols(); ++c) out.push_back(qcat::eval_at(map(r, c), t));
  return out;
}

}  // namespace

TEST(SixJ, UnitLegIsOne) {
  for (int b = 0; b <= 3; ++b)
    for (int c = 0; c <= 3; ++c)
      for (int d : qcat::sel(b, c).members) {
        const auto& table = qcat::sixj(0, b, c, d);
        ASSERT_EQ(table.entries.size(), 1u);
        EXPECT_TRUE(table.at(b, d).is_one());
      }
}

TEST(SixJ, EmptyWhenNoChannels) {
  EXPECT_TRUE(qcat::sixj(1, 1, 1, 0).empty());
  EXPECT_TRUE(qcat::sixj(1, 1, 1, 5).empty());
}

TEST(SixJ, FourDoubletsExact) {
  const auto& s = qcat::sixj(1, 1, 1, 1);
  const ScalarQ two = qcat::qint(2);
  EXPECT_TRUE(s.at(2, 0).is_one());
  EXPECT_EQ(s.at(0, 0), -ScalarQ(1) / two);
  EXPECT_EQ(s.at(2, 2), ScalarQ(1) / two);
  EXPECT_EQ(s.at(0, 2), qcat::qint(3) / (two * two));
}

TEST(SixJ, MatchesNumericLeastSquares) {
  // Independent route: evaluate both tree families numerically and solve the
  // full (not cyclic-vector) system in the least-squares sense.
  const double t = 0.41;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= a + b + c; ++d) {
          const auto& table = qcat::sixj(a, b, c, d);
          if (table.empty()) continue;
          std::vector<std::vector<oracle::cd>> cols;
          for (int m : table.ms) cols.push_back(flatten_numeric(qcat::left_tree(a, b, c, d, m, CoproductSide::DeltaOp), t));
          std::vector<std::vector<oracle::cd>> a_mat(cols[0].size(), std::vector<oracle::cd>(cols.size()));
          for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < cols[j].size(); ++i) a_mat[i][j] = cols[j][i];
          for (int n : table.ns) {
            const auto rhs = flatten_numeric(qcat::right_tree(a, b, c, d, n, CoproductSide::DeltaOp), t);
            const auto x = oracle::least_squares(a_mat, rhs);
            ASSERT_TRUE(x.has_value());
            for (std::size_t k = 0; k < table.ms.size(); ++k)
              EXPECT_NEAR(std::abs((*x)[k] - qcat::eval_at(table.at(table.ms[k], n), t)), 0.0, 1e-9)
                  << a << b << c << d << " m=" << table.ms[k] << " n=" << n;
          }
        }
}

TEST(SixJ, TablesAreInvertible) {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= a + b + c; ++d) {
          const auto& table = qcat::sixj(a, b, c, d);
          if (table.empty()) continue;
          ASSERT_EQ(table.ms.size(), table.ns.size());
          EXPECT_TRUE(qcat::inverse(table.as_matrix()).has_value());
        }
}

TEST(Pentagon, HoldsUpToTwo) {
  const auto report = qcat::pentagon_sweep(2);
  EXPECT_TRUE(report.pass);
  for (const auto& f : report.failures) ADD_FAILURE() << f;
}

TEST(RMatrix, DoubletByDoublet) {
  // Basis e0e0, e0e1, e1e0, e1e1: diag(v, v^-1, v^-1, v) plus (q - q^-1) v^-1
  // from e0(x)e1 to e1(x)e0.
  const LinMap r = qcat::rmatrix(1, 1);
  const ScalarQ v = ScalarQ::v(), q = ScalarQ::q();
  qcat::QMatrix expected(4, 4);
  expected(0, 0) = v;
  expected(1, 1) = v.inverse();
  expected(2, 2) = v.inverse();
  expected(3, 3) = v;
  expected(2, 1) = (q - q.inverse()) * v.inverse();
  EXPECT_EQ(r.matrix(), expected);
}

TEST(RMatrix, UnitLegIsTrivial) {
  for (int ell = 0; ell <= 4; ++ell) {
    EXPECT_EQ(qcat::rmatrix(0, ell), LinMap::identity(TensorWord{0, ell}));
    EXPECT_EQ(qcat::rmatrix(ell, 0), LinMap::identity(TensorWord{ell, 0}));
  }
}

TEST(Braiding, IsModuleMapFromDeltaToDelta) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const LinMap c = qcat::braiding(a, b);
      for (auto g : qcat::kAllGenerators) {
        const auto lhs = c.matrix() * qcat::tensor_generator_matrix(g, TensorWord{a, b}, CoproductSide::Delta);
        const auto rhs = qcat::tensor_generator_matrix(g, TensorWord{b, a}, CoproductSide::Delta) * c.matrix();
        EXPECT_EQ(lhs, rhs) << a << "," << b << " " << qcat::to_string(g);
      }
    }
}

TEST(Braiding, EigenvalueExamples) {
  EXPECT_EQ(qcat::braiding_eigenvalue(2, 1, 1).to_string(), "q^(1/2)");
  EXPECT_EQ(qcat::braiding_eigenvalue(0, 1, 1).to_string(), "-q^(-3/2)");
  EXPECT_THROW(qcat::braiding_eigenvalue(1, 1, 1), qcat::DomainError);
}

TEST(Braiding, MatrixRouteMatchesClosedForm) {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int l : qcat::sel(a, b).members)
        EXPECT_EQ(qcat::braiding_eigenvalue_matrix(l, a, b), qcat::braiding_eigenvalue_closed_form(l, a, b));
}

TEST(Braiding, EigenvaluesMultiplyToDeterminant) {
  // c_{b,a} c_{a,b} acts on channel l by lambda(l; b, a) lambda(l; a, b), with
  // multiplicity l + 1.
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const auto double_braid = (qcat::braiding(b, a) * qcat::braiding(a, b)).matrix();
      ScalarQ product(1);
      for (int l : qcat::sel(a, b).members)
        product *= (qcat::braiding_eigenvalue(l, a, b) * qcat::braiding_eigenvalue(l, b, a)).pow(l + 1);
      EXPECT_EQ(qcat::determinant(double_braid), product) << a << "," << b;
    }
}

TEST(Twist, Examples) {
  EXPECT_TRUE(qcat::twist(0).is_one());
  EXPECT_EQ(qcat::twist(1).to_string(), "-q^(3/2)");
  EXPECT_EQ(qcat::twist(2).to_string(), "q^4");
  EXPECT_THROW(qcat::twist(-1), qcat::DomainError);
}

TEST(Twist, ClosedFormUpToEight) {
  for (int ell = 0; ell <= 8; ++ell) EXPECT_EQ(qcat::twist(ell), qcat::twist_closed_form(ell));
}

TEST(Twist, ActsByChannelOnTensorProducts) {
  // theta^-1 on V_a (x) V_b restricted to channel l is theta_l^-1.
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      const LinMap inv = qcat::twist_inverse_action(TensorWord{a, b});
      for (int l : qcat::sel(a, b).members) {
        const LinMap& iota = qcat::cg_embedding(l, a, b, CoproductSide::Delta);
        EXPECT_EQ(inv * iota, qcat::twist(l).inverse() * iota);
      }
    }
}

TEST(Hexagon, HoldsUpToTwo) {
  const auto report = qcat::hexagon_sweep(2);
  EXPECT_TRUE(report.pass);
  for (const auto& f : report.failures) ADD_FAILURE() << f;
}

TEST(Ribbon, HoldsUpToThree) {
  const auto report = qcat::ribbon_sweep(3);
  EXPECT_TRUE(report.pass);
  for (const auto& f : report.failures) ADD_FAILURE() << f;
}

TEST(Ribbon, ScaledDoubleBraidDoesNotBalance) {
  const TensorWord w{1, 1};
  const LinMap bad = qcat::twist_inverse_action(w) * (qcat::twist(1) * qcat::twist(1) *
                                                      (qcat::braiding(1, 1) * qcat::braiding(1, 1)));
  EXPECT_EQ(bad, LinMap::identity(w));
  EXPECT_NE(qcat::ScalarQ(2) * bad, LinMap::identity(w));
}
