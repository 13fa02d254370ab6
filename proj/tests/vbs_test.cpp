// VBS ground states from Schwinger-boson bond products.

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <cmath>

#include "oracles.hpp"
#include "qvbs/vbs.hpp"

using namespace qvbs;

namespace {

std::vector<double> numeric(const StateVector<Surd>& s, double q) { return evaluate<double>(s, q).amplitudes(); }

std::vector<std::pair<int, int>> ring(int len) {
  std::vector<std::pair<int, int>> b;
  for (int k = 0; k < len; ++k) b.emplace_back(k, (k + 1) % len);
  return b;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double w = 0;
  for (std::size_t i = 0; i < a.size(); ++i) w = std::max(w, std::abs(a[i] - b[i]));
  return w;
}

}  // namespace

TEST(VbsState, PeriodicMatchesTermByTermExpansion) {
  for (auto [s, len] : {std::pair{1, 4}, std::pair{1, 6}, std::pair{2, 3}, std::pair{2, 4}}) {
    const StateVector<Surd> psi = build_pbc(s, len);
    for (double q : {0.6, 1.0, 1.4}) {
      const auto expected = oracle::expand_vbs(s, len, ring(len), std::vector<std::pair<int, int>>(len, {0, 0}), q);
      const auto got = numeric(psi, q);
      EXPECT_LT(max_abs_diff(got, expected), 1e-9 * (1 + *std::max_element(expected.begin(), expected.end()))) << s << " " << len;
    }
  }
}

TEST(VbsState, OpenMatchesTermByTermExpansion) {
  const int s = 2, len = 3;
  const double q = 0.75;
  std::vector<std::pair<int, int>> bonds{{0, 1}, {1, 2}};
  for (int p1 = 1; p1 <= s + 1; ++p1) {
    for (int p2 = 1; p2 <= s + 1; ++p2) {
      std::vector<std::pair<int, int>> boundary(len, {0, 0});
      boundary[0].first = s - p1 + 1;
      boundary[len - 1].first = p2 - 1;
      auto expected = oracle::expand_vbs(s, len, bonds, boundary, q);
      const double pref = std::sqrt(oracle::qbinom(s, p1 - 1, q) * oracle::qbinom(s, p2 - 1, q));
      for (double& v : expected) v *= pref;
      EXPECT_LT(max_abs_diff(numeric(build_open(s, len, p1, p2), q), expected), 1e-9) << p1 << " " << p2;
    }
  }
}

TEST(VbsState, ClassicalSpinOneIsSingletProduct) {
  // q = 1, S = 1: site tensor W^m_{beta alpha} fuses the boson from the left
  // bond (beta) with the one from the right bond (alpha); eps is the singlet.
  const int len = 5;
  Eigen::Matrix2d eps;
  eps << 0, 1, -1, 0;
  std::vector<Eigen::Matrix2d> w(3, Eigen::Matrix2d::Zero());
  for (int beta = 0; beta < 2; ++beta) {
    for (int alpha = 0; alpha < 2; ++alpha) {
      const int nx = (beta == 0) + (alpha == 0);
      const int m = nx - 1;
      w[static_cast<std::size_t>(m + 1)](beta, alpha) = std::sqrt(std::tgamma(2.0 + m) * std::tgamma(2.0 - m));
    }
  }
  const StateVector<double> psi = evaluate<double>(build_pbc(1, len), 1.0);
  std::vector<double> expected(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    const auto ms = psi.config(i);
    Eigen::Matrix2d prod = Eigen::Matrix2d::Identity();
    for (int m : ms) prod = prod * w[static_cast<std::size_t>(m + 1)] * eps;
    expected[i] = prod.trace();
  }
  EXPECT_LT(oracle::proportionality_residual(psi.amplitudes(), expected), 1e-12);
}

TEST(VbsState, Symmetries) {
  const int s = 2, len = 4;
  const StateVector<Surd> psi = build_pbc(s, len);
  EXPECT_TRUE(proportional(translate(psi, 1), psi));
  // psi_q(m_1..m_L) = psi_q(-m_L..-m_1)
  EXPECT_EQ(reverse_flip(psi).amplitudes(), psi.amplitudes());
  // psi_{1/q}(m) = (-1)^{LS} psi_q(-m)
  const auto a = numeric(psi, 1.0 / 0.7);
  const auto b = numeric(flip(psi), 0.7);
  const double sign = (len * s) % 2 == 0 ? 1.0 : -1.0;
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], sign * b[i], 1e-9 * (1 + std::abs(a[i])));
}

TEST(VbsState, WeightZeroOnly) {
  const StateVector<Surd> psi = build_pbc(1, 4);
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    if (!psi[i].is_zero()) EXPECT_EQ(psi.weight(i), 0);
  }
}

TEST(Annihilation, ExactOnSmallChains) {
  EXPECT_TRUE(verify_annihilation(build_pbc(1, 4), Boundary::Periodic).all_exact_zero());
  EXPECT_TRUE(verify_annihilation(build_pbc(2, 3), Boundary::Periodic).all_exact_zero());
  EXPECT_TRUE(verify_annihilation(build_open(1, 3, 1, 2), Boundary::Open).all_exact_zero());
}

TEST(Annihilation, NumericProjectorsKillState) {
  const int s = 1, len = 4;
  const double q = 1.3;
  const std::vector<double> psi = numeric(build_pbc(s, len), q);
  const Eigen::MatrixXd p2 = projector(s, 2).numeric(q);
  const int d = 2 * s + 1;
  for (auto [k, l] : ring(len)) {
    double worst = 0;
    std::vector<double> out(psi.size(), 0.0);
    for (std::size_t col = 0; col < psi.size(); ++col) {
      if (psi[col] == 0) continue;
      std::vector<int> digits(len);
      std::size_t rest = col;
      for (int site = len - 1; site >= 0; --site) {
        digits[site] = static_cast<int>(rest % d);
        rest /= d;
      }
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          auto row_digits = digits;
          row_digits[k] = a;
          row_digits[l] = b;
          std::size_t row = 0;
          for (int x : row_digits) row = row * d + x;
          out[row] += p2(a * d + b, digits[k] * d + digits[l]) * psi[col];
        }
      }
    }
    for (double v : out) worst = std::max(worst, std::abs(v));
    EXPECT_LT(worst, 1e-10) << k << " " << l;
  }
}

TEST(Annihilation, NegativeControl) {
  const AnnihilationReport rep = verify_annihilation(random_weight_zero_state(2, 3, 7), Boundary::Periodic);
  EXPECT_FALSE(rep.any_exact_zero());
  EXPECT_GT(rep.max_residual(), 1e-6);
  EXPECT_EQ(random_weight_zero_state(2, 3, 7).amplitudes(), random_weight_zero_state(2, 3, 7).amplitudes());
}

TEST(VbsState, ArgumentErrors) {
  EXPECT_THROW(build_pbc(1, 1), DomainError);
  EXPECT_THROW(build_pbc(0, 4), DomainError);
  EXPECT_THROW(build_open(2, 3, 0, 1), DomainError);
  EXPECT_THROW(build_open(2, 3, 1, 4), DomainError);
}
