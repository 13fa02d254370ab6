// Highest-weight vectors, oblique projectors, the projector Hamiltonian and
// the divisibility of V_j, j <= S, by the VBS bond factor.

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "qvbs/cg.hpp"

using namespace qvbs;

TEST(HighestWeight, AnnihilatedByRaising) {
  for (int s = 1; s <= 3; ++s) {
    for (int j = 0; j <= 2 * s; ++j) {
      const HighestWeightVector hw = highest_weight(s, s, j);
      EXPECT_TRUE(coproduct_apply(hw.poly, Generator::XPlus, 0, 1).is_zero()) << s << " " << j;
      EXPECT_EQ(coproduct_apply(hw.poly, Generator::H, 0, 1), hw.poly * LaurentQ(2 * j));
    }
  }
  EXPECT_THROW(highest_weight(1, 1, 3), DomainError);
}

TEST(HighestWeight, MixedSpins) {
  const HighestWeightVector hw = highest_weight(2, 1, 1);
  EXPECT_TRUE(coproduct_apply(hw.poly, Generator::XPlus, 0, 1).is_zero());
  EXPECT_EQ(coproduct_apply(hw.poly, Generator::H, 0, 1), hw.poly * LaurentQ(2));
}

TEST(Projector, ExactAlgebra) {
  for (int s = 1; s <= 2; ++s) {
    const auto& pis = projectors(s);
    ASSERT_EQ(pis.size(), static_cast<std::size_t>(2 * s + 1));
    ExactMatrix sum(pis[0].dim(), pis[0].dim());
    for (std::size_t a = 0; a < pis.size(); ++a) {
      sum = sum + pis[a].monomial_matrix();
      for (std::size_t b = 0; b < pis.size(); ++b) {
        const ExactMatrix prod = pis[a].monomial_matrix() * pis[b].monomial_matrix();
        if (a == b) {
          EXPECT_EQ(prod, pis[a].monomial_matrix());
        } else {
          EXPECT_TRUE(prod.is_zero());
        }
      }
    }
    EXPECT_EQ(sum, ExactMatrix::identity(pis[0].dim()));
  }
}

TEST(Projector, ClassicalLimitIsOrthogonalProjector) {
  for (int s = 1; s <= 3; ++s) {
    for (int j = 0; j <= 2 * s; ++j) {
      const Eigen::MatrixXd p = projector(s, j).numeric(1.0);
      const Eigen::MatrixXd expected = oracle::classical_projector(s, j);
      EXPECT_LT((p - expected).cwiseAbs().maxCoeff(), 1e-10) << s << " " << j;
    }
  }
}

TEST(Projector, NumericIdempotentAwayFromOne) {
  for (double q : {0.6, 1.7}) {
    for (int j = 0; j <= 4; ++j) {
      const Eigen::MatrixXd p = projector(2, j).numeric(q);
      EXPECT_LT((p * p - p).cwiseAbs().maxCoeff(), 1e-9 * (1 + p.cwiseAbs().maxCoeff()));
      EXPECT_NEAR(p.trace(), 2 * j + 1, 1e-9);
    }
  }
}

TEST(Projector, GroundSpaceDimension) {
  for (int s = 1; s <= 3; ++s) EXPECT_EQ(two_site_ground_space_dimension(s), static_cast<std::size_t>((s + 1) * (s + 1)));
}

TEST(Hamiltonian, ClassicalSpinOneBond) {
  // S = 1, q = 1: the bond Hamiltonian is the spin-2 projector.
  const Eigen::MatrixXd h(hamiltonian(1, 2, Boundary::Open, 1.0));
  EXPECT_LT((h - oracle::classical_projector(1, 2)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Hamiltonian, CouplingsAndErrors) {
  const Eigen::MatrixXd h(hamiltonian(2, 2, Boundary::Open, 1.0, {2.0, 3.0}));
  const Eigen::MatrixXd expected = 2.0 * oracle::classical_projector(2, 3) + 3.0 * oracle::classical_projector(2, 4);
  EXPECT_LT((h - expected).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_THROW(hamiltonian(1, 1, Boundary::Open, 1.0), DomainError);
  EXPECT_THROW(hamiltonian(1, 3, Boundary::Open, -1.0), DomainError);
  EXPECT_THROW(hamiltonian(2, 3, Boundary::Open, 1.0, {1.0}), DomainError);
}

TEST(Bonds, PeriodicAddsClosingBond) {
  EXPECT_EQ(chain_bonds(4, Boundary::Open).size(), 3u);
  const auto pbc = chain_bonds(4, Boundary::Periodic);
  ASSERT_EQ(pbc.size(), 4u);
  EXPECT_EQ(pbc.back(), std::make_pair(3, 0));
}

TEST(Divisibility, BondDivisor) {
  const SitePoly d = vbs_bond_divisor(1);
  const SitePoly expected = SitePoly::monomial(2, {1, 0, 0, 1}, LaurentQ::q_power(1)) -
                            SitePoly::monomial(2, {0, 1, 1, 0}, LaurentQ::q_power(-1));
  EXPECT_EQ(d, expected);
}

TEST(Divisibility, SmallSpins) {
  for (int s = 1; s <= 3; ++s) {
    const DivisibilityReport rep = check_divisibility(s);
    EXPECT_TRUE(rep.all_divisible()) << s;
    EXPECT_EQ(rep.divisible_count(), static_cast<std::size_t>((s + 1) * (s + 1)));
    for (const auto& e : rep.entries) EXPECT_EQ(e.quotient * vbs_bond_divisor(s), e.vector);
  }
  EXPECT_THROW(check_divisibility(5), DomainError);
}

TEST(Divisibility, VectorsAboveSpinAreNotDivisible) {
  // The top vector x_k^{2S} x_l^{2S} of V_{2S} has no factor of the bond divisor.
  const PolyDivision div = divide(SitePoly::monomial(2, {4, 0, 4, 0}, LaurentQ(1)), vbs_bond_divisor(2));
  EXPECT_FALSE(div.remainder.is_zero());
}
