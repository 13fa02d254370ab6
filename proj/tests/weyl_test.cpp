// Difference-operator realization of U_q(su(2)), the coproduct, q-bosons,
// and the spin-basis normalization.

#include <gtest/gtest.h>

#include "qvbs/algebra.hpp"
#include "qvbs/weyl.hpp"

using namespace qvbs;

TEST(Weyl, GeneratorsOnMonomials) {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      const SitePoly p = SitePoly::site_monomial(1, 0, a, b);
      const SitePoly up = b > 0 ? SitePoly::site_monomial(1, 0, a + 1, b - 1, q_integer(b)) : SitePoly(1);
      const SitePoly down = a > 0 ? SitePoly::site_monomial(1, 0, a - 1, b + 1, q_integer(a)) : SitePoly(1);
      EXPECT_EQ(apply_generator(p, Generator::XPlus, 0), up) << a << " " << b;
      EXPECT_EQ(apply_generator(p, Generator::XMinus, 0), down) << a << " " << b;
      EXPECT_EQ(apply_generator(p, Generator::QH, 0), p * LaurentQ::q_power(a - b));
      EXPECT_EQ(apply_generator(p, Generator::H, 0), p * LaurentQ(a - b));
    }
  }
}

TEST(Weyl, CoproductCommutator) {
  // [Delta X+, Delta X-] = (Delta q^H - Delta q^-H) / (q - q^-1) on two-site monomials.
  // Sites of degree 4 (S = 2) so that q^{H/2} acts with integer powers.
  for (int a = 0; a <= 4; ++a) {
    for (int c = 0; c <= 4; ++c) {
      const SitePoly p = SitePoly::monomial(2, {a, 4 - a, c, 4 - c}, LaurentQ(1));
      auto d = [](const SitePoly& v, Generator g) { return coproduct_apply(v, g, 0, 1); };
      const SitePoly lhs = d(d(p, Generator::XMinus), Generator::XPlus) - d(d(p, Generator::XPlus), Generator::XMinus);
      const int h = 2 * a + 2 * c - 8;
      const SitePoly rhs = p * q_integer(std::abs(h)) * LaurentQ(h < 0 ? -1 : 1);
      EXPECT_EQ(lhs, rhs) << a << " " << c;
    }
  }
}

TEST(Weyl, TopTwoSiteVectorIsHighestWeight) {
  for (int s = 1; s <= 3; ++s) {
    const SitePoly top = SitePoly::monomial(2, {2 * s, 0, 2 * s, 0}, LaurentQ(1));
    EXPECT_TRUE(coproduct_apply(top, Generator::XPlus, 0, 1).is_zero());
  }
}

TEST(Weyl, SpinBasisRoundTrip) {
  const SitePoly p = SitePoly::monomial(2, {3, 1, 0, 4}, LaurentQ::q_power(2)) + SitePoly::monomial(2, {2, 2, 1, 3}, LaurentQ(-3));
  const StateVector<Surd> s = poly_to_spin(p, 2);
  EXPECT_EQ(spin_to_poly(s), p);
  const std::vector<int> ms{1, -2};
  const Surd amp = s[s.index(ms)];
  EXPECT_EQ(amp, Surd(RatQ(LaurentQ::q_power(2))) * spin_normalization(2, 1) * spin_normalization(2, -2));
}

TEST(Weyl, LadderMatrixElementsInSpinBasis) {
  // X+ |S,m> = sqrt([S-m][S+m+1]) |S,m+1> once the normalization is applied.
  const int s = 3;
  const double q = 0.8;
  for (int m = -s; m < s; ++m) {
    const SitePoly basis = SitePoly::site_monomial(1, 0, s + m, s - m);
    const StateVector<Surd> in = poly_to_spin(basis, s);
    const StateVector<Surd> out = poly_to_spin(apply_generator(basis, Generator::XPlus, 0), s);
    const std::vector<int> from{m}, to{m + 1};
    const double ratio = out[out.index(to)].value(q) / in[in.index(from)].value(q);
    EXPECT_NEAR(ratio, std::sqrt(q_integer_value(s - m, q) * q_integer_value(s + m + 1, q)), 1e-12);
  }
}

TEST(Weyl, IdentitySuites) {
  const IdentityCheck uq = check_uq_relations(6);
  const IdentityCheck boson = check_boson_relations(6);
  const IdentityCheck product = check_product_identity(6);
  EXPECT_TRUE(uq.pass()) << (uq.failures.empty() ? "" : uq.failures.front());
  EXPECT_TRUE(boson.pass()) << (boson.failures.empty() ? "" : boson.failures.front());
  EXPECT_TRUE(product.pass());
  EXPECT_EQ(product.cases, 7u);
}

TEST(Weyl, RejectsBadSites) {
  EXPECT_THROW(apply_generator(SitePoly::site_monomial(1, 0, 1, 1), Generator::XPlus, 1), DomainError);
  EXPECT_THROW(poly_to_spin(SitePoly::site_monomial(1, 0, 1, 0), 1), DomainError);
}
