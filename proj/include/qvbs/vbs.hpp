#pragma once

// Schwinger-boson VBS states expanded in the Weyl picture, and the check
// that every bond projector pi_J, S+1 <= J <= 2S, annihilates them.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qvbs/cg.hpp"
#include "qvbs/errors.hpp"
#include "qvbs/sitepoly.hpp"
#include "qvbs/state.hpp"
#include "qvbs/surd.hpp"
#include "qvbs/weyl.hpp"

namespace qvbs {

/// prod_{m=1}^{S} (q^m x_k y_l - q^{-m} y_k x_l) embedded in an L-site polynomial.
inline SitePoly bond_factor(int spin, int sites, int k, int l) {
  SitePoly p = SitePoly::constant(sites, LaurentQ(1));
  for (int m = 1; m <= spin; ++m) {
    SitePoly::Exponents xy(static_cast<std::size_t>(2 * sites), 0);
    SitePoly::Exponents yx = xy;
    xy[static_cast<std::size_t>(2 * k)] += 1;
    xy[static_cast<std::size_t>(2 * l + 1)] += 1;
    yx[static_cast<std::size_t>(2 * k + 1)] += 1;
    yx[static_cast<std::size_t>(2 * l)] += 1;
    SitePoly factor(sites);
    factor.add_term(xy, LaurentQ::q_power(m));
    factor.add_term(yx, -LaurentQ::q_power(-m));
    p *= factor;
  }
  return p;
}

inline void check_state_args(int spin, int length, int min_length) {
  if (spin < 1) throw DomainError("spin must be >= 1");
  if (length < min_length) throw DomainError("chain length must be >= " + std::to_string(min_length));
}

/// Periodic VBS polynomial prod_k bond(k, k+1) with site L identified with site 1.
inline SitePoly pbc_polynomial(int spin, int length) {
  check_state_args(spin, length, 2);
  check_budget(checked_pow(static_cast<std::size_t>(2 * spin + 1), length), 512, "VBS polynomial (2S+1)^L");
  SitePoly p = SitePoly::constant(length, LaurentQ(1));
  for (int k = 0; k < length; ++k) p *= bond_factor(spin, length, k, (k + 1) % length);
  return p;
}

inline void check_boundary_index(int spin, int p, const char* name) {
  if (p < 1 || p > spin + 1) {
    throw DomainError(std::string(name) + " must lie in 1.." + std::to_string(spin + 1));
  }
}

/// Open-chain polynomial x_1^{S-p1+1} y_1^{p1-1} prod_k bond(k, k+1) x_L^{p2-1} y_L^{S-p2+1},
/// without the sqrt q-binomial boundary prefactors.
inline SitePoly open_polynomial(int spin, int length, int p1, int p2) {
  check_state_args(spin, length, 1);
  check_boundary_index(spin, p1, "p1");
  check_boundary_index(spin, p2, "p2");
  check_budget(checked_pow(static_cast<std::size_t>(2 * spin + 1), length), 512, "VBS polynomial (2S+1)^L");
  SitePoly p = SitePoly::site_monomial(length, 0, spin - p1 + 1, p1 - 1);
  for (int k = 0; k + 1 < length; ++k) p *= bond_factor(spin, length, k, k + 1);
  p *= SitePoly::site_monomial(length, length - 1, p2 - 1, spin - p2 + 1);
  return p;
}

/// Periodic VBS ground state in the normalized spin basis.
inline StateVector<Surd> build_pbc(int spin, int length) { return poly_to_spin(pbc_polynomial(spin, length), spin); }

/// Open-chain VBS state |Psi>_{p1,p2}, including the boundary factors
/// [S choose p1-1]^{1/2} [S choose p2-1]^{1/2}.
inline StateVector<Surd> build_open(int spin, int length, int p1, int p2) {
  StateVector<Surd> s = poly_to_spin(open_polynomial(spin, length, p1, p2), spin);
  const Surd prefactor = Surd::sqrt_q_binomial(spin, p1 - 1) * Surd::sqrt_q_binomial(spin, p2 - 1);
  for (auto& a : s.amplitudes()) {
    if (!a.is_zero()) a = a * prefactor;
  }
  return s;
}

/// Cyclic shift: result(m_1..m_L) = s(m_{1+shift}..m_{L+shift}).
template <class Scalar>
StateVector<Scalar> translate(const StateVector<Scalar>& s, int shift) {
  StateVector<Scalar> r(s.spin(), s.length());
  const int len = s.length();
  std::vector<int> src(static_cast<std::size_t>(len));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto ms = s.config(i);
    for (int l = 0; l < len; ++l) src[static_cast<std::size_t>(l)] = ms[static_cast<std::size_t>(((l + shift) % len + len) % len)];
    r[i] = s[s.index(src)];
  }
  return r;
}

/// Reversal with spin flip: result(m_1..m_L) = s(-m_L..-m_1).
template <class Scalar>
StateVector<Scalar> reverse_flip(const StateVector<Scalar>& s) {
  StateVector<Scalar> r(s.spin(), s.length());
  std::vector<int> src(static_cast<std::size_t>(s.length()));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto ms = s.config(i);
    for (int l = 0; l < s.length(); ++l) src[static_cast<std::size_t>(l)] = -ms[static_cast<std::size_t>(s.length() - 1 - l)];
    r[i] = s[s.index(src)];
  }
  return r;
}

/// Spin flip alone: result(m) = s(-m).
template <class Scalar>
StateVector<Scalar> flip(const StateVector<Scalar>& s) {
  StateVector<Scalar> r(s.spin(), s.length());
  std::vector<int> src(static_cast<std::size_t>(s.length()));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto ms = s.config(i);
    for (int l = 0; l < s.length(); ++l) src[static_cast<std::size_t>(l)] = -ms[static_cast<std::size_t>(l)];
    r[i] = s[s.index(src)];
  }
  return r;
}

struct BondResidual {
  int site_k = 0;
  int site_l = 0;
  int total = 0;  // J
  bool exact_zero = false;
  double residual = 0.0;  // max |pi_J psi| / max |psi| at the sample q
};

struct AnnihilationReport {
  int spin = 0;
  int length = 0;
  Boundary boundary = Boundary::Periodic;
  double sample_q = 0.0;
  std::vector<BondResidual> bonds;

  bool all_exact_zero() const {
    return std::all_of(bonds.begin(), bonds.end(), [](const BondResidual& b) { return b.exact_zero; });
  }
  bool any_exact_zero() const {
    return std::any_of(bonds.begin(), bonds.end(), [](const BondResidual& b) { return b.exact_zero; });
  }
  double max_residual() const {
    double m = 0;
    for (const auto& b : bonds) m = std::max(m, b.residual);
    return m;
  }
};

namespace detail {

/// Monomial-basis amplitudes of s, rescaled so that they are Laurent
/// polynomials: divide by a reference amplitude and clear denominators.
inline std::vector<LaurentQ> cleared_monomial_amplitudes(const StateVector<Surd>& s) {
  std::size_t ref = s.dim();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!s[i].is_zero()) {
      ref = i;
      break;
    }
  }
  std::vector<LaurentQ> out(s.dim());
  if (ref == s.dim()) return out;
  const Surd ref_mono = s[ref] / configuration_normalization(s.spin(), s.config(ref));
  std::vector<RatQ> ratios(s.dim());
  LaurentQ lcm(1);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s[i].is_zero()) continue;
    const Surd mono = s[i] / configuration_normalization(s.spin(), s.config(i));
    ratios[i] = (mono / ref_mono).as_ratq();
    const LaurentQ& d = ratios[i].den();
    if (!d.is_one()) lcm = divide_exact(lcm * d, gcd(lcm, d));
  }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!ratios[i].is_zero()) out[i] = ratios[i].num() * divide_exact(lcm, ratios[i].den());
  }
  return out;
}

}  // namespace detail

inline constexpr double kDefaultSampleQ = 0.7;

/// Applies pi_J(k, l) for every bond of the chain and every J in S+1..2S.
///
/// The exact test runs in the monomial basis with the projector's cleared
/// Laurent numerators, so a zero residual is an identity in q. The numeric
/// residual is measured in the normalized spin basis at `sample_q`.
inline AnnihilationReport verify_annihilation(const StateVector<Surd>& s, Boundary boundary,
                                              double sample_q = kDefaultSampleQ) {
  const int spin = s.spin();
  const int len = s.length();
  if (len < 2) throw DomainError("verify_annihilation: need at least two sites");
  AnnihilationReport report;
  report.spin = spin;
  report.length = len;
  report.boundary = boundary;
  report.sample_q = sample_q;

  const auto mono = detail::cleared_monomial_amplitudes(s);
  const StateVector<double> numeric = evaluate<double>(s, sample_q);
  double norm = 0;
  for (double v : numeric.amplitudes()) norm = std::max(norm, std::abs(v));

  const auto d = static_cast<std::size_t>(2 * spin + 1);
  std::vector<std::size_t> stride(static_cast<std::size_t>(len));
  for (int l = len - 1, w = 1; l >= 0; --l) {
    stride[static_cast<std::size_t>(l)] = static_cast<std::size_t>(w);
    w *= static_cast<int>(d);
  }

  for (const auto& [k, l] : chain_bonds(len, boundary)) {
    const std::size_t sk = stride[static_cast<std::size_t>(k)];
    const std::size_t sl = stride[static_cast<std::size_t>(l)];
    for (int j = spin + 1; j <= 2 * spin; ++j) {
      const Projector& pi = projector(spin, j);
      const Eigen::MatrixXd pin = pi.numeric(sample_q);
      std::vector<LaurentQ> out(s.dim());
      std::vector<double> out_num(s.dim(), 0.0);
      for (std::size_t col = 0; col < s.dim(); ++col) {
        if (mono[col].is_zero()) continue;
        const std::size_t dk = (col / sk) % d;
        const std::size_t dl = (col / sl) % d;
        const std::size_t base = col - dk * sk - dl * sl;
        const std::size_t local_col = dk * d + dl;
        for (std::size_t r = 0; r < d * d; ++r) {
          const LaurentQ& c = pi.cleared(r, local_col);
          if (c.is_zero()) continue;
          const std::size_t row = base + (r / d) * sk + (r % d) * sl;
          out[row] += c * mono[col];
          out_num[row] += pin(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(local_col)) * numeric[col];
        }
      }
      BondResidual b;
      b.site_k = k;
      b.site_l = l;
      b.total = j;
      b.exact_zero = std::all_of(out.begin(), out.end(), [](const LaurentQ& v) { return v.is_zero(); });
      double m = 0;
      for (double v : out_num) m = std::max(m, std::abs(v));
      b.residual = norm > 0 ? m / norm : m;
      report.bonds.push_back(b);
    }
  }
  return report;
}

/// Negative control: integer amplitudes drawn uniformly from [-9, 9] \ {0} on
/// every weight-zero monomial, reproducible from `seed`.
inline StateVector<Surd> random_weight_zero_state(int spin, int length, std::uint64_t seed) {
  check_state_args(spin, length, 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(1, 9);
  std::bernoulli_distribution sign(0.5);
  StateVector<Surd> s(spin, length);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s.weight(i) != 0) continue;
    const long c = (sign(rng) ? 1 : -1) * dist(rng);
    s[i] = Surd(LaurentQ(c)) * configuration_normalization(spin, s.config(i));
  }
  return s;
}

}  // namespace qvbs
