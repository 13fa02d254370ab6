#pragma once

// Weyl (difference-operator) realization of U_q(su(2)) on polynomials in
// x_l, y_l, its two-site coproduct, and the passage between monomials and the
// normalized spin basis |S,m>.

#include <map>
#include <string>
#include <utility>

#include "qvbs/errors.hpp"
#include "qvbs/qnum.hpp"
#include "qvbs/sitepoly.hpp"
#include "qvbs/state.hpp"
#include "qvbs/surd.hpp"

namespace qvbs {

enum class Generator {
  XPlus,
  XMinus,
  H,      // additive weight: deg x - deg y
  QH,     // q^H
  QHInv,  // q^{-H}
};

inline std::string to_string(Generator g) {
  switch (g) {
    case Generator::XPlus: return "X+";
    case Generator::XMinus: return "X-";
    case Generator::H: return "H";
    case Generator::QH: return "q^H";
    case Generator::QHInv: return "q^-H";
  }
  return "?";
}

namespace detail {

inline void check_site(const SitePoly& p, int site) {
  if (site < 0 || site >= p.sites()) throw DomainError("site index out of range");
}

/// Dilation D_p^{v}: f(.., v, ..) -> f(.., p v, ..) with p = q^power, v = x (var 0) or y (var 1).
inline SitePoly dilate(const SitePoly& p, int site, int var, int power) {
  SitePoly r(p.sites());
  for (const auto& [e, c] : p.terms()) {
    const int d = e[static_cast<std::size_t>(2 * site + var)];
    r.add_term(e, c.shifted(power * d));
  }
  return r;
}

/// (D_q^{v} - D_{q^{-1}}^{v}) / (q - q^{-1}); the division is exact on each monomial.
inline SitePoly q_derivative_numerator(const SitePoly& p, int site, int var) {
  SitePoly diff = dilate(p, site, var, 1) - dilate(p, site, var, -1);
  const LaurentQ denom = q_difference();
  SitePoly r(p.sites());
  for (const auto& [e, c] : diff.terms()) r.add_term(e, divide_exact(c, denom));
  return r;
}

/// Multiplies by x^dx y^dy at a site; negative shifts must land on nonnegative exponents.
inline SitePoly shift_monomials(const SitePoly& p, int site, int dx, int dy) {
  SitePoly r(p.sites());
  for (const auto& [e, c] : p.terms()) {
    SitePoly::Exponents f = e;
    f[static_cast<std::size_t>(2 * site)] += dx;
    f[static_cast<std::size_t>(2 * site + 1)] += dy;
    if (f[static_cast<std::size_t>(2 * site)] < 0 || f[static_cast<std::size_t>(2 * site + 1)] < 0) {
      throw ArithmeticError("difference operator produced a negative exponent");
    }
    r.add_term(f, c);
  }
  return r;
}

/// q^{sign * H/2} at one site: multiplication by q^{sign * (deg x - deg y)/2}.
inline SitePoly q_half_weight(const SitePoly& p, int site, int sign) {
  SitePoly r(p.sites());
  for (const auto& [e, c] : p.terms()) {
    const int h = SitePoly::x_deg(e, site) - SitePoly::y_deg(e, site);
    if (h % 2 != 0) throw DomainError("q^{H/2} needs an even weight (integer spin) at every site");
    r.add_term(e, c.shifted(sign * h / 2));
  }
  return r;
}

}  // namespace detail

/// One generator of U_q(su(2)) acting at `site` through difference operators:
///   X+ = x/((q - 1/q) y) (D_q^y - D_{1/q}^y),  X- = y/((q - 1/q) x) (D_q^x - D_{1/q}^x),
///   q^H = D_q^x D_{1/q}^y.
inline SitePoly apply_generator(const SitePoly& p, Generator g, int site) {
  detail::check_site(p, site);
  switch (g) {
    case Generator::XPlus:
      return detail::shift_monomials(detail::q_derivative_numerator(p, site, 1), site, 1, -1);
    case Generator::XMinus:
      return detail::shift_monomials(detail::q_derivative_numerator(p, site, 0), site, -1, 1);
    case Generator::QH:
      return detail::dilate(detail::dilate(p, site, 0, 1), site, 1, -1);
    case Generator::QHInv:
      return detail::dilate(detail::dilate(p, site, 0, -1), site, 1, 1);
    case Generator::H: {
      SitePoly r(p.sites());
      for (const auto& [e, c] : p.terms()) {
        r.add_term(e, c * mpq_class(SitePoly::x_deg(e, site) - SitePoly::y_deg(e, site)));
      }
      return r;
    }
  }
  throw DomainError("unknown generator");
}

/// Two-site action through the coproduct:
///   Delta(X+-) = X+- (x) q^{H/2} + q^{-H/2} (x) X+-,  Delta(H) = H (x) 1 + 1 (x) H,
/// and Delta(q^{+-H}) = q^{+-H} (x) q^{+-H}.
inline SitePoly coproduct_apply(const SitePoly& p, Generator g, int site_k, int site_l) {
  detail::check_site(p, site_k);
  detail::check_site(p, site_l);
  if (site_k == site_l) throw DomainError("coproduct_apply: sites must differ");
  switch (g) {
    case Generator::XPlus:
    case Generator::XMinus:
      return apply_generator(detail::q_half_weight(p, site_l, 1), g, site_k) +
             detail::q_half_weight(apply_generator(p, g, site_l), site_k, -1);
    case Generator::H:
      return apply_generator(p, g, site_k) + apply_generator(p, g, site_l);
    case Generator::QH:
    case Generator::QHInv:
      return apply_generator(apply_generator(p, g, site_k), g, site_l);
  }
  throw DomainError("unknown generator");
}

/// q-boson operators of one site in the Weyl realization.
enum class BosonOp {
  A,       // a = (D_q^x - D_{1/q}^x) / ((q - 1/q) x)
  ADag,    // multiplication by x
  B,       // b, same with y
  BDag,    // multiplication by y
  Na,      // number operator: deg x
  Nb,      // deg y
  QNegNa,  // q^{-N_a}
  QNegNb,  // q^{-N_b}
};

inline SitePoly apply_boson(const SitePoly& p, BosonOp op, int site) {
  detail::check_site(p, site);
  switch (op) {
    case BosonOp::A: return detail::shift_monomials(detail::q_derivative_numerator(p, site, 0), site, -1, 0);
    case BosonOp::ADag: return detail::shift_monomials(p, site, 1, 0);
    case BosonOp::B: return detail::shift_monomials(detail::q_derivative_numerator(p, site, 1), site, 0, -1);
    case BosonOp::BDag: return detail::shift_monomials(p, site, 0, 1);
    case BosonOp::QNegNa: return detail::dilate(p, site, 0, -1);
    case BosonOp::QNegNb: return detail::dilate(p, site, 1, -1);
    case BosonOp::Na:
    case BosonOp::Nb: {
      const int var = op == BosonOp::Na ? 0 : 1;
      SitePoly r(p.sites());
      for (const auto& [e, c] : p.terms()) r.add_term(e, c * mpq_class(e[static_cast<std::size_t>(2 * site + var)]));
      return r;
    }
  }
  throw DomainError("unknown boson operator");
}

/// sqrt([S+m]! [S-m]!): the factor between x^{S+m} y^{S-m} and |S,m>.
inline Surd spin_normalization(int spin, int m) {
  std::map<int, int> e;
  for (int k = 2; k <= spin + m; ++k) e[k] += 1;
  for (int k = 2; k <= spin - m; ++k) e[k] += 1;
  return Surd::sqrt_of(e);
}

/// Product over sites of spin_normalization for a configuration.
inline Surd configuration_normalization(int spin, std::span<const int> ms) {
  std::map<int, int> e;
  for (int m : ms) {
    for (int k = 2; k <= spin + m; ++k) e[k] += 1;
    for (int k = 2; k <= spin - m; ++k) e[k] += 1;
  }
  return Surd::sqrt_of(e);
}

/// Rewrites a polynomial of per-site degree 2S in the normalized spin basis:
/// x^{S+m} y^{S-m} = sqrt([S+m]! [S-m]!) |S,m>.
inline StateVector<Surd> poly_to_spin(const SitePoly& p, int spin) {
  if (spin < 1) throw DomainError("poly_to_spin: spin must be >= 1");
  if (p.sites() < 1) throw DomainError("poly_to_spin: need at least one site");
  if (!p.homogeneous_per_site(2 * spin)) {
    throw DomainError("poly_to_spin: polynomial is not homogeneous of degree 2S at every site");
  }
  StateVector<Surd> s(spin, p.sites());
  std::vector<int> ms(static_cast<std::size_t>(p.sites()));
  for (const auto& [e, c] : p.terms()) {
    for (int l = 0; l < p.sites(); ++l) ms[static_cast<std::size_t>(l)] = SitePoly::x_deg(e, l) - spin;
    s[s.index(ms)] = Surd(RatQ(c)) * configuration_normalization(spin, ms);
  }
  return s;
}

/// Monomial-basis amplitudes of a spin-basis state (the inverse normalization).
/// Throws when an amplitude does not become radical-free.
inline StateVector<RatQ> spin_to_monomial_amplitudes(const StateVector<Surd>& s) {
  StateVector<RatQ> r(s.spin(), s.length());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s[i].is_zero()) continue;
    const auto ms = s.config(i);
    r[i] = (s[i] / configuration_normalization(s.spin(), ms)).as_ratq();
  }
  return r;
}

/// Inverse of poly_to_spin. Throws if some amplitude is not a Laurent
/// polynomial times the basis normalization.
inline SitePoly spin_to_poly(const StateVector<Surd>& s) {
  const StateVector<RatQ> mono = spin_to_monomial_amplitudes(s);
  SitePoly p(s.length());
  SitePoly::Exponents e(static_cast<std::size_t>(2 * s.length()));
  for (std::size_t i = 0; i < mono.dim(); ++i) {
    if (mono[i].is_zero()) continue;
    const auto ms = s.config(i);
    for (int l = 0; l < s.length(); ++l) {
      e[static_cast<std::size_t>(2 * l)] = s.spin() + ms[static_cast<std::size_t>(l)];
      e[static_cast<std::size_t>(2 * l + 1)] = s.spin() - ms[static_cast<std::size_t>(l)];
    }
    p.add_term(e, mono[i].as_laurent());
  }
  return p;
}

}  // namespace qvbs
