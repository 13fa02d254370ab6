#pragma once

// Exact identity checks for the Weyl realization: U_q(su(2)) relations,
// q-boson relations, and the finite q-binomial product expansion.

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qvbs/laurent.hpp"
#include "qvbs/qnum.hpp"
#include "qvbs/sitepoly.hpp"
#include "qvbs/weyl.hpp"

namespace qvbs {

struct IdentityCheck {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // human-readable descriptions

  bool pass() const { return cases > 0 && failures.empty(); }
};

namespace detail {

inline std::vector<SitePoly> single_site_monomials(int max_degree) {
  std::vector<SitePoly> out;
  for (int total = 0; total <= max_degree; ++total) {
    for (int a = 0; a <= total; ++a) out.push_back(SitePoly::site_monomial(1, 0, a, total - a));
  }
  return out;
}

inline SitePoly divide_coefficients(const SitePoly& p, const LaurentQ& d) {
  SitePoly r(p.sites());
  for (const auto& [e, c] : p.terms()) r.add_term(e, divide_exact(c, d));
  return r;
}

inline void record(IdentityCheck& check, bool ok, const SitePoly& p, const std::string& what) {
  ++check.cases;
  if (!ok) check.failures.push_back(what + " fails on " + p.str());
}

}  // namespace detail

/// [X+, X-] = (q^H - q^{-H}) / (q - q^{-1}) and [H, X+-] = +-2 X+- on every
/// monomial x^a y^b with a + b <= max_degree.
inline IdentityCheck check_uq_relations(int max_degree = 8) {
  IdentityCheck check{"U_q(su(2)) commutation relations", 0, {}};
  for (const SitePoly& p : detail::single_site_monomials(max_degree)) {
    auto g = [](const SitePoly& v, Generator x) { return apply_generator(v, x, 0); };
    const SitePoly comm = g(g(p, Generator::XMinus), Generator::XPlus) - g(g(p, Generator::XPlus), Generator::XMinus);
    const SitePoly rhs = detail::divide_coefficients(g(p, Generator::QH) - g(p, Generator::QHInv), q_difference());
    detail::record(check, comm == rhs, p, "[X+,X-]");
    for (auto [x, sign] : {std::pair{Generator::XPlus, 2}, std::pair{Generator::XMinus, -2}}) {
      const SitePoly hx = g(g(p, x), Generator::H) - g(g(p, Generator::H), x);
      detail::record(check, hx == g(p, x) * LaurentQ(sign), p, "[H," + to_string(x) + "]");
    }
  }
  return check;
}

/// aa^dag - q a^dag a = q^{-N_a} (same for b), [N, a] = -a, [N, a^dag] = a^dag,
/// and X+ = a^dag b, X- = b^dag a, H = N_a - N_b on monomials of degree <= max_degree.
inline IdentityCheck check_boson_relations(int max_degree = 8) {
  IdentityCheck check{"q-boson relations", 0, {}};
  auto op = [](const SitePoly& v, BosonOp o) { return apply_boson(v, o, 0); };
  const LaurentQ q = LaurentQ::q_power(1);
  for (const SitePoly& p : detail::single_site_monomials(max_degree)) {
    for (auto [ann, cre, num, qneg, label] :
         {std::tuple{BosonOp::A, BosonOp::ADag, BosonOp::Na, BosonOp::QNegNa, "a"},
          std::tuple{BosonOp::B, BosonOp::BDag, BosonOp::Nb, BosonOp::QNegNb, "b"}}) {
      const SitePoly lhs = op(op(p, cre), ann) - op(op(p, ann), cre) * q;
      detail::record(check, lhs == op(p, qneg), p, std::string(label) + " a^dag - q a^dag a");
      detail::record(check, op(op(p, ann), num) - op(op(p, num), ann) == -op(p, ann), p, std::string("[N,") + label + "]");
      detail::record(check, op(op(p, cre), num) - op(op(p, num), cre) == op(p, cre), p, std::string("[N,") + label + "^dag]");
    }
    detail::record(check, op(op(p, BosonOp::B), BosonOp::ADag) == apply_generator(p, Generator::XPlus, 0), p, "X+ = a^dag b");
    detail::record(check, op(op(p, BosonOp::A), BosonOp::BDag) == apply_generator(p, Generator::XMinus, 0), p, "X- = b^dag a");
    detail::record(check, op(p, BosonOp::Na) - op(p, BosonOp::Nb) == apply_generator(p, Generator::H, 0), p, "H = N_a - N_b");
  }
  return check;
}

/// prod_{j=1}^m (1 - z q^{2j-2}) = sum_k (-z)^k q^{k(m-1)} [m choose k], coefficientwise in z.
inline IdentityCheck check_product_identity(int max_m = 6) {
  IdentityCheck check{"q-binomial product expansion", 0, {}};
  for (int m = 0; m <= max_m; ++m) {
    std::vector<LaurentQ> lhs{LaurentQ(1)};  // coefficients of z^0, z^1, ...
    for (int j = 1; j <= m; ++j) {
      std::vector<LaurentQ> next(lhs.size() + 1);
      for (std::size_t k = 0; k < lhs.size(); ++k) {
        next[k] += lhs[k];
        next[k + 1] -= lhs[k].shifted(2 * j - 2);
      }
      lhs = std::move(next);
    }
    bool ok = true;
    for (int k = 0; k <= m; ++k) {
      LaurentQ rhs = q_binomial(m, k).shifted(k * (m - 1));
      if (k % 2 != 0) rhs = -rhs;
      ok = ok && lhs[static_cast<std::size_t>(k)] == rhs;
    }
    ++check.cases;
    if (!ok) check.failures.push_back("product identity fails at m=" + std::to_string(m));
  }
  return check;
}

}  // namespace qvbs
