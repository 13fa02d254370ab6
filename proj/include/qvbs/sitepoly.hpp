#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qvbs/errors.hpp"
#include "qvbs/laurent.hpp"

namespace qvbs {

/// Polynomial in the per-site variables x_l, y_l (l = 0..sites-1) with
/// Laurent-polynomial coefficients.
///
/// A monomial is stored as its exponent vector
/// (deg x_0, deg y_0, deg x_1, deg y_1, ...). Terms are ordered
/// lexicographically on that vector, largest first, so iteration starts at
/// the leading term used by division.
class SitePoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, LaurentQ, std::greater<>>;

  explicit SitePoly(int sites = 0) : sites_(sites) {
    if (sites < 0) throw DomainError("SitePoly: negative site count");
  }

  static SitePoly constant(int sites, LaurentQ c) {
    SitePoly p(sites);
    p.add_term(Exponents(static_cast<std::size_t>(2 * sites), 0), std::move(c));
    return p;
  }
  static SitePoly monomial(int sites, Exponents e, LaurentQ c) {
    SitePoly p(sites);
    p.check_exponents(e);
    p.add_term(std::move(e), std::move(c));
    return p;
  }
  /// x_site^dx y_site^dy
  static SitePoly site_monomial(int sites, int site, int dx, int dy, LaurentQ c = LaurentQ(1)) {
    Exponents e(static_cast<std::size_t>(2 * sites), 0);
    e.at(static_cast<std::size_t>(2 * site)) = dx;
    e.at(static_cast<std::size_t>(2 * site + 1)) = dy;
    return monomial(sites, std::move(e), std::move(c));
  }
  static SitePoly x(int sites, int site) { return site_monomial(sites, site, 1, 0); }
  static SitePoly y(int sites, int site) { return site_monomial(sites, site, 0, 1); }

  int sites() const { return sites_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  LaurentQ coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? LaurentQ() : it->second;
  }

  /// Adds c * monomial(e), dropping the term if it cancels.
  void add_term(const Exponents& e, const LaurentQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static int x_deg(const Exponents& e, int site) { return e[static_cast<std::size_t>(2 * site)]; }
  static int y_deg(const Exponents& e, int site) { return e[static_cast<std::size_t>(2 * site + 1)]; }

  /// True when every monomial has deg x_l + deg y_l == degree at every site.
  bool homogeneous_per_site(int degree) const {
    for (const auto& [e, c] : terms_) {
      for (int l = 0; l < sites_; ++l) {
        if (x_deg(e, l) + y_deg(e, l) != degree) return false;
      }
    }
    return true;
  }

  /// Total weight sum_l (deg x_l - deg y_l) of a monomial.
  static int weight(const Exponents& e) {
    int w = 0;
    for (std::size_t i = 0; i + 1 < e.size(); i += 2) w += e[i] - e[i + 1];
    return w;
  }

  SitePoly operator-() const {
    SitePoly r(sites_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }

  SitePoly& operator+=(const SitePoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SitePoly& operator-=(const SitePoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SitePoly& operator*=(const LaurentQ& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend SitePoly operator+(SitePoly a, const SitePoly& b) { return a += b; }
  friend SitePoly operator-(SitePoly a, const SitePoly& b) { return a -= b; }
  friend SitePoly operator*(SitePoly a, const LaurentQ& c) { return a *= c; }
  friend SitePoly operator*(const LaurentQ& c, SitePoly a) { return a *= c; }

  friend SitePoly operator*(const SitePoly& a, const SitePoly& b) {
    a.check_compatible(b);
    SitePoly r(a.sites_);
    Exponents e(static_cast<std::size_t>(2 * a.sites_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  SitePoly& operator*=(const SitePoly& o) { return *this = *this * o; }

  friend bool operator==(const SitePoly& a, const SitePoly& b) {
    return a.sites_ == b.sites_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SitePoly& a, const SitePoly& b) { return !(a == b); }

  /// Applies f to every coefficient (e.g. the bar involution).
  template <class F>
  SitePoly map_coefficients(F&& f) const {
    SitePoly r(sites_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  /// Text dump in canonical monomial order, e.g. "(q + q^-1)*x0^2*y1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (int l = 0; l < sites_; ++l) {
        for (int v = 0; v < 2; ++v) {
          const int d = e[static_cast<std::size_t>(2 * l + v)];
          if (d == 0) continue;
          if (!mono.empty()) mono += "*";
          mono += (v == 0 ? "x" : "y") + std::to_string(l);
          if (d != 1) mono += "^" + std::to_string(d);
        }
      }
      if (mono.empty()) {
        out += "(" + c.str() + ")";
      } else if (c.is_one()) {
        out += mono;
      } else {
        out += "(" + c.str() + ")*" + mono;
      }
    }
    return out;
  }

 private:
  void check_compatible(const SitePoly& o) const {
    if (o.sites_ != sites_) throw DomainError("SitePoly: mismatched site counts");
  }
  void check_exponents(const Exponents& e) const {
    if (e.size() != static_cast<std::size_t>(2 * sites_)) throw DomainError("SitePoly: exponent vector has wrong length");
    for (int d : e) {
      if (d < 0) throw DomainError("SitePoly: negative exponent");
    }
  }

  int sites_;
  TermMap terms_;
};

struct PolyDivision {
  SitePoly quotient;
  SitePoly remainder;
};

/// Multivariate division p = quotient * d + remainder in lexicographic order.
///
/// The leading coefficient of d must be a unit of Q[q, 1/q] (c * q^k); the
/// result then coincides with division over the field Q(q). A zero remainder
/// certifies that d divides p identically in q.
inline PolyDivision divide(const SitePoly& p, const SitePoly& d) {
  if (d.is_zero()) throw ArithmeticError("SitePoly division by zero");
  if (p.sites() != d.sites()) throw DomainError("SitePoly division: mismatched site counts");
  const auto& [lead_exp, lead_coeff] = *d.terms().begin();
  if (!lead_coeff.is_monomial()) {
    throw ArithmeticError("SitePoly division needs a unit leading coefficient, got " + lead_coeff.str());
  }
  const auto& lt = lead_coeff.terms().front();
  const LaurentQ lead_inv = LaurentQ::monomial(1 / lt.coeff, -lt.exp);

  SitePoly work = p;
  PolyDivision out{SitePoly(p.sites()), SitePoly(p.sites())};
  SitePoly::Exponents shift(lead_exp.size());
  while (!work.is_zero()) {
    const auto [e, c] = *work.terms().begin();
    bool divisible = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      shift[i] = e[i] - lead_exp[i];
      if (shift[i] < 0) divisible = false;
    }
    if (!divisible) {
      out.remainder.add_term(e, c);
      work.add_term(e, -c);
      continue;
    }
    const SitePoly step = SitePoly::monomial(p.sites(), shift, c * lead_inv);
    out.quotient += step;
    work -= step * d;
  }
  return out;
}

/// Whether a and b are proportional over Q(q) (both nonzero), via
/// cross-multiplication at a reference monomial.
inline bool proportional(const SitePoly& a, const SitePoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.size() != b.size()) return false;
  const auto& [ref, bref] = *b.terms().begin();
  const LaurentQ aref = a.coeff(ref);
  if (aref.is_zero()) return false;
  for (const auto& [e, ca] : a.terms()) {
    if (ca * bref != b.coeff(e) * aref) return false;
  }
  return true;
}

}  // namespace qvbs
