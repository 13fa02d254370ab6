#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qvbs/errors.hpp"

namespace qvbs {

namespace detail {

// Dense univariate polynomial over Q: index i holds the coefficient of q^i.
// Canonical dense values have a nonzero last entry; the zero polynomial is empty.
using Dense = std::vector<mpq_class>;

inline void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

// Long division p = quo * d + rem; `p` is replaced by the remainder.
inline Dense divmod_in_place(Dense& p, const Dense& d) {
  if (d.empty()) throw ArithmeticError("polynomial division by zero");
  trim(p);
  const int dd = degree(d);
  if (degree(p) < dd) return {};
  Dense quo(static_cast<std::size_t>(degree(p) - dd + 1));
  const mpq_class& lead = d.back();
  mpq_class t;
  for (int k = degree(p) - dd; k >= 0; --k) {
    const mpq_class& top = p[static_cast<std::size_t>(k + dd)];
    if (sgn(top) == 0) continue;
    t = top / lead;
    for (int i = 0; i <= dd; ++i) {
      if (sgn(d[static_cast<std::size_t>(i)]) != 0) p[static_cast<std::size_t>(k + i)] -= t * d[static_cast<std::size_t>(i)];
    }
    quo[static_cast<std::size_t>(k)] = t;
  }
  trim(p);
  trim(quo);
  return quo;
}

inline void make_monic(Dense& p) {
  if (p.empty()) return;
  const mpq_class lead = p.back();
  if (lead == 1) return;
  for (auto& c : p) c /= lead;
}

// Monic gcd; gcd(0, 0) is 0.
inline Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    divmod_in_place(a, b);
    make_monic(a);
    std::swap(a, b);
  }
  make_monic(a);
  return a;
}

}  // namespace detail

/// Laurent polynomial in q with exact rational coefficients.
///
/// Terms are kept sorted by increasing exponent and no stored coefficient is
/// zero, so structural equality is mathematical equality.
class LaurentQ {
 public:
  struct Term {
    int exp;
    mpq_class coeff;
  };

  LaurentQ() = default;
  LaurentQ(long c) : LaurentQ(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)
  explicit LaurentQ(const mpq_class& c) {
    if (sgn(c) != 0) terms_.push_back({0, c});
  }

  static LaurentQ monomial(const mpq_class& c, int exp) {
    LaurentQ r;
    if (sgn(c) != 0) r.terms_.push_back({exp, c});
    return r;
  }
  static LaurentQ q_power(int exp) { return monomial(mpq_class(1), exp); }

  /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
  static LaurentQ from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    LaurentQ r;
    for (auto& t : terms) {
      if (!r.terms_.empty() && r.terms_.back().exp == t.exp) {
        r.terms_.back().coeff += t.coeff;
      } else {
        r.terms_.push_back(std::move(t));
      }
    }
    r.drop_zeros();
    return r;
  }

  static LaurentQ from_dense(int lowest_exp, const detail::Dense& coeffs) {
    LaurentQ r;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (sgn(coeffs[i]) != 0) r.terms_.push_back({lowest_exp + static_cast<int>(i), coeffs[i]});
    }
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1; }

  int min_exp() const { return terms_.empty() ? 0 : terms_.front().exp; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.back().exp; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  mpq_class coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, int e) { return t.exp < e; });
    return (it != terms_.end() && it->exp == exp) ? it->coeff : mpq_class(0);
  }

  const mpq_class& leading_coeff() const { return terms_.back().coeff; }

  /// Dense coefficients of q^{-min_exp} * p, i.e. a polynomial with nonzero constant term.
  detail::Dense to_dense() const {
    detail::Dense d;
    if (terms_.empty()) return d;
    d.resize(static_cast<std::size_t>(max_exp() - min_exp() + 1));
    for (const auto& t : terms_) d[static_cast<std::size_t>(t.exp - min_exp())] = t.coeff;
    return d;
  }

  LaurentQ shifted(int k) const {
    LaurentQ r = *this;
    for (auto& t : r.terms_) t.exp += k;
    return r;
  }

  /// Image under the bar involution q -> 1/q.
  LaurentQ bar() const {
    LaurentQ r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->exp, it->coeff});
    return r;
  }

  LaurentQ pow(unsigned n) const {
    LaurentQ result(1);
    LaurentQ base = *this;
    while (n != 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return result;
  }

  LaurentQ operator-() const {
    LaurentQ r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  LaurentQ& operator+=(const LaurentQ& o) { return *this = add(*this, o, false); }
  LaurentQ& operator-=(const LaurentQ& o) { return *this = add(*this, o, true); }
  LaurentQ& operator*=(const LaurentQ& o) { return *this = *this * o; }
  LaurentQ& operator*=(const mpq_class& c) {
    if (sgn(c) == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coeff *= c;
    }
    return *this;
  }

  friend LaurentQ operator+(const LaurentQ& a, const LaurentQ& b) { return add(a, b, false); }
  friend LaurentQ operator-(const LaurentQ& a, const LaurentQ& b) { return add(a, b, true); }

  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) return scale(b, a.terms_[0].coeff, a.terms_[0].exp);
    if (b.is_monomial()) return scale(a, b.terms_[0].coeff, b.terms_[0].exp);
    const int lo = a.min_exp() + b.min_exp();
    detail::Dense acc(static_cast<std::size_t>(a.max_exp() + b.max_exp() - lo + 1));
    mpq_class tmp;
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        mpq_mul(tmp.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
        auto& slot = acc[static_cast<std::size_t>(s.exp + t.exp - lo)];
        mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
      }
    }
    return from_dense(lo, acc);
  }

  friend LaurentQ operator*(const LaurentQ& a, const mpq_class& c) { return scale(a, c, 0); }
  friend LaurentQ operator*(const mpq_class& c, const LaurentQ& a) { return scale(a, c, 0); }

  friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
  }
  friend bool operator!=(const LaurentQ& a, const LaurentQ& b) { return !(a == b); }

  /// Exact value at a rational point; q0 must be nonzero when negative powers occur.
  mpq_class eval(const mpq_class& q0) const {
    if (terms_.empty()) return mpq_class(0);
    if (sgn(q0) == 0) {
      if (min_exp() < 0) throw ArithmeticError("Laurent polynomial has a pole at q = 0");
      return coeff(0);
    }
    // Horner over the dense part, then multiply by q0^min_exp.
    mpq_class acc(0);
    auto it = terms_.rbegin();
    for (int e = max_exp(); e >= min_exp(); --e) {
      acc *= q0;
      if (it != terms_.rend() && it->exp == e) {
        acc += it->coeff;
        ++it;
      }
    }
    mpq_class scale_factor(1);
    mpq_class base = min_exp() < 0 ? mpq_class(1 / q0) : q0;
    for (int k = 0; k < std::abs(min_exp()); ++k) scale_factor *= base;
    return acc * scale_factor;
  }

  /// Plain floating-point evaluation (no exact intermediate).
  template <class Real>
  Real value(Real q0) const {
    Real acc = 0;
    for (const auto& t : terms_) acc += static_cast<Real>(t.coeff.get_d()) * pow_int(q0, t.exp);
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      mpq_class c = it->coeff;
      const bool neg = sgn(c) < 0;
      if (neg) c = -c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const bool unit = (c == 1);
      if (!unit || it->exp == 0) out += c.get_str();
      if (it->exp != 0) {
        if (!unit) out += "*";
        out += "q";
        if (it->exp != 1) out += "^" + std::to_string(it->exp);
      }
    }
    return out;
  }

 private:
  template <class Real>
  static Real pow_int(Real x, int e) {
    Real r = 1;
    Real b = e < 0 ? Real(1) / x : x;
    for (int k = 0; k < std::abs(e); ++k) r *= b;
    return r;
  }

  static LaurentQ scale(const LaurentQ& a, const mpq_class& c, int shift) {
    if (sgn(c) == 0) return {};
    LaurentQ r = a;
    for (auto& t : r.terms_) {
      t.exp += shift;
      if (c != 1) t.coeff *= c;
    }
    return r;
  }

  static LaurentQ add(const LaurentQ& a, const LaurentQ& b, bool subtract) {
    LaurentQ r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
        r.terms_.push_back({b.terms_[j].exp, subtract ? mpq_class(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        mpq_class c = subtract ? mpq_class(a.terms_[i].coeff - b.terms_[j].coeff)
                               : mpq_class(a.terms_[i].coeff + b.terms_[j].coeff);
        if (sgn(c) != 0) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void drop_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return sgn(t.coeff) == 0; }),
                 terms_.end());
  }

  std::vector<Term> terms_;
};

struct LaurentDivision {
  LaurentQ quotient;
  LaurentQ remainder;
};

/// Division in Q[q, 1/q] with a = quotient * b + remainder, where the
/// remainder is zero exactly when b divides a.
inline LaurentDivision divmod(const LaurentQ& a, const LaurentQ& b) {
  if (b.is_zero()) throw ArithmeticError("division of a Laurent polynomial by zero");
  if (a.is_zero()) return {};
  detail::Dense num = a.to_dense();
  const detail::Dense den = b.to_dense();
  detail::Dense quo = detail::divmod_in_place(num, den);
  return {LaurentQ::from_dense(a.min_exp() - b.min_exp(), quo), LaurentQ::from_dense(a.min_exp(), num)};
}

inline std::optional<LaurentQ> exact_quotient(const LaurentQ& a, const LaurentQ& b) {
  auto d = divmod(a, b);
  if (!d.remainder.is_zero()) return std::nullopt;
  return std::move(d.quotient);
}

/// a / b, throwing ArithmeticError when the division leaves a remainder.
inline LaurentQ divide_exact(const LaurentQ& a, const LaurentQ& b) {
  auto d = divmod(a, b);
  if (!d.remainder.is_zero()) {
    throw ArithmeticError("inexact division: (" + a.str() + ") / (" + b.str() + ") leaves remainder " +
                          d.remainder.str());
  }
  return std::move(d.quotient);
}

/// Monic gcd of the polynomial parts (q is a unit, so powers of q are ignored).
/// The result has a nonzero constant term; gcd(0, 0) is 0.
inline LaurentQ gcd(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_monomial() || b.is_monomial()) return LaurentQ(1);
  return LaurentQ::from_dense(0, detail::gcd(a.to_dense(), b.to_dense()));
}

}  // namespace qvbs
