#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qvbs/errors.hpp"
#include "qvbs/qnum.hpp"
#include "qvbs/ratq.hpp"

namespace qvbs {

/// Squarefree radicand built from the atoms q and [n]_q (n >= 2).
///
/// The atoms are multiplicatively independent modulo squares in Q(q), so a
/// product of distinct atoms is never a square times another such product.
/// That makes the sorted atom list a canonical label for the square class.
class Radicand {
 public:
  static constexpr int kQ = 0;  // atom id for q itself; n >= 2 stands for [n]_q

  Radicand() = default;

  bool is_one() const { return atoms_.empty(); }
  const std::vector<int>& atoms() const { return atoms_; }

  static LaurentQ atom_value(int atom) { return atom == kQ ? LaurentQ::q_power(1) : q_integer(atom); }

  template <class Real>
  static Real atom_numeric(int atom, Real q) {
    return atom == kQ ? q : q_integer_value(atom, q);
  }

  template <class Real>
  Real value(Real q) const {
    Real r = 1;
    for (int a : atoms_) r *= atom_numeric(a, q);
    return r;
  }

  LaurentQ product() const {
    LaurentQ r(1);
    for (int a : atoms_) r *= atom_value(a);
    return r;
  }

  std::string str() const {
    std::string s;
    for (int a : atoms_) {
      if (!s.empty()) s += "*";
      s += a == kQ ? std::string("q") : "[" + std::to_string(a) + "]";
    }
    return s.empty() ? "1" : s;
  }

  /// sqrt(x) sqrt(y) = extra * sqrt(r) with r squarefree.
  static std::pair<Radicand, LaurentQ> multiply(const Radicand& a, const Radicand& b) {
    Radicand r;
    LaurentQ extra(1);
    const auto& x = a.atoms_;
    const auto& y = b.atoms_;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i] < y[j])) {
        r.atoms_.push_back(x[i++]);
      } else if (i == x.size() || y[j] < x[i]) {
        r.atoms_.push_back(y[j++]);
      } else {
        extra *= atom_value(x[i]);
        ++i;
        ++j;
      }
    }
    return {std::move(r), std::move(extra)};
  }

  friend bool operator==(const Radicand&, const Radicand&) = default;

 private:
  friend class Surd;
  std::vector<int> atoms_;  // sorted, distinct
};

/// Exact number of the form c * sqrt(R) with c in Q(q) and R a Radicand.
///
/// Products of surds stay surds; sums are defined only when the radicands
/// agree (or one side is zero), which is all that normalized spin-basis
/// amplitudes ever need.
class Surd {
 public:
  Surd() = default;
  Surd(long c) : coeff_(c) {}  // NOLINT(google-explicit-constructor)
  Surd(RatQ c) : coeff_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  Surd(LaurentQ c) : coeff_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  Surd(RatQ c, Radicand r) : coeff_(std::move(c)), rad_(std::move(r)) {
    if (coeff_.is_zero()) rad_ = Radicand();
  }

  /// sqrt of prod atom^exponent; exponents may be negative.
  static Surd sqrt_of(const std::map<int, int>& atom_exponents) {
    LaurentQ num(1);
    LaurentQ den(1);
    Radicand rad;
    for (const auto& [atom, e] : atom_exponents) {
      if (atom != Radicand::kQ && atom < 2) continue;  // [1] = 1
      const int half = e >= 0 ? e / 2 : -((-e + 1) / 2);
      const int rem = e - 2 * half;
      if (half > 0) num *= Radicand::atom_value(atom).pow(static_cast<unsigned>(half));
      if (half < 0) den *= Radicand::atom_value(atom).pow(static_cast<unsigned>(-half));
      if (rem == 1) rad.atoms_.push_back(atom);
    }
    std::sort(rad.atoms_.begin(), rad.atoms_.end());
    return Surd(RatQ(num, den), rad);
  }

  static Surd sqrt_q_factorial(int n) {
    std::map<int, int> e;
    for (int k = 2; k <= n; ++k) e[k] += 1;
    return sqrt_of(e);
  }

  static Surd sqrt_q_binomial(int n, int k) {
    if (k < 0 || k > n) throw DomainError("sqrt_q_binomial: need 0 <= k <= n");
    std::map<int, int> e;
    for (int i = 2; i <= n; ++i) e[i] += 1;
    for (int i = 2; i <= k; ++i) e[i] -= 1;
    for (int i = 2; i <= n - k; ++i) e[i] -= 1;
    return sqrt_of(e);
  }

  /// q^{e/2}
  static Surd q_half_power(int e) { return sqrt_of({{Radicand::kQ, e}}); }

  const RatQ& coeff() const { return coeff_; }
  const Radicand& radicand() const { return rad_; }
  bool is_zero() const { return coeff_.is_zero(); }
  bool is_rational() const { return rad_.is_one(); }

  /// The radical-free value; throws when a radical remains.
  const RatQ& as_ratq() const {
    if (!rad_.is_one()) throw ArithmeticError("surd " + str() + " is not radical-free");
    return coeff_;
  }

  Surd operator-() const { return Surd(-coeff_, rad_); }

  friend Surd operator*(const Surd& a, const Surd& b) {
    if (a.is_zero() || b.is_zero()) return Surd();
    if (b.rad_.is_one()) return Surd(a.coeff_ * b.coeff_, a.rad_);
    if (a.rad_.is_one()) return Surd(a.coeff_ * b.coeff_, b.rad_);
    auto [r, extra] = Radicand::multiply(a.rad_, b.rad_);
    RatQ c = a.coeff_ * b.coeff_;
    if (!extra.is_one()) c *= RatQ(extra);
    return Surd(std::move(c), std::move(r));
  }

  friend Surd operator/(const Surd& a, const Surd& b) {
    if (b.is_zero()) throw ArithmeticError("division of a surd by zero");
    // c1 sqrt(R1) / (c2 sqrt(R2)) = (c1 / (c2 R2)) sqrt(R1 R2)
    Surd r = a * Surd(RatQ(1), b.rad_);
    return Surd(r.coeff_ / (b.coeff_ * RatQ(b.rad_.product())), r.rad_);
  }

  friend Surd operator+(const Surd& a, const Surd& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!(a.rad_ == b.rad_)) {
      throw ArithmeticError("sum of surds with different radicands: " + a.str() + " + " + b.str());
    }
    return Surd(a.coeff_ + b.coeff_, a.rad_);
  }
  friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }
  Surd& operator+=(const Surd& o) { return *this = *this + o; }
  Surd& operator-=(const Surd& o) { return *this = *this - o; }
  Surd& operator*=(const Surd& o) { return *this = *this * o; }

  friend bool operator==(const Surd& a, const Surd& b) { return a.coeff_ == b.coeff_ && a.rad_ == b.rad_; }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

  Surd bar() const {
    // Every atom is bar-invariant except q, which maps to 1/q: sqrt(1/q) = sqrt(q)/q.
    RatQ c = coeff_.bar();
    const bool has_q = !rad_.atoms_.empty() && rad_.atoms_.front() == Radicand::kQ;
    if (has_q) c *= RatQ(LaurentQ::q_power(-1));
    return Surd(std::move(c), rad_);
  }

  template <class Real>
  Real value(Real q) const {
    if (is_zero()) return Real(0);
    return coeff_.value(q) * std::sqrt(rad_.value(q));
  }

  /// Exact Horner on the coefficient, then floating point for the radical.
  double eval_at(double q0) const {
    if (!(q0 > 0)) throw DomainError("eval_at: q must be positive");
    if (is_zero()) return 0.0;
    return qvbs::eval_at(coeff_, q0) * std::sqrt(rad_.value(q0));
  }

  std::string str() const {
    if (rad_.is_one()) return coeff_.str();
    return "(" + coeff_.str() + ")*sqrt(" + rad_.str() + ")";
  }

 private:
  RatQ coeff_;
  Radicand rad_;
};

inline bool is_zero_scalar(const Surd& s) { return s.is_zero(); }
inline bool is_zero_scalar(const RatQ& s) { return s.is_zero(); }
inline bool is_zero_scalar(const LaurentQ& s) { return s.is_zero(); }
template <class Real>
bool is_zero_scalar(const Real& s) {
  return s == Real(0);
}

}  // namespace qvbs
