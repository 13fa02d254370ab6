#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <utility>

#include "qvbs/errors.hpp"
#include "qvbs/laurent.hpp"

namespace qvbs {

/// Rational function num/den in q.
///
/// Canonical form: the denominator is a monic polynomial with nonzero
/// constant term, coprime to the numerator, and powers of q live in the
/// numerator. Equal functions therefore have equal representations.
class RatQ {
 public:
  RatQ() : den_(1) {}
  RatQ(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatQ(LaurentQ p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatQ(const mpq_class& c) : num_(c), den_(1) {}
  RatQ(LaurentQ num, LaurentQ den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const LaurentQ& num() const { return num_; }
  const LaurentQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  /// The Laurent polynomial this function equals; throws if it has a nontrivial denominator.
  const LaurentQ& as_laurent() const {
    if (!is_laurent()) throw ArithmeticError("rational function " + str() + " is not a Laurent polynomial");
    return num_;
  }

  RatQ inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of the zero rational function");
    return RatQ(den_, num_);
  }

  RatQ bar() const { return RatQ(num_.bar(), den_.bar()); }

  RatQ operator-() const {
    RatQ r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatQ operator+(const RatQ& a, const RatQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatQ(a.num_ + b.num_, a.den_);
    return RatQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatQ operator-(const RatQ& a, const RatQ& b) { return a + (-b); }

  friend RatQ operator*(const RatQ& a, const RatQ& b) {
    if (a.is_zero() || b.is_zero()) return RatQ();
    if (a.is_laurent() && b.is_laurent()) {
      RatQ r;
      r.num_ = a.num_ * b.num_;
      return r;
    }
    // Cross-cancel first so the products stay small.
    const LaurentQ g1 = gcd(a.num_, b.den_);
    const LaurentQ g2 = gcd(b.num_, a.den_);
    RatQ r;
    r.num_ = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
    r.den_ = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
    r.normalize_leading();
    return r;
  }

  friend RatQ operator/(const RatQ& a, const RatQ& b) { return a * b.inverse(); }

  RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
  RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
  RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
  RatQ& operator/=(const RatQ& o) { return *this = *this / o; }

  friend bool operator==(const RatQ& a, const RatQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatQ& a, const RatQ& b) { return !(a == b); }

  mpq_class eval(const mpq_class& q0) const {
    const mpq_class d = den_.eval(q0);
    if (sgn(d) == 0) throw ArithmeticError("pole of " + str() + " at q = " + q0.get_str());
    return num_.eval(q0) / d;
  }

  template <class Real>
  Real value(Real q0) const {
    const Real d = den_.value(q0);
    if (d == 0) throw ArithmeticError("pole of " + str());
    return num_.value(q0) / d;
  }

  std::string str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentQ(1);
      return;
    }
    // Move q-powers of the denominator into the numerator.
    const int shift = den_.min_exp();
    if (shift != 0) {
      den_ = den_.shifted(-shift);
      num_ = num_.shifted(-shift);
    }
    if (!den_.is_constant()) {
      const LaurentQ g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
      }
    }
    normalize_leading();
  }

  // Scale so the denominator is monic; also drops a q-power from the denominator.
  void normalize_leading() {
    const int shift = den_.min_exp();
    if (shift != 0) {
      den_ = den_.shifted(-shift);
      num_ = num_.shifted(-shift);
    }
    const mpq_class lead = den_.leading_coeff();
    if (lead != 1) {
      const mpq_class inv = 1 / lead;
      num_ *= inv;
      den_ *= inv;
    }
  }

  LaurentQ num_;
  LaurentQ den_;
};

}  // namespace qvbs
