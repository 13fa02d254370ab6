#pragma once

// q-integers, q-factorials and q-binomials, exactly and in floating point.

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "qvbs/errors.hpp"
#include "qvbs/laurent.hpp"
#include "qvbs/ratq.hpp"

namespace qvbs {

/// [n]_q = q^{n-1} + q^{n-3} + ... + q^{-(n-1)}; [0]_q = 0.
inline LaurentQ q_integer(int n) {
  if (n < 0) throw DomainError("q_integer: n must be nonnegative, got " + std::to_string(n));
  std::vector<LaurentQ::Term> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) terms.push_back({n - 1 - 2 * i, mpq_class(1)});
  return LaurentQ::from_terms(std::move(terms));
}

inline LaurentQ q_factorial(int n) {
  if (n < 0) throw DomainError("q_factorial: n must be nonnegative, got " + std::to_string(n));
  LaurentQ r(1);
  for (int k = 2; k <= n; ++k) r *= q_integer(k);
  return r;
}

/// Gaussian binomial [n choose k]_q. The quotient of factorials is taken by
/// exact division, which throws if it ever leaves a remainder.
inline LaurentQ q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("q_binomial: need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return divide_exact(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

/// q - q^{-1}
inline LaurentQ q_difference() { return LaurentQ::q_power(1) - LaurentQ::q_power(-1); }

/// Floating value of [n]_q as a sum of positive terms (no cancellation near q = 1).
template <class Real>
Real q_integer_value(int n, Real q) {
  if (n < 0) throw DomainError("q_integer_value: n must be nonnegative");
  if (n == 0) return Real(0);
  const Real q2 = q * q;
  Real term = std::pow(q, Real(-(n - 1)));
  Real sum = 0;
  for (int i = 0; i < n; ++i) {
    sum += term;
    term *= q2;
  }
  return sum;
}

template <class Real>
Real q_factorial_value(int n, Real q) {
  Real r = 1;
  for (int k = 2; k <= n; ++k) r *= q_integer_value(k, q);
  return r;
}

template <class Real>
Real q_binomial_value(int n, int k, Real q) {
  if (n < 0 || k < 0 || k > n) throw DomainError("q_binomial_value: need 0 <= k <= n");
  Real r = 1;
  for (int i = 1; i <= k; ++i) r *= q_integer_value(n - k + i, q) / q_integer_value(i, q);
  return r;
}

/// Exact Horner evaluation at the binary value of q0, then rounding to double.
inline double eval_at(const LaurentQ& p, double q0) {
  if (!(q0 > 0)) throw DomainError("eval_at: q must be positive");
  return p.eval(mpq_class(q0)).get_d();
}

inline double eval_at(const RatQ& p, double q0) {
  if (!(q0 > 0)) throw DomainError("eval_at: q must be positive");
  return p.eval(mpq_class(q0)).get_d();
}

}  // namespace qvbs
