#pragma once

// Matrix-product tensors g, g_start and f of the q-deformed VBS states and
// their contraction into spin-basis state vectors.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qvbs/budget.hpp"
#include "qvbs/errors.hpp"
#include "qvbs/qnum.hpp"
#include "qvbs/state.hpp"
#include "qvbs/surd.hpp"

namespace qvbs {

/// (S+1) x (S+1) matrix whose (i, j) entry (1-based) is a multiple of the
/// single spin state |S; j-i>. Only that scalar coefficient is stored.
template <class Scalar>
class MPSTensor {
 public:
  explicit MPSTensor(int spin) : spin_(spin) {
    if (spin < 1) throw DomainError("MPSTensor: spin must be >= 1");
    data_.assign(static_cast<std::size_t>((spin + 1) * (spin + 1)), Scalar{});
  }

  int spin() const { return spin_; }
  int bond_dim() const { return spin_ + 1; }

  Scalar& operator()(int i, int j) { return data_[offset(i, j)]; }
  const Scalar& operator()(int i, int j) const { return data_[offset(i, j)]; }

  /// Physical weight carried by entry (i, j).
  static int weight(int i, int j) { return j - i; }

 private:
  std::size_t offset(int i, int j) const {
    if (i < 1 || i > spin_ + 1 || j < 1 || j > spin_ + 1) throw DomainError("MPSTensor: index out of range");
    return static_cast<std::size_t>((i - 1) * (spin_ + 1) + (j - 1));
  }

  int spin_;
  std::vector<Scalar> data_;
};

namespace detail {

/// ([S choose i-1][S choose j-1][S-i+j]![S+i-j]!)^{1/2}
inline Surd mps_radical(int spin, int i, int j) {
  return Surd::sqrt_q_binomial(spin, i - 1) * Surd::sqrt_q_binomial(spin, j - 1) *
         Surd::sqrt_q_factorial(spin - i + j) * Surd::sqrt_q_factorial(spin + i - j);
}

template <class Real>
Real mps_radical_value(int spin, int i, int j, Real q) {
  return std::sqrt(q_binomial_value(spin, i - 1, q) * q_binomial_value(spin, j - 1, q) *
                   q_factorial_value(spin - i + j, q) * q_factorial_value(spin + i - j, q));
}

inline int mps_sign(int spin, int i) { return (spin - i + 1) % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// g(i,j) = (-1)^{S-i+1} q^{(2i-2-S)(S+1)/2} (...)^{1/2} |S; j-i>
inline MPSTensor<Surd> tensor_g(int spin) {
  MPSTensor<Surd> t(spin);
  for (int i = 1; i <= spin + 1; ++i) {
    for (int j = 1; j <= spin + 1; ++j) {
      t(i, j) = Surd(detail::mps_sign(spin, i)) * Surd::q_half_power((2 * i - 2 - spin) * (spin + 1)) *
                detail::mps_radical(spin, i, j);
    }
  }
  return t;
}

/// g_start(i,j) = (...)^{1/2} |S; j-i>, no sign and no q-power.
inline MPSTensor<Surd> tensor_g_start(int spin) {
  MPSTensor<Surd> t(spin);
  for (int i = 1; i <= spin + 1; ++i) {
    for (int j = 1; j <= spin + 1; ++j) t(i, j) = detail::mps_radical(spin, i, j);
  }
  return t;
}

/// f(i,j) = (-1)^{S-i+1} q^{(i+j-2-S)(S+1)/2} (...)^{1/2} |S; j-i>
inline MPSTensor<Surd> tensor_f(int spin) {
  MPSTensor<Surd> t(spin);
  for (int i = 1; i <= spin + 1; ++i) {
    for (int j = 1; j <= spin + 1; ++j) {
      t(i, j) = Surd(detail::mps_sign(spin, i)) * Surd::q_half_power((i + j - 2 - spin) * (spin + 1)) *
                detail::mps_radical(spin, i, j);
    }
  }
  return t;
}

/// Floating-point f, computed directly from the formula (not from the exact tensor).
template <class Real>
MPSTensor<Real> tensor_f_value(int spin, Real q) {
  if (!(q > 0)) throw DomainError("tensor_f_value: q must be positive");
  MPSTensor<Real> t(spin);
  for (int i = 1; i <= spin + 1; ++i) {
    for (int j = 1; j <= spin + 1; ++j) {
      const Real expo = Real((i + j - 2 - spin) * (spin + 1)) / Real(2);
      t(i, j) = Real(detail::mps_sign(spin, i)) * std::pow(q, expo) * detail::mps_radical_value(spin, i, j, q);
    }
  }
  return t;
}

/// Floating-point g, computed directly from the formula.
template <class Real>
MPSTensor<Real> tensor_g_value(int spin, Real q) {
  if (!(q > 0)) throw DomainError("tensor_g_value: q must be positive");
  MPSTensor<Real> t(spin);
  for (int i = 1; i <= spin + 1; ++i) {
    for (int j = 1; j <= spin + 1; ++j) {
      const Real expo = Real((2 * i - 2 - spin) * (spin + 1)) / Real(2);
      t(i, j) = Real(detail::mps_sign(spin, i)) * std::pow(q, expo) * detail::mps_radical_value(spin, i, j, q);
    }
  }
  return t;
}

template <class Real = double>
MPSTensor<Real> evaluate(const MPSTensor<Surd>& t, Real q) {
  MPSTensor<Real> r(t.spin());
  for (int i = 1; i <= t.bond_dim(); ++i) {
    for (int j = 1; j <= t.bond_dim(); ++j) r(i, j) = t(i, j).value(q);
  }
  return r;
}

namespace detail {

/// Depth-first contraction over physical configurations. `w[j]` holds the
/// partial product of the chosen prefix from the fixed row `start` to bond
/// index j. Every bond index has a single predecessor for a given m, so each
/// step costs O(S+1).
template <class Scalar>
class Contractor {
 public:
  Contractor(const MPSTensor<Scalar>& first, const MPSTensor<Scalar>& bulk, StateVector<Scalar>& out)
      : first_(first), bulk_(bulk), out_(out), spin_(bulk.spin()), d_(static_cast<std::size_t>(2 * bulk.spin() + 1)) {}

  /// Adds [first (x) bulk (x) ... (x) bulk]_{start, end} into the output;
  /// end < 0 means the trace closure end = start.
  void run(int start, int end) {
    start_ = start;
    end_ = end;
    std::vector<Scalar> w(static_cast<std::size_t>(spin_ + 2), Scalar{});
    w[static_cast<std::size_t>(start)] = one();
    recurse(0, 0, w);
  }

 private:
  static Scalar one() { return Scalar(1); }

  void recurse(int site, std::size_t prefix, const std::vector<Scalar>& w) {
    const MPSTensor<Scalar>& t = site == 0 ? first_ : bulk_;
    const int len = out_.length();
    for (int m = -spin_; m <= spin_; ++m) {
      std::vector<Scalar> next(w.size(), Scalar{});
      bool any = false;
      for (int j = 1; j <= spin_ + 1; ++j) {
        const int i = j - m;
        if (i < 1 || i > spin_ + 1) continue;
        const Scalar& wi = w[static_cast<std::size_t>(i)];
        if (is_zero_scalar(wi)) continue;
        const Scalar& tij = t(i, j);
        if (is_zero_scalar(tij)) continue;
        next[static_cast<std::size_t>(j)] = wi * tij;
        any = true;
      }
      if (!any) continue;
      const std::size_t idx = prefix * d_ + static_cast<std::size_t>(m + spin_);
      if (site + 1 == len) {
        const int close = end_ < 0 ? start_ : end_;
        const Scalar& v = next[static_cast<std::size_t>(close)];
        if (!is_zero_scalar(v)) out_[idx] = out_[idx] + v;
      } else {
        recurse(site + 1, idx, next);
      }
    }
  }

  const MPSTensor<Scalar>& first_;
  const MPSTensor<Scalar>& bulk_;
  StateVector<Scalar>& out_;
  int spin_;
  std::size_t d_;
  int start_ = 1;
  int end_ = -1;
};

}  // namespace detail

/// Tr[t_1 (x) t_2 (x) ... (x) t_L] with free physical indices.
template <class Scalar>
StateVector<Scalar> contract_pbc(const MPSTensor<Scalar>& t, int length) {
  if (length < 1) throw DomainError("contract_pbc: length must be >= 1");
  StateVector<Scalar> out(t.spin(), length);
  detail::Contractor<Scalar> c(t, t, out);
  for (int start = 1; start <= t.bond_dim(); ++start) c.run(start, -1);
  return out;
}

/// [first (x) bulk (x) ... (x) bulk]_{p1, p2}.
template <class Scalar>
StateVector<Scalar> contract_open(const MPSTensor<Scalar>& first, const MPSTensor<Scalar>& bulk, int length, int p1,
                                  int p2) {
  if (length < 1) throw DomainError("contract_open: length must be >= 1");
  if (first.spin() != bulk.spin()) throw DomainError("contract_open: tensors of different spin");
  if (p1 < 1 || p1 > bulk.bond_dim() || p2 < 1 || p2 > bulk.bond_dim()) {
    throw DomainError("contract_open: p1, p2 must lie in 1.." + std::to_string(bulk.bond_dim()));
  }
  StateVector<Scalar> out(bulk.spin(), length);
  detail::Contractor<Scalar> c(first, bulk, out);
  c.run(p1, p2);
  return out;
}

/// Open-chain state [g_start (x) g (x) ... (x) g]_{p1, p2}.
inline StateVector<Surd> contract_open(int spin, int length, int p1, int p2) {
  return contract_open(tensor_g_start(spin), tensor_g(spin), length, p1, p2);
}

}  // namespace qvbs
