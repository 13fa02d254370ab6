#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "qvbs/budget.hpp"
#include "qvbs/errors.hpp"
#include "qvbs/surd.hpp"

namespace qvbs {

/// Bytes assumed per amplitude when checking the memory budget.
template <class Scalar>
constexpr std::size_t amplitude_bytes() {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return sizeof(Scalar);
  } else {
    return 512;  // exact scalars carry heap-allocated coefficient lists
  }
}

/// Amplitudes over the product basis |S,m_1> (x) ... (x) |S,m_L>.
///
/// Storage is dense; site 0 is the most significant digit of the index and
/// digit value m + S.
template <class Scalar>
class StateVector {
 public:
  StateVector(int spin, int length) : spin_(spin), length_(length) {
    if (spin < 1) throw DomainError("StateVector: spin must be >= 1");
    if (length < 1) throw DomainError("StateVector: length must be >= 1");
    const std::size_t dim = checked_pow(static_cast<std::size_t>(2 * spin + 1), length);
    check_budget(dim, amplitude_bytes<Scalar>(), "state vector (2S+1)^L");
    amps_.assign(dim, Scalar{});
  }

  int spin() const { return spin_; }
  int length() const { return length_; }
  int local_dim() const { return 2 * spin_ + 1; }
  std::size_t dim() const { return amps_.size(); }

  Scalar& operator[](std::size_t i) { return amps_[i]; }
  const Scalar& operator[](std::size_t i) const { return amps_[i]; }
  std::vector<Scalar>& amplitudes() { return amps_; }
  const std::vector<Scalar>& amplitudes() const { return amps_; }

  std::size_t index(std::span<const int> ms) const {
    if (ms.size() != static_cast<std::size_t>(length_)) throw DomainError("StateVector::index: wrong configuration length");
    std::size_t idx = 0;
    for (int m : ms) {
      if (m < -spin_ || m > spin_) throw DomainError("StateVector::index: m out of range");
      idx = idx * static_cast<std::size_t>(local_dim()) + static_cast<std::size_t>(m + spin_);
    }
    return idx;
  }

  std::vector<int> config(std::size_t index) const {
    std::vector<int> ms(static_cast<std::size_t>(length_));
    for (int l = length_ - 1; l >= 0; --l) {
      ms[static_cast<std::size_t>(l)] = static_cast<int>(index % static_cast<std::size_t>(local_dim())) - spin_;
      index /= static_cast<std::size_t>(local_dim());
    }
    return ms;
  }

  /// m value at `site` for basis index `index`.
  int m_at(std::size_t index, int site) const {
    for (int l = length_ - 1; l > site; --l) index /= static_cast<std::size_t>(local_dim());
    return static_cast<int>(index % static_cast<std::size_t>(local_dim())) - spin_;
  }

  int weight(std::size_t index) const {
    int w = 0;
    for (int m : config(index)) w += m;
    return w;
  }

  std::string m_string(std::size_t index) const {
    std::string s;
    for (int m : config(index)) {
      if (!s.empty()) s += " ";
      s += std::to_string(m);
    }
    return s;
  }

 private:
  int spin_;
  int length_;
  std::vector<Scalar> amps_;
};

/// Maps every amplitude through f; the result scalar type follows f.
template <class F, class Scalar>
auto map_state(const StateVector<Scalar>& s, F&& f) {
  using Out = std::decay_t<decltype(f(s[0]))>;
  StateVector<Out> r(s.spin(), s.length());
  for (std::size_t i = 0; i < s.dim(); ++i) r[i] = f(s[i]);
  return r;
}

/// Numeric value of an exact state at q.
template <class Real = double>
StateVector<Real> evaluate(const StateVector<Surd>& s, Real q) {
  return map_state(s, [q](const Surd& v) { return v.value(q); });
}

/// Exact proportionality test: a = c * b for a single nonzero c.
/// Cross-multiplies against a reference amplitude, so no division is needed.
template <class Scalar>
bool proportional(const StateVector<Scalar>& a, const StateVector<Scalar>& b) {
  if (a.spin() != b.spin() || a.length() != b.length()) return false;
  std::size_t ref = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!is_zero_scalar(b[i])) {
      ref = i;
      break;
    }
  }
  if (ref == a.dim()) return false;
  if (is_zero_scalar(a[ref])) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (is_zero_scalar(a[i]) != is_zero_scalar(b[i])) return false;
    if (is_zero_scalar(a[i])) continue;
    if (!(a[i] * b[ref] == b[i] * a[ref])) return false;
  }
  return true;
}

}  // namespace qvbs
