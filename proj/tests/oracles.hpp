#pragma once

// Reference computations for the tests. Everything here is written from the
// defining formulas with plain doubles and Eigen, without calling the library.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

inline double qint(int n, double q) {
  if (q == 1.0) return n;
  return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
}

inline double qfact(int n, double q) {
  double r = 1;
  for (int k = 2; k <= n; ++k) r *= qint(k, q);
  return r;
}

inline double qbinom(int n, int k, double q) { return qfact(n, q) / (qfact(k, q) * qfact(n - k, q)); }

/// Spin-S matrices in the basis m = -S..S (index m + S).
struct SpinMatrices {
  Eigen::MatrixXd sz, sp, sm;
};

inline SpinMatrices spin_matrices(int s) {
  const int d = 2 * s + 1;
  SpinMatrices r{Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d)};
  for (int m = -s; m <= s; ++m) {
    r.sz(m + s, m + s) = m;
    if (m < s) r.sp(m + s + 1, m + s) = std::sqrt(double((s - m) * (s + m + 1)));
  }
  r.sm = r.sp.transpose();
  return r;
}

/// Projector onto total spin J in V_S (x) V_S at q = 1, via the Casimir.
inline Eigen::MatrixXd classical_projector(int s, int j) {
  const SpinMatrices a = spin_matrices(s);
  const int d = 2 * s + 1;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  auto kron = [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    Eigen::MatrixXd r(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      for (Eigen::Index k = 0; k < x.cols(); ++k) r.block(i * y.rows(), k * y.cols(), y.rows(), y.cols()) = x(i, k) * y;
    }
    return r;
  };
  const Eigen::MatrixXd tz = kron(a.sz, id) + kron(id, a.sz);
  const Eigen::MatrixXd tp = kron(a.sp, id) + kron(id, a.sp);
  const Eigen::MatrixXd tm = kron(a.sm, id) + kron(id, a.sm);
  const Eigen::MatrixXd casimir = tz * tz + 0.5 * (tp * tm + tm * tp);
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(d * d, d * d);
  for (int k = 0; k <= 2 * s; ++k) {
    if (k == j) continue;
    p = p * (casimir - k * (k + 1) * Eigen::MatrixXd::Identity(d * d, d * d)) / double(j * (j + 1) - k * (k + 1));
  }
  return p;
}

/// Amplitudes (spin basis, index = sum (m_l + S) (2S+1)^{L-1-l}) of
///   prefactor(x, y) * prod_bonds prod_{m=1}^{S} (q^m x_k y_l - q^{-m} y_k x_l)
/// obtained by expanding every product term by term. `boundary` adds fixed
/// extra x/y exponents per site.
inline std::vector<double> expand_vbs(int s, int len, const std::vector<std::pair<int, int>>& bonds,
                                      const std::vector<std::pair<int, int>>& boundary, double q) {
  const int factors = static_cast<int>(bonds.size()) * s;
  std::map<std::vector<int>, double> mono;  // x-degree per site -> coefficient
  for (long choice = 0; choice < (1L << factors); ++choice) {
    std::vector<int> xdeg(static_cast<std::size_t>(len), 0);
    for (int l = 0; l < len; ++l) xdeg[static_cast<std::size_t>(l)] = boundary[static_cast<std::size_t>(l)].first;
    double c = 1;
    int f = 0;
    for (const auto& [k, l] : bonds) {
      for (int m = 1; m <= s; ++m, ++f) {
        if ((choice >> f) & 1L) {
          c *= -std::pow(q, -m);
          ++xdeg[static_cast<std::size_t>(l)];
        } else {
          c *= std::pow(q, m);
          ++xdeg[static_cast<std::size_t>(k)];
        }
      }
    }
    mono[xdeg] += c;
  }
  const int d = 2 * s + 1;
  std::size_t dim = 1;
  for (int l = 0; l < len; ++l) dim *= static_cast<std::size_t>(d);
  std::vector<double> amp(dim, 0.0);
  for (const auto& [xdeg, c] : mono) {
    std::size_t idx = 0;
    double norm = 1;
    for (int l = 0; l < len; ++l) {
      const int m = xdeg[static_cast<std::size_t>(l)] - s;
      idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(m + s);
      norm *= std::sqrt(qfact(s + m, q) * qfact(s - m, q));
    }
    amp[idx] += c * norm;
  }
  return amp;
}

/// Entry of a bond-dimension (S+1) tensor: value for (i, j), 1-based; the
/// physical label is m = j - i.
using TensorFn = std::function<double(int i, int j)>;

/// Matrix product Tr(M_1 ... M_L) or [M_1 ... M_L]_{p1,p2} for every
/// configuration, one configuration at a time with explicit Eigen matrices.
inline std::vector<double> dense_mps(int s, int len, const TensorFn& first, const TensorFn& bulk, int p1 = 0, int p2 = 0) {
  const int d = 2 * s + 1;
  const int b = s + 1;
  auto slice = [&](const TensorFn& t, int m) {
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(b, b);
    for (int i = 1; i <= b; ++i) {
      const int j = i + m;
      if (j >= 1 && j <= b) r(i - 1, j - 1) = t(i, j);
    }
    return r;
  };
  std::vector<Eigen::MatrixXd> first_slices, bulk_slices;
  for (int m = -s; m <= s; ++m) {
    first_slices.push_back(slice(first, m));
    bulk_slices.push_back(slice(bulk, m));
  }
  std::size_t dim = 1;
  for (int l = 0; l < len; ++l) dim *= static_cast<std::size_t>(d);
  std::vector<double> amp(dim, 0.0);
  std::vector<int> digits(static_cast<std::size_t>(len));
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t rest = idx;
    int total = 0;
    for (int l = len - 1; l >= 0; --l) {
      digits[static_cast<std::size_t>(l)] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
      total += digits[static_cast<std::size_t>(l)] - s;
    }
    if (p1 == 0 && total != 0) continue;
    Eigen::MatrixXd prod = first_slices[static_cast<std::size_t>(digits[0])];
    for (int l = 1; l < len; ++l) prod = prod * bulk_slices[static_cast<std::size_t>(digits[static_cast<std::size_t>(l)])];
    amp[idx] = p1 == 0 ? prod.trace() : prod(p1 - 1, p2 - 1);
  }
  return amp;
}

/// Largest |a_i - c b_i| / max|a| over the best scalar c (least squares).
inline double proportionality_residual(const std::vector<double>& a, const std::vector<double>& b) {
  double ab = 0, bb = 0, amax = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    bb += b[i] * b[i];
    amax = std::max(amax, std::abs(a[i]));
  }
  if (bb == 0 || amax == 0) return 1;
  const double c = ab / bb;
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - c * b[i]));
  return worst / amax;
}

/// <S^z_1 S^z_r> of an explicit real state vector, sites numbered from 1.
inline double szsz(const std::vector<double>& amp, int s, int len, int r) {
  const std::size_t d = static_cast<std::size_t>(2 * s + 1);
  std::size_t stride1 = 1, strider = 1;
  for (int l = len; l > 1; --l) stride1 *= d;
  for (int l = len; l > r; --l) strider *= d;
  double norm = 0, acc = 0;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    const double w = amp[i] * amp[i];
    if (w == 0) continue;
    const int m1 = static_cast<int>((i / stride1) % d) - s;
    const int mr = static_cast<int>((i / strider) % d) - s;
    norm += w;
    acc += w * m1 * mr;
  }
  return acc / norm;
}

}  // namespace oracle
