#pragma once

// Transfer matrices G and G^A of the periodic q-VBS chain, their spectra,
// the conjectured closed-form eigenvalues, and finite-L and thermodynamic
// correlation functions.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qvbs/errors.hpp"
#include "qvbs/exact_matrix.hpp"
#include "qvbs/mps.hpp"
#include "qvbs/qnum.hpp"
#include "qvbs/surd.hpp"

namespace qvbs {

template <class Real>
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

/// Single-site operator as a (2S+1) x (2S+1) matrix; row/column m+S.
template <class Real>
struct SiteOperator {
  int spin = 0;
  std::string name;
  Matrix<Real> matrix;

  bool is_diagonal() const {
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
      for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
        if (i != j && matrix(i, j) != Real(0)) return false;
      }
    }
    return true;
  }
};

template <class Real>
SiteOperator<Real> identity_operator(int spin) {
  return {spin, "identity", Matrix<Real>::Identity(2 * spin + 1, 2 * spin + 1)};
}

template <class Real>
SiteOperator<Real> sz_operator(int spin) {
  Matrix<Real> m = Matrix<Real>::Zero(2 * spin + 1, 2 * spin + 1);
  for (int k = -spin; k <= spin; ++k) m(k + spin, k + spin) = Real(k);
  return {spin, "sz", m};
}

/// |S,m><S,m|
template <class Real>
SiteOperator<Real> sz_projector(int spin, int m) {
  if (m < -spin || m > spin) throw DomainError("sz_projector: m out of range");
  Matrix<Real> p = Matrix<Real>::Zero(2 * spin + 1, 2 * spin + 1);
  p(m + spin, m + spin) = Real(1);
  return {spin, "P(sz=" + std::to_string(m) + ")", p};
}

/// Flattened auxiliary pair index (a-1)(S+1) + (b-1), 1-based a, b.
inline Eigen::Index pair_index(int spin, int a, int b) { return (a - 1) * (spin + 1) + (b - 1); }

/// G^A_{(a,b;c,d)} = f(a,c)^dagger A f(b,d), from any numeric f tensor.
template <class Real>
Matrix<Real> transfer_matrix_generic(const MPSTensor<Real>& f, const Matrix<Real>& a_op) {
  const int spin = f.spin();
  const int n = (spin + 1) * (spin + 1);
  Matrix<Real> g = Matrix<Real>::Zero(n, n);
  for (int a = 1; a <= spin + 1; ++a) {
    for (int b = 1; b <= spin + 1; ++b) {
      for (int c = 1; c <= spin + 1; ++c) {
        for (int d = 1; d <= spin + 1; ++d) {
          const Real v = f(a, c) * a_op(c - a + spin, d - b + spin) * f(b, d);
          g(pair_index(spin, a, b), pair_index(spin, c, d)) = v;
        }
      }
    }
  }
  return g;
}

/// Closed form of G (delta_{a-b,c-d} times signs, q-powers and radicals),
/// multiplied entrywise by A_{d-b} for a diagonal A given as its m = -S..S values.
template <class Real>
Matrix<Real> transfer_matrix_explicit(int spin, Real q, const std::vector<Real>& diag) {
  const int n = (spin + 1) * (spin + 1);
  Matrix<Real> g = Matrix<Real>::Zero(n, n);
  auto fact = [&](int k) { return q_factorial_value(k, q); };
  auto binom = [&](int k) { return q_binomial_value(spin, k, q); };
  for (int a = 1; a <= spin + 1; ++a) {
    for (int b = 1; b <= spin + 1; ++b) {
      for (int c = 1; c <= spin + 1; ++c) {
        for (int d = 1; d <= spin + 1; ++d) {
          if (a - b != c - d) continue;
          const Real sign = (a + b) % 2 == 0 ? Real(1) : Real(-1);
          const Real qpow = std::pow(q, Real((a + b + c + d - 2 * spin - 4) * (spin + 1)) / Real(2));
          const Real rad = std::sqrt(binom(a - 1) * binom(b - 1) * binom(c - 1) * binom(d - 1)) *
                           std::sqrt(fact(spin - a + c) * fact(spin + a - c) * fact(spin - b + d) * fact(spin + b - d));
          g(pair_index(spin, a, b), pair_index(spin, c, d)) = sign * qpow * rad * diag[static_cast<std::size_t>(d - b + spin)];
        }
      }
    }
  }
  return g;
}

inline constexpr double kTransferRouteTolerance = 1e-12;

template <class Real>
struct TransferMatrix {
  int spin = 0;
  Real q = 0;
  Matrix<Real> matrix;
  bool explicit_checked = false;  // false when A is not diagonal
  Real route_discrepancy = 0;     // max |generic - explicit| / max |G|
};

/// G^A computed from the f tensor and, for diagonal A, also from the closed
/// form; the two must agree to 1e-12 relative or VerificationError is thrown.
template <class Real>
TransferMatrix<Real> transfer_matrix(int spin, Real q, const SiteOperator<Real>& a_op) {
  if (spin < 1) throw DomainError("transfer_matrix: spin must be >= 1");
  if (!(q > 0)) throw DomainError("transfer_matrix: q must be positive");
  if (a_op.spin != spin || a_op.matrix.rows() != 2 * spin + 1) throw DomainError("transfer_matrix: operator has wrong spin");
  TransferMatrix<Real> t;
  t.spin = spin;
  t.q = q;
  t.matrix = transfer_matrix_generic(tensor_f_value(spin, q), a_op.matrix);
  if (a_op.is_diagonal()) {
    std::vector<Real> diag(static_cast<std::size_t>(2 * spin + 1));
    for (int k = 0; k <= 2 * spin; ++k) diag[static_cast<std::size_t>(k)] = a_op.matrix(k, k);
    const Matrix<Real> other = transfer_matrix_explicit(spin, q, diag);
    const Real scale = std::max(other.cwiseAbs().maxCoeff(), t.matrix.cwiseAbs().maxCoeff());
    t.route_discrepancy = scale > 0 ? (t.matrix - other).cwiseAbs().maxCoeff() / scale : Real(0);
    t.explicit_checked = true;
    if (!(t.route_discrepancy <= Real(kTransferRouteTolerance))) {
      throw VerificationError("transfer_matrix: generic and closed-form routes disagree");
    }
  }
  return t;
}

template <class Real>
TransferMatrix<Real> transfer_matrix(int spin, Real q) {
  return transfer_matrix(spin, q, identity_operator<Real>(spin));
}

// ---------------------------------------------------------------------------
// Exact transfer matrices

/// Exact G^A for a diagonal operator (values alpha_m, m = -S..S).
///
/// G = X G0 X with X = diag(([S choose a-1][S choose b-1])^{1/2}) and G0 free
/// of radicals. `similar` = X^2 G0 = X G X^{-1} is radical-free and similar to G,
/// so it carries the exact spectrum.
struct ExactTransfer {
  int spin = 0;
  std::vector<Surd> entries;          // G^A, row-major, n x n
  ExactMatrix reduced;                // G0^A = X^{-1} G^A X^{-1}
  std::vector<RatQ> x_squared;        // diagonal of X^2
  ExactMatrix similar;                // X^2 G0^A

  std::size_t dim() const { return x_squared.size(); }
  const Surd& operator()(std::size_t r, std::size_t c) const { return entries[r * dim() + c]; }
};

inline ExactTransfer exact_transfer(int spin, const std::vector<RatQ>& diag) {
  if (spin < 1) throw DomainError("exact_transfer: spin must be >= 1");
  if (diag.size() != static_cast<std::size_t>(2 * spin + 1)) throw DomainError("exact_transfer: need 2S+1 diagonal values");
  const auto n = static_cast<std::size_t>((spin + 1) * (spin + 1));
  ExactTransfer t;
  t.spin = spin;
  t.entries.assign(n * n, Surd());
  t.reduced = ExactMatrix(n, n);
  t.similar = ExactMatrix(n, n);
  t.x_squared.resize(n);
  const MPSTensor<Surd> f = tensor_f(spin);

  std::vector<Surd> x(n);
  for (int a = 1; a <= spin + 1; ++a) {
    for (int b = 1; b <= spin + 1; ++b) {
      const auto idx = static_cast<std::size_t>(pair_index(spin, a, b));
      x[idx] = Surd::sqrt_q_binomial(spin, a - 1) * Surd::sqrt_q_binomial(spin, b - 1);
      t.x_squared[idx] = RatQ(q_binomial(spin, a - 1) * q_binomial(spin, b - 1));
    }
  }

  for (int a = 1; a <= spin + 1; ++a) {
    for (int b = 1; b <= spin + 1; ++b) {
      for (int c = 1; c <= spin + 1; ++c) {
        for (int d = 1; d <= spin + 1; ++d) {
          const auto row = static_cast<std::size_t>(pair_index(spin, a, b));
          const auto col = static_cast<std::size_t>(pair_index(spin, c, d));
          Surd generic;
          if (c - a == d - b) generic = f(a, c) * f(b, d) * Surd(diag[static_cast<std::size_t>(d - b + spin)]);

          Surd closed;
          if (a - b == c - d && !diag[static_cast<std::size_t>(d - b + spin)].is_zero()) {
            std::map<int, int> e;
            e[Radicand::kQ] = (a + b + c + d - 2 * spin - 4) * (spin + 1);
            auto add_factorial = [&](int k, int s) {
              for (int i = 2; i <= k; ++i) e[i] += s;
            };
            for (int k : {a - 1, b - 1, c - 1, d - 1}) {
              add_factorial(spin, 1);
              add_factorial(k, -1);
              add_factorial(spin - k, -1);
            }
            for (int k : {spin - a + c, spin + a - c, spin - b + d, spin + b - d}) add_factorial(k, 1);
            closed = Surd((a + b) % 2 == 0 ? 1 : -1) * Surd::sqrt_of(e) * Surd(diag[static_cast<std::size_t>(d - b + spin)]);
          }
          if (generic != closed) {
            throw VerificationError("exact_transfer: generic and closed-form entries differ at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ";" + std::to_string(c) + "," + std::to_string(d) + ")");
          }
          t.entries[row * n + col] = generic;
          if (!generic.is_zero()) {
            t.reduced(row, col) = (generic / (x[row] * x[col])).as_ratq();
            t.similar(row, col) = t.x_squared[row] * t.reduced(row, col);
          }
        }
      }
    }
  }
  return t;
}

inline ExactTransfer exact_transfer(int spin) {
  return exact_transfer(spin, std::vector<RatQ>(static_cast<std::size_t>(2 * spin + 1), RatQ(1)));
}

// ---------------------------------------------------------------------------
// Spectrum

template <class Real>
struct EigenGroup {
  Real value = 0;
  int multiplicity = 0;
  std::vector<Eigen::Index> members;  // positions in EigenSystem::values
};

template <class Real>
struct EigenSystem {
  Vector<Real> values;   // sorted by descending |lambda|, ties by descending lambda
  Matrix<Real> vectors;  // orthonormal columns, same order
  std::vector<EigenGroup<Real>> groups;
  bool gapped = false;   // |lambda_1| > |lambda_2| beyond the tolerance
};

inline constexpr double kDegeneracyTolerance = 1e-9;

inline bool relatively_equal(long double a, long double b, long double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

/// Orthonormal eigensystem of a symmetric matrix with degeneracy grouping.
/// Throws NoSpectralGapError when require_gap is set and |lambda_1| = |lambda_2|.
template <class Real>
EigenSystem<Real> eigensystem(const Matrix<Real>& g, Real tol = Real(kDegeneracyTolerance), bool require_gap = true) {
  if (g.rows() != g.cols() || g.rows() == 0) throw DomainError("eigensystem: matrix must be square and nonempty");
  const Real scale = g.cwiseAbs().maxCoeff();
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > Real(1e-12) * scale) {
    throw DomainError("eigensystem: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix<Real>> solver(g);
  if (solver.info() != Eigen::Success) throw ArithmeticError("eigensystem: eigensolver did not converge");
  const Eigen::Index n = g.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  const auto& ev = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    if (std::abs(ev(x)) != std::abs(ev(y))) return std::abs(ev(x)) > std::abs(ev(y));
    return ev(x) > ev(y);
  });
  EigenSystem<Real> es;
  es.values.resize(n);
  es.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    es.values(i) = ev(order[static_cast<std::size_t>(i)]);
    es.vectors.col(i) = solver.eigenvectors().col(order[static_cast<std::size_t>(i)]);
  }

  // Group by value: sort positions by value and merge neighbours within tolerance.
  std::vector<Eigen::Index> by_value(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) by_value[static_cast<std::size_t>(i)] = i;
  std::stable_sort(by_value.begin(), by_value.end(), [&](Eigen::Index x, Eigen::Index y) { return es.values(x) > es.values(y); });
  for (Eigen::Index pos : by_value) {
    const Real v = es.values(pos);
    if (!es.groups.empty() && relatively_equal(es.groups.back().value, v, tol)) {
      auto& grp = es.groups.back();
      grp.members.push_back(pos);
      grp.multiplicity += 1;
      grp.value += (v - grp.value) / Real(grp.multiplicity);
    } else {
      es.groups.push_back({v, 1, {pos}});
    }
  }
  std::stable_sort(es.groups.begin(), es.groups.end(),
                   [](const EigenGroup<Real>& x, const EigenGroup<Real>& y) { return std::abs(x.value) > std::abs(y.value); });
  es.gapped = n == 1 || !relatively_equal(std::abs(es.values(0)), std::abs(es.values(1)), tol);
  if (require_gap && !es.gapped) throw NoSpectralGapError("eigensystem: |lambda_1| = |lambda_2|, thermodynamic formulas do not apply");
  return es;
}

/// lambda(l) = (-1)^l [2S+1]!/[S+1] [S choose l] / [S+l+1 choose l], exactly.
inline RatQ conjectured_eigenvalue(int spin, int l) {
  if (spin < 1 || l < 0 || l > spin) throw DomainError("conjectured_eigenvalue: need S >= 1 and 0 <= l <= S");
  RatQ v = RatQ(q_factorial(2 * spin + 1), q_integer(spin + 1)) * RatQ(q_binomial(spin, l), q_binomial(spin + l + 1, l));
  return l % 2 == 0 ? v : -v;
}

template <class Real>
Real conjectured_eigenvalue_value(int spin, int l, Real q) {
  if (spin < 1 || l < 0 || l > spin) throw DomainError("conjectured_eigenvalue: need S >= 1 and 0 <= l <= S");
  const Real v = q_factorial_value(2 * spin + 1, q) / q_integer_value(spin + 1, q) * q_binomial_value(spin, l, q) /
                 q_binomial_value(spin + l + 1, l, q);
  return l % 2 == 0 ? v : -v;
}

template <class Real>
struct ConjectureLevel {
  int l = 0;
  Real expected = 0;
  Real found = 0;  // closest eigenvalue group
  int multiplicity = 0;
  int expected_multiplicity = 0;
  Real rel_error = 0;
};

template <class Real>
struct ConjectureCheck {
  int spin = 0;
  Real q = 0;
  bool match = false;
  Real max_rel_error = 0;
  std::size_t group_count = 0;
  std::vector<ConjectureLevel<Real>> levels;
};

/// Compares the spectrum of G with lambda(l) and multiplicities 2l+1.
template <class Real>
ConjectureCheck<Real> check_conjecture(int spin, Real q, Real tol = Real(kDegeneracyTolerance)) {
  const auto es = eigensystem(transfer_matrix(spin, q).matrix, tol, false);
  ConjectureCheck<Real> c;
  c.spin = spin;
  c.q = q;
  c.group_count = es.groups.size();
  c.match = es.groups.size() == static_cast<std::size_t>(spin + 1);
  for (int l = 0; l <= spin; ++l) {
    ConjectureLevel<Real> lev;
    lev.l = l;
    lev.expected = conjectured_eigenvalue_value(spin, l, q);
    lev.expected_multiplicity = 2 * l + 1;
    Real best = -1;
    for (const auto& grp : es.groups) {
      const Real err = std::abs(grp.value - lev.expected) / std::abs(lev.expected);
      if (best < 0 || err < best) {
        best = err;
        lev.found = grp.value;
        lev.multiplicity = grp.multiplicity;
      }
    }
    lev.rel_error = best;
    c.max_rel_error = std::max(c.max_rel_error, best);
    if (!(best <= tol) || lev.multiplicity != lev.expected_multiplicity) c.match = false;
    c.levels.push_back(lev);
  }
  return c;
}

struct ExactConjectureLevel {
  int l = 0;
  RatQ eigenvalue;
  std::size_t nullity = 0;  // dim ker(G - lambda(l))
  int expected_multiplicity = 0;
};

struct ExactConjectureCheck {
  int spin = 0;
  bool match = false;
  std::vector<ExactConjectureLevel> levels;
};

/// Over Q(q): nullity of (X^2 G0 - lambda(l)) must be 2l+1 for every l.
/// The nullities then add up to (S+1)^2, so the lambda(l) exhaust the spectrum.
inline ExactConjectureCheck check_conjecture_exact(int spin) {
  const ExactTransfer t = exact_transfer(spin);
  ExactConjectureCheck c;
  c.spin = spin;
  c.match = true;
  const std::size_t n = t.dim();
  std::size_t total = 0;
  for (int l = 0; l <= spin; ++l) {
    ExactConjectureLevel lev;
    lev.l = l;
    lev.eigenvalue = conjectured_eigenvalue(spin, l);
    lev.expected_multiplicity = 2 * l + 1;
    ExactMatrix m = t.similar;
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= lev.eigenvalue;
    lev.nullity = n - rank(m);
    total += lev.nullity;
    if (lev.nullity != static_cast<std::size_t>(lev.expected_multiplicity)) c.match = false;
    c.levels.push_back(lev);
  }
  if (total != n) c.match = false;
  return c;
}

// ---------------------------------------------------------------------------
// Correlation functions

namespace detail {

/// Product of matrices kept as (matrix, log scale) so that long chains do not overflow.
template <class Real>
struct ScaledProduct {
  Matrix<Real> m;
  Real log_scale = 0;

  explicit ScaledProduct(Eigen::Index n) : m(Matrix<Real>::Identity(n, n)) {}

  void times(const Matrix<Real>& x) {
    m = m * x;
    const Real s = m.cwiseAbs().maxCoeff();
    if (s > 0) {
      m /= s;
      log_scale += std::log(s);
    }
  }
  void times_power(const Matrix<Real>& x, int p) {
    for (int i = 0; i < p; ++i) times(x);
  }
};

template <class Real>
Real trace_ratio(const ScaledProduct<Real>& num, const ScaledProduct<Real>& den) {
  return num.m.trace() / den.m.trace() * std::exp(num.log_scale - den.log_scale);
}

}  // namespace detail

/// <A> = Tr(G^A G^{L-1}) / Tr G^L on a periodic chain of L sites.
template <class Real>
Real one_point_finite(int spin, Real q, int length, const SiteOperator<Real>& a_op) {
  if (length < 2) throw DomainError("one_point_finite: need L >= 2");
  const Matrix<Real> g = transfer_matrix(spin, q).matrix;
  const Matrix<Real> ga = transfer_matrix(spin, q, a_op).matrix;
  detail::ScaledProduct<Real> num(g.rows());
  num.times(ga);
  num.times_power(g, length - 1);
  detail::ScaledProduct<Real> den(g.rows());
  den.times_power(g, length);
  return detail::trace_ratio(num, den);
}

/// <A_1 B_r> = Tr(G^A G^{r-2} G^B G^{L-r}) / Tr G^L, 2 <= r <= L.
template <class Real>
Real two_point_finite(int spin, Real q, int length, int r, const SiteOperator<Real>& a_op, const SiteOperator<Real>& b_op) {
  if (length < 2) throw DomainError("two_point_finite: need L >= 2");
  if (r < 2 || r > length) throw DomainError("two_point_finite: need 2 <= r <= L");
  const Matrix<Real> g = transfer_matrix(spin, q).matrix;
  const Matrix<Real> ga = transfer_matrix(spin, q, a_op).matrix;
  const Matrix<Real> gb = transfer_matrix(spin, q, b_op).matrix;
  detail::ScaledProduct<Real> num(g.rows());
  num.times(ga);
  num.times_power(g, r - 2);
  num.times(gb);
  num.times_power(g, length - r);
  detail::ScaledProduct<Real> den(g.rows());
  den.times_power(g, length);
  return detail::trace_ratio(num, den);
}

/// Thermodynamic-limit correlators from the orthonormal eigensystem of G.
template <class Real>
class ThermoCorrelator {
 public:
  ThermoCorrelator(int spin, Real q) : spin_(spin), q_(q), es_(eigensystem(transfer_matrix(spin, q).matrix)) {}

  int spin() const { return spin_; }
  Real q() const { return q_; }
  const EigenSystem<Real>& eigen() const { return es_; }

  /// lambda_1^{-1} <e_1|G^A|e_1>
  Real one_point(const SiteOperator<Real>& a_op) const {
    const Matrix<Real> ga = transfer_matrix(spin_, q_, a_op).matrix;
    const Vector<Real> e1 = es_.vectors.col(0);
    return e1.dot(ga * e1) / es_.values(0);
  }

  /// sum_n lambda_n^{r-2} / lambda_1^r <e_1|G^A|e_n><e_n|G^B|e_1>, r >= 2.
  Real two_point(int r, const SiteOperator<Real>& a_op, const SiteOperator<Real>& b_op) const {
    return two_point_impl(r, a_op, b_op, false);
  }

  /// Same sum with the first factor replaced by the diagonal <e_1|G^A|e_1>.
  /// For S^z this variant vanishes identically; it is reported next to two_point.
  Real two_point_diagonal_left(int r, const SiteOperator<Real>& a_op, const SiteOperator<Real>& b_op) const {
    return two_point_impl(r, a_op, b_op, true);
  }

  /// <P(S^z = m)> for m = -S..S.
  std::vector<Real> sz_distribution() const {
    std::vector<Real> p;
    for (int m = -spin_; m <= spin_; ++m) p.push_back(one_point(sz_projector<Real>(spin_, m)));
    return p;
  }

 private:
  Real two_point_impl(int r, const SiteOperator<Real>& a_op, const SiteOperator<Real>& b_op, bool diagonal_left) const {
    if (r < 2) throw DomainError("two_point_thermo: only r >= 2 is supported");
    const Matrix<Real> ga = transfer_matrix(spin_, q_, a_op).matrix;
    const Matrix<Real> gb = transfer_matrix(spin_, q_, b_op).matrix;
    const Vector<Real> e1 = es_.vectors.col(0);
    const Real l1 = es_.values(0);
    const Vector<Real> left = es_.vectors.transpose() * (ga.transpose() * e1);  // <e_1|G^A|e_n>
    const Vector<Real> right = es_.vectors.transpose() * (gb * e1);             // <e_n|G^B|e_1>
    const Real first_fixed = e1.dot(ga * e1);
    Real sum = 0;
    for (Eigen::Index n = 0; n < es_.values.size(); ++n) {
      const Real ratio = es_.values(n) / l1;
      const Real weight = std::pow(ratio, r - 2) / (l1 * l1);
      sum += weight * (diagonal_left ? first_fixed : left(n)) * right(n);
    }
    return sum;
  }

  int spin_;
  Real q_;
  EigenSystem<Real> es_;
};

template <class Real>
Real one_point_thermo(int spin, Real q, const SiteOperator<Real>& a_op) {
  return ThermoCorrelator<Real>(spin, q).one_point(a_op);
}

template <class Real>
Real two_point_thermo(int spin, Real q, int r, const SiteOperator<Real>& a_op, const SiteOperator<Real>& b_op) {
  return ThermoCorrelator<Real>(spin, q).two_point(r, a_op, b_op);
}

template <class Real>
std::vector<Real> sz_distribution(int spin, Real q) {
  return ThermoCorrelator<Real>(spin, q).sz_distribution();
}

/// Exact <P(S^z = m)>, m = -S..S, as elements of Q(q).
///
/// With u spanning ker(X^2 G0 - lambda_1), the top eigenvector of G is
/// proportional to X^{-1} u, so <P_m> = u^T G0^{P_m} u / (lambda_1 u^T X^{-2} u)
/// and no radicals appear. G0^{P_m} keeps the entries of G0 with c - a = m.
inline std::vector<RatQ> sz_distribution_exact(int spin) {
  const ExactTransfer t = exact_transfer(spin);
  const std::size_t n = t.dim();
  const RatQ l1 = conjectured_eigenvalue(spin, 0);
  ExactMatrix shifted = t.similar;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= l1;
  const auto kernel = nullspace(shifted);
  if (kernel.size() != 1) throw VerificationError("sz_distribution_exact: top eigenvalue is not simple");
  const auto& u = kernel.front();
  RatQ norm;
  for (std::size_t i = 0; i < n; ++i) {
    if (!u[i].is_zero()) norm += u[i] * u[i] / t.x_squared[i];
  }
  const RatQ den = l1 * norm;
  std::vector<RatQ> p(static_cast<std::size_t>(2 * spin + 1));
  for (int a = 1; a <= spin + 1; ++a) {
    for (int b = 1; b <= spin + 1; ++b) {
      for (int c = 1; c <= spin + 1; ++c) {
        for (int d = 1; d <= spin + 1; ++d) {
          const auto row = static_cast<std::size_t>(pair_index(spin, a, b));
          const auto col = static_cast<std::size_t>(pair_index(spin, c, d));
          const RatQ& g0 = t.reduced(row, col);
          if (g0.is_zero() || u[row].is_zero() || u[col].is_zero()) continue;
          p[static_cast<std::size_t>(c - a + spin)] += u[row] * g0 * u[col];
        }
      }
    }
  }
  for (auto& v : p) v /= den;
  return p;
}

/// Closed forms for <S^z_1 S^z_r> for S = 2 and S = 3, r >= 2.
template <class Real>
Real closed_form_szsz(int spin, Real q, int r) {
  if (r < 2) throw DomainError("closed_form_szsz: only r >= 2 is supported");
  auto n = [&](int k) { return q_integer_value(k, q); };
  auto qd = [&](int k) { return std::pow(q, Real(k)) - std::pow(q, Real(-k)); };
  if (spin == 2) {
    const Real pref = -n(2) * n(3) / n(4) * std::pow(n(2) / (n(5) * n(4)), r);
    const Real first = qd(1) * qd(3) * n(6) * n(6) / (n(3) * n(3) * n(2) * n(2));
    const Real second = n(2) * n(2) * std::pow(-n(5), r);
    return pref * (first + second);
  }
  if (spin == 3) {
    const Real pref = -n(2) / (n(6) * n(5) * n(3)) * std::pow(n(3) / (n(7) * n(6) * n(5)), r);
    const Real t9 = n(9) - qd(2) * qd(2);
    const Real first = qd(1) * qd(1) * qd(3) * qd(3) * t9 * t9 * n(4) * n(4) / (n(2) * n(2)) * std::pow(-n(2), r);
    const Real second = qd(3) * qd(3) * n(8) * n(8) * n(5) / (n(4) * n(4)) * std::pow(n(7) * n(2), r);
    const Real u = std::pow(n(2), 4) - 2 * n(3);
    const Real third = u * u * n(6) * n(2) / n(3) * std::pow(-n(7) * n(6), r);
    return pref * (first + second + third);
  }
  throw DomainError("closed_form_szsz: closed forms exist only for S = 2 and S = 3");
}

/// The isotropic (q = 1) values of the closed forms.
inline double szsz_isotropic_limit(int spin, int r) {
  if (spin == 2) return -6.0 * std::pow(-2.0, -r);
  if (spin == 3) return -80.0 * std::pow(-3.0, r - 2) * std::pow(5.0, -r);
  throw DomainError("szsz_isotropic_limit: only S = 2 and S = 3");
}

/// The S = 2 closed forms for <P(S^z = m)>, m = -2..2.
inline std::vector<RatQ> sz_distribution_closed_form_s2() {
  const RatQ p2 = RatQ(LaurentQ(1), q_integer(5));
  const RatQ p1 = RatQ(q_integer(2) * q_integer(8), q_integer(5) * q_integer(4) * q_integer(4));
  const RatQ p0 = RatQ(q_integer(2), q_integer(5) * q_integer(4)) *
                  (RatQ(1) + RatQ(q_integer(12), q_integer(3) * q_integer(4)));
  return {p2, p1, p0, p1, p2};
}

}  // namespace qvbs
