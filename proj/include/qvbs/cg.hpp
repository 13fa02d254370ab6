#pragma once

// Clebsch-Gordan structure of V_S (x) V_S under U_q(su(2)): highest-weight
// vectors, lowering orbits, oblique projectors pi_J, the projector
// Hamiltonian and the divisibility check of the low-spin sectors.

#include <Eigen/Sparse>

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qvbs/budget.hpp"
#include "qvbs/errors.hpp"
#include "qvbs/exact_matrix.hpp"
#include "qvbs/qnum.hpp"
#include "qvbs/sitepoly.hpp"
#include "qvbs/surd.hpp"
#include "qvbs/weyl.hpp"

namespace qvbs {

/// Exponent vector of x_0^{Sk+mk} y_0^{Sk-mk} x_1^{Sl+ml} y_1^{Sl-ml}.
inline SitePoly::Exponents two_site_exponents(int spin_k, int m_k, int spin_l, int m_l) {
  return {spin_k + m_k, spin_k - m_k, spin_l + m_l, spin_l - m_l};
}

struct HighestWeightVector {
  int spin_k = 0;
  int spin_l = 0;
  int total = 0;  // J
  SitePoly poly{2};
  int lowest_mk = 0;
  std::vector<LaurentQ> coeffs;  // C_{m_k, J-m_k} for m_k = lowest_mk, lowest_mk + 1, ..., spin_k
};

/// Highest-weight vector of V_J in V_{Sk} (x) V_{Sl} on sites 0 (k) and 1 (l):
///   v_J = x_k^{Sk-Sl+J} x_l^{Sl-Sk+J} prod_{m=1}^{Sk+Sl-J} (x_k y_l - q^{2m-2-Sk-Sl} x_l y_k),
/// normalized with unit prefactor. The coefficients are cross-checked against
/// the annihilation recursion and the q-binomial closed form, and Delta(X+) v_J = 0.
inline HighestWeightVector highest_weight(int spin_k, int spin_l, int total) {
  if (spin_k < 0 || spin_l < 0) throw DomainError("highest_weight: spins must be nonnegative");
  if (total < std::abs(spin_k - spin_l) || total > spin_k + spin_l) {
    throw DomainError("highest_weight: J=" + std::to_string(total) + " outside the Clebsch-Gordan range [" +
                      std::to_string(std::abs(spin_k - spin_l)) + ", " + std::to_string(spin_k + spin_l) + "]");
  }
  HighestWeightVector hw;
  hw.spin_k = spin_k;
  hw.spin_l = spin_l;
  hw.total = total;

  SitePoly v = SitePoly::monomial(2, {spin_k - spin_l + total, 0, spin_l - spin_k + total, 0}, LaurentQ(1));
  const int n_factors = spin_k + spin_l - total;
  for (int m = 1; m <= n_factors; ++m) {
    SitePoly factor = SitePoly::monomial(2, {1, 0, 0, 1}, LaurentQ(1)) -
                      SitePoly::monomial(2, {0, 1, 1, 0}, LaurentQ::q_power(2 * m - 2 - spin_k - spin_l));
    v *= factor;
  }
  hw.poly = v;
  hw.lowest_mk = total - spin_l;
  for (int mk = hw.lowest_mk; mk <= spin_k; ++mk) {
    hw.coeffs.push_back(v.coeff(two_site_exponents(spin_k, mk, spin_l, total - mk)));
  }
  if (v.size() != hw.coeffs.size()) {
    throw VerificationError("highest_weight: unexpected monomials in the product form");
  }

  // [Sk - mk] q^{J-mk} C_{mk} + [Sl - J + mk + 1] q^{-mk-1} C_{mk+1} = 0
  for (int mk = hw.lowest_mk; mk < spin_k; ++mk) {
    const auto& c0 = hw.coeffs[static_cast<std::size_t>(mk - hw.lowest_mk)];
    const auto& c1 = hw.coeffs[static_cast<std::size_t>(mk - hw.lowest_mk + 1)];
    const LaurentQ lhs = q_integer(spin_k - mk) * c0.shifted(total - mk) +
                         q_integer(spin_l - total + mk + 1) * c1.shifted(-mk - 1);
    if (!lhs.is_zero()) throw VerificationError("highest_weight: coefficients violate the X+ recursion");
  }
  // C_{mk} proportional to (-1)^{Sk-mk} [Sk+Sl-J choose Sk-mk] q^{mk(J+1)}
  SitePoly closed(2);
  for (int mk = hw.lowest_mk; mk <= spin_k; ++mk) {
    LaurentQ c = q_binomial(n_factors, spin_k - mk).shifted(mk * (total + 1));
    if ((spin_k - mk) % 2 != 0) c = -c;
    closed.add_term(two_site_exponents(spin_k, mk, spin_l, total - mk), c);
  }
  if (!proportional(closed, v)) throw VerificationError("highest_weight: closed-form coefficients disagree");
  if (!coproduct_apply(v, Generator::XPlus, 0, 1).is_zero()) {
    throw VerificationError("highest_weight: vector is not annihilated by Delta(X+)");
  }
  return hw;
}

/// The orbit (Delta X-)^t v_J, t = 0..2J, spanning V_J in V_S (x) V_S.
inline std::vector<SitePoly> rep_basis(int spin, int total) {
  if (spin < 1) throw DomainError("rep_basis: spin must be >= 1");
  if (total < 0 || total > 2 * spin) throw DomainError("rep_basis: need 0 <= J <= 2S");
  std::vector<SitePoly> basis;
  SitePoly v = highest_weight(spin, spin, total).poly;
  for (int t = 0; t <= 2 * total; ++t) {
    if (v.is_zero()) throw VerificationError("rep_basis: lowering orbit terminated early");
    basis.push_back(v);
    v = coproduct_apply(v, Generator::XMinus, 0, 1);
  }
  if (!v.is_zero()) throw VerificationError("rep_basis: (Delta X-)^{2J+1} v_J is not zero");
  return basis;
}

/// Index of |m_k> (x) |m_l> in the (2S+1)^2 two-site basis.
inline std::size_t two_site_index(int spin, int m_k, int m_l) {
  return static_cast<std::size_t>((m_k + spin) * (2 * spin + 1) + (m_l + spin));
}

/// Oblique projector onto V_J along the other summands of V_S (x) V_S.
///
/// Stored in the monomial basis x^{S+m} y^{S-m} (entries in Q(q)); the
/// normalized spin-basis entries are W_i pi_ij / W_j with W the product of
/// sqrt([S+m]![S-m]!) factors, which generally carry radicals.
class Projector {
 public:
  Projector(int spin, int total, ExactMatrix monomial) : spin_(spin), total_(total), mono_(std::move(monomial)) {
    // Common denominator so that applying the projector needs only Laurent arithmetic.
    LaurentQ lcm(1);
    for (std::size_t i = 0; i < mono_.rows(); ++i) {
      for (std::size_t j = 0; j < mono_.cols(); ++j) {
        const auto& d = mono_(i, j).den();
        if (d.is_one()) continue;
        lcm = divide_exact(lcm * d, gcd(lcm, d));
      }
    }
    den_ = lcm;
    cleared_.resize(mono_.rows() * mono_.cols());
    for (std::size_t i = 0; i < mono_.rows(); ++i) {
      for (std::size_t j = 0; j < mono_.cols(); ++j) {
        const auto& e = mono_(i, j);
        if (e.is_zero()) continue;
        cleared_[i * mono_.cols() + j] = e.num() * divide_exact(den_, e.den());
      }
    }
  }

  int spin() const { return spin_; }
  int total() const { return total_; }
  std::size_t dim() const { return mono_.rows(); }
  const ExactMatrix& monomial_matrix() const { return mono_; }

  /// pi = cleared / denominator, entrywise Laurent numerators.
  const LaurentQ& denominator() const { return den_; }
  const LaurentQ& cleared(std::size_t row, std::size_t col) const { return cleared_[row * dim() + col]; }

  /// Entry in the normalized spin basis.
  Surd entry(std::size_t row, std::size_t col) const {
    const RatQ& v = mono_(row, col);
    if (v.is_zero()) return Surd();
    return Surd(v) * weight_factor(row) / weight_factor(col);
  }

  /// Spin-basis matrix at a numeric q.
  template <class Real>
  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> numeric(Real q) const {
    const auto n = static_cast<Eigen::Index>(dim());
    Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> m = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
    const int d = 2 * spin_ + 1;
    std::vector<Real> w(static_cast<std::size_t>(d));
    for (int m_ = -spin_; m_ <= spin_; ++m_) {
      w[static_cast<std::size_t>(m_ + spin_)] =
          std::sqrt(q_factorial_value(spin_ + m_, q) * q_factorial_value(spin_ - m_, q));
    }
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < dim(); ++j) {
        const RatQ& v = mono_(i, j);
        if (v.is_zero()) continue;
        const Real wi = w[i / static_cast<std::size_t>(d)] * w[i % static_cast<std::size_t>(d)];
        const Real wj = w[j / static_cast<std::size_t>(d)] * w[j % static_cast<std::size_t>(d)];
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v.value(q) * wi / wj;
      }
    }
    return m;
  }

 private:
  Surd weight_factor(std::size_t idx) const {
    const int d = 2 * spin_ + 1;
    const int mk = static_cast<int>(idx) / d - spin_;
    const int ml = static_cast<int>(idx) % d - spin_;
    return spin_normalization(spin_, mk) * spin_normalization(spin_, ml);
  }

  int spin_;
  int total_;
  ExactMatrix mono_;
  LaurentQ den_;
  std::vector<LaurentQ> cleared_;
};

namespace detail {

inline std::vector<Projector> build_projectors(int spin) {
  const int d = 2 * spin + 1;
  const auto n = static_cast<std::size_t>(d * d);
  std::vector<std::vector<SitePoly>> orbits;
  for (int j = 0; j <= 2 * spin; ++j) orbits.push_back(rep_basis(spin, j));
  std::vector<ExactMatrix> pis(static_cast<std::size_t>(2 * spin + 1), ExactMatrix(n, n));

  // pi_J preserves the total weight M, so work one weight sector at a time.
  for (int M = -2 * spin; M <= 2 * spin; ++M) {
    const int lo = std::max(-spin, M - spin);
    const int hi = std::min(spin, M + spin);
    const auto size = static_cast<std::size_t>(hi - lo + 1);
    ExactMatrix basis(size, size);
    for (std::size_t c = 0; c < size; ++c) {
      const int j = std::abs(M) + static_cast<int>(c);
      const SitePoly& v = orbits[static_cast<std::size_t>(j)][static_cast<std::size_t>(j - M)];
      for (std::size_t r = 0; r < size; ++r) {
        const int mk = lo + static_cast<int>(r);
        basis(r, c) = RatQ(v.coeff(two_site_exponents(spin, mk, spin, M - mk)));
      }
    }
    const ExactMatrix inv = inverse(basis);  // singular would mean a broken decomposition
    for (std::size_t c = 0; c < size; ++c) {
      const int j = std::abs(M) + static_cast<int>(c);
      ExactMatrix& pi = pis[static_cast<std::size_t>(j)];
      for (std::size_t r = 0; r < size; ++r) {
        if (basis(r, c).is_zero()) continue;
        const std::size_t row = two_site_index(spin, lo + static_cast<int>(r), M - lo - static_cast<int>(r));
        for (std::size_t s = 0; s < size; ++s) {
          if (inv(c, s).is_zero()) continue;
          const std::size_t col = two_site_index(spin, lo + static_cast<int>(s), M - lo - static_cast<int>(s));
          pi(row, col) = basis(r, c) * inv(c, s);
        }
      }
    }
  }
  std::vector<Projector> out;
  for (int j = 0; j <= 2 * spin; ++j) out.emplace_back(spin, j, std::move(pis[static_cast<std::size_t>(j)]));
  return out;
}

}  // namespace detail

/// All projectors pi_0 .. pi_{2S} for V_S (x) V_S, built once per spin and shared.
inline const std::vector<Projector>& projectors(int spin) {
  if (spin < 1) throw DomainError("projectors: spin must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const std::vector<Projector>>> cache;
  std::shared_ptr<const std::vector<Projector>> entry;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(spin);
    if (it != cache.end()) return *it->second;
  }
  entry = std::make_shared<const std::vector<Projector>>(detail::build_projectors(spin));
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.emplace(spin, entry);
  return *it->second;
}

inline const Projector& projector(int spin, int total) {
  if (total < 0 || total > 2 * spin) throw DomainError("projector: need 0 <= J <= 2S");
  return projectors(spin)[static_cast<std::size_t>(total)];
}

/// Dimension of the joint kernel of {pi_J : S+1 <= J <= 2S} on two sites.
inline std::size_t two_site_ground_space_dimension(int spin) {
  const auto& pis = projectors(spin);
  const std::size_t n = pis[0].dim();
  ExactMatrix stacked(n * static_cast<std::size_t>(spin), n);
  for (int j = spin + 1; j <= 2 * spin; ++j) {
    const auto& m = pis[static_cast<std::size_t>(j)].monomial_matrix();
    const std::size_t off = n * static_cast<std::size_t>(j - spin - 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) stacked(off + r, c) = m(r, c);
    }
  }
  return n - rank(stacked);
}

enum class Boundary { Periodic, Open };

inline std::string to_string(Boundary b) { return b == Boundary::Periodic ? "pbc" : "open"; }

/// Ordered bonds (k, k+1); the periodic chain adds (L-1, 0).
inline std::vector<std::pair<int, int>> chain_bonds(int length, Boundary boundary) {
  std::vector<std::pair<int, int>> bonds;
  for (int k = 0; k + 1 < length; ++k) bonds.emplace_back(k, k + 1);
  if (boundary == Boundary::Periodic && length >= 2) bonds.emplace_back(length - 1, 0);
  return bonds;
}

/// H = sum_bonds sum_{J=S+1}^{2S} C_J pi_J(k, k+1) in the normalized spin basis at numeric q.
/// `couplings` lists C_{S+1}..C_{2S}; empty means all ones.
inline Eigen::SparseMatrix<double> hamiltonian(int spin, int length, Boundary boundary, double q,
                                               std::vector<double> couplings = {}) {
  if (spin < 1) throw DomainError("hamiltonian: spin must be >= 1");
  if (length < 2) throw DomainError("hamiltonian: need at least two sites");
  if (!(q > 0)) throw DomainError("hamiltonian: q must be positive");
  if (couplings.empty()) couplings.assign(static_cast<std::size_t>(spin), 1.0);
  if (couplings.size() != static_cast<std::size_t>(spin)) throw DomainError("hamiltonian: need S couplings C_{S+1..2S}");
  for (double c : couplings) {
    if (!(c >= 0)) throw DomainError("hamiltonian: couplings must be nonnegative");
  }
  const auto d = static_cast<std::size_t>(2 * spin + 1);
  const std::size_t dim = checked_pow(d, length);
  const auto bonds = chain_bonds(length, boundary);
  check_budget(bonds.size() * dim * d, sizeof(double) + 2 * sizeof(int), "Hamiltonian nonzeros L*(2S+1)^L*(2S+1)");

  Eigen::MatrixXd local = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d * d), static_cast<Eigen::Index>(d * d));
  for (int j = spin + 1; j <= 2 * spin; ++j) {
    const double c = couplings[static_cast<std::size_t>(j - spin - 1)];
    if (c != 0) local += c * projector(spin, j).numeric(q);
  }

  std::vector<std::size_t> stride(static_cast<std::size_t>(length));
  for (int l = length - 1, s = 1; l >= 0; --l) {
    stride[static_cast<std::size_t>(l)] = static_cast<std::size_t>(s);
    s *= static_cast<int>(d);
  }
  std::vector<Eigen::Triplet<double>> triplets;
  for (const auto& [k, l] : bonds) {
    const std::size_t sk = stride[static_cast<std::size_t>(k)];
    const std::size_t sl = stride[static_cast<std::size_t>(l)];
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t dk = (col / sk) % d;
      const std::size_t dl = (col / sl) % d;
      const std::size_t base = col - dk * sk - dl * sl;
      const auto local_col = static_cast<Eigen::Index>(dk * d + dl);
      for (std::size_t r = 0; r < d * d; ++r) {
        const double v = local(static_cast<Eigen::Index>(r), local_col);
        if (v == 0) continue;
        const std::size_t row = base + (r / d) * sk + (r % d) * sl;
        triplets.emplace_back(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col), v);
      }
    }
  }
  Eigen::SparseMatrix<double> h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  h.setFromTriplets(triplets.begin(), triplets.end());
  return h;
}

/// prod_{m=1}^{S} (q^m x_k y_l - q^{-m} y_k x_l) on sites 0 (k) and 1 (l).
inline SitePoly vbs_bond_divisor(int spin) {
  SitePoly d = SitePoly::constant(2, LaurentQ(1));
  for (int m = 1; m <= spin; ++m) {
    d *= SitePoly::monomial(2, {1, 0, 0, 1}, LaurentQ::q_power(m)) -
         SitePoly::monomial(2, {0, 1, 1, 0}, LaurentQ::q_power(-m));
  }
  return d;
}

struct DivisibilityEntry {
  int j = 0;
  int t = 0;
  bool remainder_zero = false;
  SitePoly vector{2};
  SitePoly quotient{2};
  SitePoly remainder{2};
};

struct DivisibilityReport {
  int spin = 0;
  std::vector<DivisibilityEntry> entries;

  bool all_divisible() const {
    for (const auto& e : entries) {
      if (!e.remainder_zero) return false;
    }
    return true;
  }
  std::size_t divisible_count() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.remainder_zero ? 1 : 0;
    return n;
  }
};

inline constexpr int kDefaultDivisibilitySpinBound = 4;

/// Divides every (Delta X-)^t v_j, j <= S, by the VBS bond divisor.
/// A nonzero remainder is reported, not thrown.
inline DivisibilityReport check_divisibility(int spin, int max_spin = kDefaultDivisibilitySpinBound) {
  if (spin < 1 || spin > max_spin) {
    throw DomainError("check_divisibility: need 1 <= S <= " + std::to_string(max_spin));
  }
  DivisibilityReport report;
  report.spin = spin;
  const SitePoly divisor = vbs_bond_divisor(spin);
  for (int j = 0; j <= spin; ++j) {
    const auto orbit = rep_basis(spin, j);
    for (int t = 0; t <= 2 * j; ++t) {
      DivisibilityEntry e;
      e.j = j;
      e.t = t;
      e.vector = orbit[static_cast<std::size_t>(t)];
      auto div = divide(e.vector, divisor);
      e.quotient = std::move(div.quotient);
      e.remainder = std::move(div.remainder);
      e.remainder_zero = e.remainder.is_zero();
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace qvbs
