#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qvbs/errors.hpp"
#include "qvbs/ratq.hpp"

namespace qvbs {

/// Dense row-major matrix over Q(q).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RatQ(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatQ& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RatQ& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    check_same_shape(a, b);
    ExactMatrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    check_same_shape(a, b);
    ExactMatrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }

  /// Product skipping zero entries; the matrices here are block-sparse.
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("ExactMatrix product: shape mismatch");
    ExactMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const RatQ& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const RatQ& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          r(i, j) += aik * bkj;
        }
      }
    }
    return r;
  }

  std::vector<RatQ> apply(const std::vector<RatQ>& v) const {
    if (v.size() != cols_) throw DomainError("ExactMatrix apply: shape mismatch");
    std::vector<RatQ> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        if (!(*this)(i, k).is_zero() && !v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
      }
    }
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static void check_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("ExactMatrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatQ> data_;
};

namespace detail {

// Pivot preference: lowest total degree keeps intermediate expressions short.
inline std::size_t pivot_cost(const RatQ& v) {
  return v.num().size() + v.den().size() +
         static_cast<std::size_t>(v.num().max_exp() - v.num().min_exp() + v.den().max_exp());
}

struct Echelon {
  ExactMatrix reduced;                // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
};

inline Echelon row_reduce(ExactMatrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    std::size_t best_cost = 0;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const std::size_t c = pivot_cost(m(r, col));
      if (best == m.rows() || c < best_cost) {
        best = r;
        best_cost = c;
      }
    }
    if (best == m.rows()) continue;
    if (best != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(best, c), m(row, c));
    }
    const RatQ inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const RatQ factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

}  // namespace detail

inline std::size_t rank(const ExactMatrix& m) { return detail::row_reduce(m).pivot_cols.size(); }

/// Inverse by Gauss-Jordan on [M | I]; throws ArithmeticError if singular.
inline ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = RatQ(1);
  }
  auto ech = detail::row_reduce(std::move(aug));
  if (ech.pivot_cols.size() < n || ech.pivot_cols[n - 1] != n - 1) throw ArithmeticError("inverse: matrix is singular");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  }
  return inv;
}

/// Basis of the right null space {v : M v = 0}.
inline std::vector<std::vector<RatQ>> nullspace(const ExactMatrix& m) {
  auto ech = detail::row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<RatQ>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<RatQ> v(m.cols());
    v[free] = RatQ(1);
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) v[ech.pivot_cols[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qvbs
