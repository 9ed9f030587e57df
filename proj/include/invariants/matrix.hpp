#ifndef INVARIANTS_MATRIX_HPP
#define INVARIANTS_MATRIX_HPP

#include <vector>

#include "invariants/parallel.hpp"
#include "invariants/polynomial.hpp"
#include "invariants/rational_function.hpp"

namespace invariants {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, const T& fill)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const T& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(x.rows_, y.cols_, x.a_.empty() ? T{} : x.a_.front());
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t j = 0; j < y.cols_; ++j) {
        T acc = x.at(i, 0) * y.at(0, j);
        for (size_t k = 1; k < x.cols_; ++k) acc += x.at(i, k) * y.at(k, j);
        r.at(i, j) = acc;
      }
    return r;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) {
        if (i == j ? !is_one_entry(at(i, j)) : !is_zero(at(i, j))) return false;
      }
    return true;
  }

 private:
  static bool is_one_entry(const Cyclotomic& c) { return c.is_one(); }
  static bool is_one_entry(const RatFunc& c) { return c.is_one(); }

  size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

/// In-place reduced row echelon form over a coefficient field; returns the
/// rank. Deterministic: first nonzero pivot by row scan per column.
template <class F>
size_t rref(Matrix<F>& m) {
  size_t rank = 0;
  for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    size_t sel = rank;
    while (sel < m.rows() && is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != rank)
      for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(rank, c));
    F inv = m.at(rank, col).inverse();
    for (size_t c = col; c < m.cols(); ++c) m.at(rank, c) = m.at(rank, c) * inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || is_zero(m.at(r, col))) continue;
      F f = m.at(r, col);
      for (size_t c = col; c < m.cols(); ++c)
        m.at(r, c) = m.at(r, c) - f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

template <class F>
size_t rank_of(Matrix<F> m) {
  return rref(m);
}

/// Rank by fraction-free Bareiss elimination with full pivoting: all
/// intermediate entries stay polynomial, every division is exact. The row
/// update is a data-parallel kernel; results are identical in both modes.
size_t bareiss_rank(Matrix<Poly> m, par::Mode mode = par::default_mode());

/// Determinant of a square polynomial matrix via Bareiss (last pivot).
Poly bareiss_det(const Matrix<Poly>& m, par::Mode mode = par::default_mode());

/// Solve A x = b over k(x) by Cramer's rule with Bareiss determinants;
/// throws std::domain_error when A is singular.
std::vector<RatFunc> cramer_solve(const Matrix<Poly>& a, const std::vector<Poly>& b,
                                  par::Mode mode = par::default_mode());

}  // namespace invariants

#endif
