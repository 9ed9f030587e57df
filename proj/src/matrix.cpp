#include "invariants/matrix.hpp"

namespace invariants {

namespace {

// One Bareiss elimination pass; returns the number of pivot steps and, when
// `want_det` and the matrix is square and nonsingular, the signed last pivot.
struct BareissResult {
  size_t rank = 0;
  Poly det;  // valid only when det_valid
  bool det_valid = false;
};

BareissResult bareiss(Matrix<Poly> m, bool want_det, par::Mode mode) {
  BareissResult out;
  const size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return out;
  const RingCtxPtr ctx = m.at(0, 0).ctx();
  Poly prev = poly_one(ctx);
  int sign = 1;
  size_t steps = std::min(rows, cols);
  size_t k = 0;
  for (; k < steps; ++k) {
    size_t pr = rows, pc = cols;
    for (size_t c = k; c < cols && pr == rows; ++c)
      for (size_t r = k; r < rows; ++r)
        if (!m.at(r, c).is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == rows) break;
    if (pr != k) {
      for (size_t c = 0; c < cols; ++c) std::swap(m.at(pr, c), m.at(k, c));
      sign = -sign;
    }
    if (pc != k) {
      for (size_t r = 0; r < rows; ++r) std::swap(m.at(r, pc), m.at(r, k));
      sign = -sign;
    }
    const bool unit_prev = prev.is_constant();
    const Poly pivot = m.at(k, k);
    Cyclotomic prev_c = unit_prev ? prev.terms().begin()->second : Cyclotomic(1);
    par::parallel_for(rows - k - 1, mode, [&](size_t ii) {
      size_t i = k + 1 + ii;
      for (size_t j = k + 1; j < cols; ++j) {
        Poly t = pivot * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = unit_prev ? t.scaled(prev_c.inverse()) : exact_div(t, prev);
      }
    });
    prev = pivot;
    ++out.rank;
  }
  if (want_det && rows == cols) {
    out.det_valid = true;
    if (out.rank < rows) {
      out.det = Poly(ctx);
    } else {
      out.det = sign < 0 ? -prev : prev;
    }
  }
  return out;
}

}  // namespace

size_t bareiss_rank(Matrix<Poly> m, par::Mode mode) {
  return bareiss(std::move(m), false, mode).rank;
}

Poly bareiss_det(const Matrix<Poly>& m, par::Mode mode) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  return bareiss(m, true, mode).det;
}

std::vector<RatFunc> cramer_solve(const Matrix<Poly>& a, const std::vector<Poly>& b,
                                  par::Mode mode) {
  const size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("cramer_solve shape mismatch");
  Poly det = bareiss_det(a, mode);
  if (det.is_zero()) throw std::domain_error("cramer_solve: singular matrix");
  std::vector<RatFunc> x;
  x.reserve(n);
  for (size_t col = 0; col < n; ++col) {
    Matrix<Poly> ai = a;
    for (size_t r = 0; r < n; ++r) ai.at(r, col) = b[r];
    x.emplace_back(bareiss_det(ai, mode), det);
  }
  return x;
}

}  // namespace invariants
