#ifndef SEPDEF_LINALG_HPP
#define SEPDEF_LINALG_HPP

#include <vector>

#include "sepdef/scalar.hpp"

namespace sepdef {

/// Dense matrix over Scalar (row major).
struct Mat {
  size_t rows = 0, cols = 0;
  Ring ring;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(size_t r, size_t c, const Ring& rg)
      : rows(r), cols(c), ring(rg), a(r * c, Scalar(0, rg)) {}

  Scalar& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Scalar& at(size_t i, size_t j) const { return a[i * cols + j]; }

  static Mat identity(size_t n, const Ring& rg) {
    Mat m(n, n, rg);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1, rg);
    return m;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw ring_error("matrix shape mismatch");
    Mat z(x.rows, y.cols, x.ring);
    for (size_t i = 0; i < x.rows; ++i)
      for (size_t k = 0; k < x.cols; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (size_t j = 0; j < y.cols; ++j)
          z.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return z;
  }
  friend Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw ring_error("matrix shape mismatch");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
  }
  friend Mat operator*(const Scalar& s, const Mat& y) {
    Mat z = y;
    for (auto& v : z.a) v *= s;
    return z;
  }
};

/// in-place reduced row echelon form over the fraction field; returns pivot
/// columns
inline std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t sel = row;
    while (sel < m.rows && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows) continue;
    for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline size_t rank(Mat m) { return rref(m).size(); }

/// basis of the right null space
inline std::vector<std::vector<Scalar>> nullspace(Mat m) {
  auto pivots = rref(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols, Scalar(0, m.ring));
    v[free] = Scalar(1, m.ring);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Mat mat_inverse(const Mat& m) {
  if (m.rows != m.cols) throw ring_error("inverting non-square matrix");
  Mat aug(m.rows, 2 * m.cols, m.ring);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = Scalar(1, m.ring);
  }
  auto pivots = rref(aug);
  if (pivots.size() != m.rows) throw pole_error("matrix is singular");
  Mat inv(m.rows, m.cols, m.ring);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

/// Result of an exact linear solve A x = b.
struct LinearSolution {
  bool consistent = false;
  std::vector<Scalar> x;  // particular solution, free unknowns zero
  size_t rank = 0;
};

/// naive engine: Gauss-Jordan over the fraction field (cross-check oracle)
inline LinearSolution solve_naive(Mat A, std::vector<Scalar> b) {
  if (A.rows != b.size()) throw ring_error("rhs size mismatch");
  Mat aug(A.rows, A.cols + 1, A.ring);
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  auto pivots = rref(aug);
  LinearSolution out;
  out.consistent = pivots.empty() || pivots.back() != A.cols;
  if (!out.consistent) return out;
  out.rank = pivots.size();
  out.x.assign(A.cols, Scalar(0, A.ring));
  for (size_t r = 0; r < pivots.size(); ++r) out.x[pivots[r]] = aug.at(r, A.cols);
  return out;
}

/// Fraction-free engine: denominators cleared per row, Bareiss elimination
/// over the polynomial ring (divisions exact), rational back-substitution.
inline LinearSolution solve_bareiss(const Mat& A, const std::vector<Scalar>& b) {
  if (A.rows != b.size()) throw ring_error("rhs size mismatch");
  const Ring& rg = A.ring;
  size_t R = A.rows, C = A.cols;
  // clear denominators row by row; entries become Poly
  std::vector<std::vector<Poly>> m(R, std::vector<Poly>(C + 1, Poly(rg)));
  for (size_t i = 0; i < R; ++i) {
    Poly lcm(Num(1, rg));
    auto fold = [&](const Poly& den) {
      Poly g = poly_gcd(lcm, den);
      lcm = div_exact(lcm * den, g);
    };
    for (size_t j = 0; j < C; ++j) fold(A.at(i, j).den());
    fold(b[i].den());
    for (size_t j = 0; j < C; ++j)
      m[i][j] = A.at(i, j).num() * div_exact(lcm, A.at(i, j).den());
    m[i][C] = b[i].num() * div_exact(lcm, b[i].den());
  }
  // Bareiss forward elimination with column pivoting
  std::vector<size_t> pivot_col;
  std::vector<size_t> pivot_row;
  Poly prev(Num(1, rg));
  size_t row = 0;
  for (size_t col = 0; col < C && row < R; ++col) {
    size_t sel = row;
    while (sel < R && m[sel][col].is_zero()) ++sel;
    if (sel == R) continue;
    std::swap(m[sel], m[row]);
    const Poly& p = m[row][col];
    for (size_t i = row + 1; i < R; ++i) {
      for (size_t j = col + 1; j <= C; ++j)
        m[i][j] = div_exact(p * m[i][j] - m[i][col] * m[row][j], prev);
      m[i][col] = Poly(rg);
    }
    prev = p;
    pivot_col.push_back(col);
    pivot_row.push_back(row);
    ++row;
  }
  LinearSolution out;
  for (size_t i = row; i < R; ++i)
    if (!m[i][C].is_zero()) return out;  // inconsistent
  out.consistent = true;
  out.rank = pivot_col.size();
  out.x.assign(C, Scalar(0, rg));
  // back substitution over the fraction field, free unknowns already zero
  for (size_t r = pivot_col.size(); r-- > 0;) {
    size_t i = pivot_row[r], c = pivot_col[r];
    Scalar acc(m[i][C]);
    for (size_t j = c + 1; j < C; ++j) {
      if (m[i][j].is_zero() || out.x[j].is_zero()) continue;
      acc -= Scalar(m[i][j]) * out.x[j];
    }
    out.x[c] = acc / Scalar(m[i][c]);
  }
  return out;
}

}  // namespace sepdef

#endif
