#ifndef SP4_EXACT_SOLVE_HPP
#define SP4_EXACT_SOLVE_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

// Exact Gauss-Jordan elimination over a field scalar (Rational or
// GaussianRational). Sizes here are tiny (at most 20 x 16), so plain
// fraction arithmetic with first-nonzero pivoting is fine.

namespace sp4 {

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// In-place reduced row echelon form; returns the pivot columns.
template <typename Scalar>
std::vector<int> rref(MatX<Scalar>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    Scalar inv = Scalar(1) / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
int exact_rank(MatX<Scalar> m) {
  return static_cast<int>(rref(m).size());
}

/// Basis of the (right) nullspace of m, one column vector per basis element.
template <typename Scalar>
std::vector<VecX<Scalar>> exact_nullspace(MatX<Scalar> m) {
  const int ncols = static_cast<int>(m.cols());
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<VecX<Scalar>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    VecX<Scalar> v = VecX<Scalar>::Constant(ncols, Scalar(0));
    v(free) = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v(pivots[k]) = -m(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Unique solution of the (possibly overdetermined) consistent system
/// a x = b; empty when inconsistent or underdetermined.
template <typename Scalar>
std::optional<VecX<Scalar>> exact_solve(const MatX<Scalar>& a, const VecX<Scalar>& b) {
  MatX<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  if (static_cast<int>(pivots.size()) != a.cols()) return std::nullopt;   // underdetermined
  VecX<Scalar> x = VecX<Scalar>::Constant(a.cols(), Scalar(0));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x(pivots[k]) = aug(static_cast<int>(k), a.cols());
  return x;
}

}  // namespace sp4

#endif
