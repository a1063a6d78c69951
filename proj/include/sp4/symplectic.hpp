#ifndef SP4_SYMPLECTIC_HPP
#define SP4_SYMPLECTIC_HPP

#include <stdexcept>

#include "sp4/types.hpp"

// Symplectic form, membership predicates and exact 4x4 helpers, templated on
// the scalar. The form is fixed once and for all to
//
//     J = ( 0   I2 )
//         ( -I2  0 )
//
// i.e. omega(u, v) = u1 v3 + u2 v4 - u3 v1 - u4 v2.  Group elements satisfy
// g^T J g = J, algebra elements X^T J + J X = 0; in 2x2 blocks (A B; C D) the
// algebra condition reads A^T = -D, B^T = B, C^T = C.

namespace sp4 {

template <typename Scalar>
Mat4<Scalar> symplectic_form() {
  Mat4<Scalar> j = Mat4<Scalar>::Zero();
  j(0, 2) = Scalar(1);
  j(1, 3) = Scalar(1);
  j(2, 0) = Scalar(-1);
  j(3, 1) = Scalar(-1);
  return j;
}

inline const Mat4q& J4q() {
  static const Mat4q j = symplectic_form<Rational>();
  return j;
}
inline const Mat4g& J4g() {
  static const Mat4g j = symplectic_form<GaussianRational>();
  return j;
}
inline const Mat4d& J4d() {
  static const Mat4d j = symplectic_form<double>();
  return j;
}

template <typename Derived>
typename Derived::PlainObject commutator(const Eigen::MatrixBase<Derived>& a,
                                         const Eigen::MatrixBase<Derived>& b) {
  return a * b - b * a;
}

template <typename Derived>
bool is_exactly_zero(const Eigen::MatrixBase<Derived>& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

// --- exact-mode predicates -------------------------------------------------

template <typename Scalar>
bool is_symplectic(const Mat4<Scalar>& g) {
  Mat4<Scalar> j = symplectic_form<Scalar>();
  return is_exactly_zero(Mat4<Scalar>(g.transpose() * j * g - j));
}

template <typename Scalar>
bool is_in_algebra(const Mat4<Scalar>& x) {
  Mat4<Scalar> j = symplectic_form<Scalar>();
  return is_exactly_zero(Mat4<Scalar>(x.transpose() * j + j * x));
}

// --- float-mode predicates -------------------------------------------------

inline constexpr double kDefaultTol = 1e-12;

inline double symplectic_defect(const Mat4d& g) {
  return (g.transpose() * J4d() * g - J4d()).cwiseAbs().maxCoeff();
}

inline bool is_symplectic(const Mat4d& g, double tol = kDefaultTol) {
  return symplectic_defect(g) <= tol;
}

inline bool is_in_algebra(const Mat4d& x, double tol = kDefaultTol) {
  return (x.transpose() * J4d() + J4d() * x).cwiseAbs().maxCoeff() <= tol;
}

// --- Cartan involutions ----------------------------------------------------

/// Algebra-level involution theta(X) = -X^T; the +1 eigenspace is the
/// compact subalgebra k.
template <typename Scalar>
Mat4<Scalar> cartan_involution_algebra(const Mat4<Scalar>& x) {
  if constexpr (std::is_same_v<Scalar, double>) {
    if (!is_in_algebra(x)) throw std::invalid_argument("cartan_involution_algebra: input not in sp(4)");
  } else {
    if (!is_in_algebra<Scalar>(x)) throw std::invalid_argument("cartan_involution_algebra: input not in sp(4)");
  }
  return -x.transpose();
}

/// Group-level involution theta(g) = (g^T)^{-1}; for symplectic g this equals
/// -J g J, so it is evaluated without inversion.
template <typename Scalar>
Mat4<Scalar> cartan_involution_group(const Mat4<Scalar>& g) {
  Mat4<Scalar> j = symplectic_form<Scalar>();
  return Mat4<Scalar>(-(j * g * j));
}

// --- exact inverse via adjugate ---------------------------------------------

template <typename Scalar>
Scalar det3(const Mat4<Scalar>& m, int r0, int r1, int r2, int c0, int c1, int c2) {
  return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
         m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
         m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
}

template <typename Scalar>
Scalar determinant4(const Mat4<Scalar>& m) {
  Scalar d = Scalar(0);
  int sign = 1;
  for (int c = 0; c < 4; ++c) {
    int cc[3], k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != c) cc[k++] = j;
    Scalar minor = det3(m, 1, 2, 3, cc[0], cc[1], cc[2]);
    Scalar term = m(0, c) * minor;
    d = (sign > 0) ? d + term : d - term;
    sign = -sign;
  }
  return d;
}

/// Inverse of an exact 4x4 matrix by adjugate / determinant.
template <typename Scalar>
Mat4<Scalar> exact_inverse(const Mat4<Scalar>& m) {
  Scalar det = determinant4(m);
  if (det.is_zero()) throw std::domain_error("exact_inverse: singular matrix");
  Mat4<Scalar> adj;
  for (int r = 0; r < 4; ++r) {
    int rr[3], k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != r) rr[k++] = i;
    for (int c = 0; c < 4; ++c) {
      int cc[3];
      k = 0;
      for (int j = 0; j < 4; ++j)
        if (j != c) cc[k++] = j;
      Scalar minor = det3(m, rr[0], rr[1], rr[2], cc[0], cc[1], cc[2]);
      adj(c, r) = ((r + c) % 2 == 0) ? minor / det : -minor / det;
    }
  }
  return adj;
}

}  // namespace sp4

#endif
