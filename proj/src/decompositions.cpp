#include "sp4/decompositions.hpp"

#include <cmath>
#include <stdexcept>

#include "sp4/structure.hpp"
#include "sp4/symplectic.hpp"

namespace sp4 {

namespace {

void require_symplectic(const Mat4d& g, double tol, const char* who) {
  if (!is_symplectic(g, tol))
    throw std::invalid_argument(std::string(who) + ": input is not symplectic (defect " +
                                std::to_string(symplectic_defect(g)) + ")");
}

}  // namespace

double k_defect(const Mat4d& k) {
  double orth = (k.transpose() * k - Mat4d::Identity()).cwiseAbs().maxCoeff();
  return std::max(orth, symplectic_defect(k));
}

IwasawaFactors iwasawa(const Mat4d& g, double tol) {
  require_symplectic(g, tol, "iwasawa");

  const Mat2d A = g.topLeftCorner<2, 2>();
  const Mat2d B = g.topRightCorner<2, 2>();
  const Mat2d C = g.bottomLeftCorner<2, 2>();
  const Mat2d D = g.bottomRightCorner<2, 2>();

  // g . (iI) = (iA + B)(iC + D)^{-1}
  const std::complex<double> i(0.0, 1.0);
  Mat2cd num = i * A.cast<std::complex<double>>() + B.cast<std::complex<double>>();
  Mat2cd den = i * C.cast<std::complex<double>>() + D.cast<std::complex<double>>();
  if (std::abs(den.determinant()) < 1e-300)
    throw std::invalid_argument("iwasawa: degenerate Siegel action (input far from the group)");
  Mat2cd z = num * den.inverse();
  z = 0.5 * (z + z.transpose().eval());  // exact symmetry up to roundoff

  Mat2d X = z.real();
  Mat2d Y = z.imag();

  // Y = L diag(d1,d2) L^T with L = (1 x4; 0 1)
  if (Y(1, 1) <= 0.0)
    throw std::invalid_argument("iwasawa: Siegel point left the upper half-space");
  double x4 = Y(0, 1) / Y(1, 1);
  double d2 = Y(1, 1);
  double d1 = Y(0, 0) - Y(0, 1) * Y(0, 1) / Y(1, 1);
  if (d1 <= 0.0)
    throw std::invalid_argument("iwasawa: Siegel point left the upper half-space");

  IwasawaFactors f;
  f.x1 = X(0, 0);
  f.x2 = X(0, 1);
  f.x3 = X(1, 1);
  f.x4 = x4;
  f.t1 = std::sqrt(d1);
  f.t2 = std::sqrt(d2);
  f.u = unipotent<double>(f.x1, f.x2, f.x3, f.x4);
  f.a = split_torus<double>(f.t1, f.t2);
  // (ua)^{-1} = a^{-1} n2(-x4) n1(-x1,-x2,-x3), all in closed form
  Mat4d n1inv = Mat4d::Identity();
  n1inv(0, 2) = -f.x1;
  n1inv(0, 3) = -f.x2;
  n1inv(1, 2) = -f.x2;
  n1inv(1, 3) = -f.x3;
  Mat4d n2inv = Mat4d::Identity();
  n2inv(0, 1) = -f.x4;
  n2inv(3, 2) = f.x4;
  Mat4d ainv = split_torus<double>(1.0 / f.t1, 1.0 / f.t2);
  f.k = ainv * n2inv * n1inv * g;
  return f;
}

double iwasawa_residual(const Mat4d& g, const IwasawaFactors& f) {
  return (f.reconstruct() - g).cwiseAbs().maxCoeff();
}

PolarFactors polar(const Mat4d& g, double tol) {
  require_symplectic(g, tol, "polar");
  Mat4d s = g.transpose() * g;
  s = 0.5 * (s + s.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Mat4d> es(s);
  if (es.info() != Eigen::Success) throw std::runtime_error("polar: eigen-iteration failed");
  Eigen::Vector4d sq = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  PolarFactors f;
  f.p = es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().transpose();
  Eigen::Vector4d isq = sq.cwiseInverse();
  Mat4d pinv = es.eigenvectors() * isq.asDiagonal() * es.eigenvectors().transpose();
  f.k1 = g * pinv;
  return f;
}

KAKFactors kak(const Mat4d& g, double tol) {
  PolarFactors pf = polar(g, tol);
  // Diagonalize the SPD symplectic factor by an element of K. Eigenvalues
  // come in pairs (t, 1/t) and J swaps the paired eigenspaces, so columns
  // (v1, v2, -J v1, -J v2) with p v_i = t_i v_i, t_i >= 1, form a matrix in
  // K once the t = 1 eigenspace is filled in symplectic pairs.
  Eigen::SelfAdjointEigenSolver<Mat4d> es(pf.p);
  if (es.info() != Eigen::Success) throw std::runtime_error("kak: eigen-iteration failed");

  const Mat4d& J = J4d();
  Eigen::Vector4d ev = es.eigenvalues();  // ascending
  std::array<Eigen::Vector4d, 2> v;
  double t1, t2;
  const double unit_gap = 1e-9;
  if (ev(3) - 1.0 > unit_gap) {
    v[0] = es.eigenvectors().col(3);
    t1 = ev(3);
    if (ev(2) - 1.0 > unit_gap) {
      v[1] = es.eigenvectors().col(2);
      t2 = ev(2);
    } else {
      // one pair at 1: take any unit vector of that eigenspace
      v[1] = es.eigenvectors().col(2);
      t2 = 1.0;
    }
  } else {
    // p = I up to tolerance
    v[0] = Eigen::Vector4d::Unit(0);
    v[1] = Eigen::Vector4d::Unit(1);
    t1 = t2 = 1.0;
  }
  // orthonormalize v1, v2 defensively (repeated eigenvalues)
  v[1] -= v[0] * v[0].dot(v[1]);
  // complete inside the t=1 eigenspace if the projection collapsed
  if (v[1].norm() < 1e-8) {
    for (int c = 0; c < 4 && v[1].norm() < 1e-8; ++c) {
      Eigen::Vector4d cand = Eigen::Vector4d::Unit(c);
      cand -= v[0] * v[0].dot(cand);
      Eigen::Vector4d jv = -J * v[0];
      cand -= jv * jv.dot(cand);
      v[1] = cand;
    }
  }
  v[1].normalize();

  Mat4d q;
  q.col(0) = v[0];
  q.col(1) = v[1];
  q.col(2) = -J * v[0];
  q.col(3) = -J * v[1];

  KAKFactors f;
  f.a = split_torus<double>(t1, t2);
  f.k2 = q.transpose();
  f.k1 = pf.k1 * q;
  return f;
}

}  // namespace sp4
