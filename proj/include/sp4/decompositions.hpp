#ifndef SP4_DECOMPOSITIONS_HPP
#define SP4_DECOMPOSITIONS_HPP

#include "sp4/symplectic.hpp"
#include "sp4/types.hpp"

// Numerical factorizations of Sp(4,R) elements.
//
// The Iwasawa factors are computed through the action on the Siegel upper
// half-space: g . (iI) = X + iY as 2x2 complex blocks, Y = L D L^T with L
// unit upper triangular, which reads off the unipotent chart n(x1..x4) and
// the split torus diag(t1,t2,1/t1,1/t2); the K-factor is (ua)^{-1} g and
// lands in U(2) automatically. A QR factorization of the columns would not:
// its orthogonal factor need not be symplectic.

namespace sp4 {

struct IwasawaFactors {
  Mat4d u;  // unipotent, n(x1,x2,x3,x4)
  Mat4d a;  // diag(t1,t2,1/t1,1/t2)
  Mat4d k;  // in K = Sp(4,R) n O(4)
  double x1, x2, x3, x4;
  double t1, t2;

  Mat4d reconstruct() const { return u * a * k; }
};

struct PolarFactors {
  Mat4d k1;  // in K
  Mat4d p;   // symmetric positive definite symplectic
};

struct KAKFactors {
  Mat4d k1;
  Mat4d a;  // diag(t1,t2,1/t1,1/t2), t1 >= t2 >= 1
  Mat4d k2;
};

IwasawaFactors iwasawa(const Mat4d& g, double tol = kDefaultTol);
PolarFactors polar(const Mat4d& g, double tol = kDefaultTol);
KAKFactors kak(const Mat4d& g, double tol = kDefaultTol);

/// max-norm reconstruction error of u*a*k against g.
double iwasawa_residual(const Mat4d& g, const IwasawaFactors& f);

/// Distance from K: max of the orthogonality and symplecticity defects.
double k_defect(const Mat4d& k);

}  // namespace sp4

#endif
