#ifndef SP4_TEST_FUNCTION_HPP
#define SP4_TEST_FUNCTION_HPP

#include <stdexcept>

#include "sp4/types.hpp"

namespace sp4 {

/// K-bi-invariant bump on the group: f(g) = phi(|g|_F^2) with the polynomial
/// profile phi(s) = (1 - s/R^2)^m on [0, R^2], zero outside. K consists of
/// orthogonal matrices and the Frobenius norm is bi-orthogonally invariant,
/// so f(k1 g k2) = f(g) exactly; the support is {|g|_F <= R}.
struct TestFunction {
  double radius;  // support radius R (Frobenius norm)
  int degree;     // m >= 4, controls smoothness C^{m-1}

  TestFunction(double r, int m) : radius(r), degree(m) {
    if (!(r > 0.0)) throw std::invalid_argument("TestFunction: radius must be positive");
    if (m < 4) throw std::invalid_argument("TestFunction: degree must be at least 4");
  }

  double profile(double s) const {
    double r2 = radius * radius;
    if (s >= r2) return 0.0;
    double base = 1.0 - s / r2;
    double p = 1.0;
    for (int k = 0; k < degree; ++k) p *= base;
    return p;
  }

  double operator()(const Mat4d& g) const { return profile(g.squaredNorm()); }
};

}  // namespace sp4

#endif
