#ifndef SP4_TESTS_ORACLES_HPP
#define SP4_TESTS_ORACLES_HPP

#include <cmath>

#include "sp4/structure.hpp"
#include "sp4/test_function.hpp"
#include "sp4/types.hpp"

// Independent reference computations for the orbital-integral tests. These
// deliberately avoid the library's integration path: the hyperbolic oracle
// is a fixed-lattice midpoint sum over the raw unipotent chart with the
// conjugate formed by actual matrix products, and the elliptic oracle is a
// closed form obtained by eliminating the substitution layers by hand.

namespace sp4::tests {

/// Midpoint-rule lattice sum for the hyperbolic orbital integral in the
/// unscaled x-chart. The lattice sweeps nested support slices (each entry
/// of the conjugate is bounded by the Frobenius radius, which brackets one
/// coordinate at a time); the conjugate itself is formed by actual matrix
/// products, independent of the library's closed-form chart.
inline double hyperbolic_lattice_oracle(double a1, double a2, const TestFunction& f, int n) {
  const double R = f.radius;
  const double c1 = a1 - 1.0 / a1, cs = a2 - 1.0 / a1, c3 = a2 - 1.0 / a2, c4 = a1 - a2;
  const double r = a1 - 1.0 / a2;
  const double X4 = R / std::abs(c4);
  const double X3 = R / std::abs(c3);
  const double W2 = R / std::abs(cs);  // slice half-widths
  const double W1 = R / std::abs(c1);

  Mat4d gamma = split_torus<double>(a1, a2);
  const double h1 = 2.0 * W1 / n, h2 = 2.0 * W2 / n, h3 = 2.0 * X3 / n, h4 = 2.0 * X4 / n;
  double sum = 0.0;
  for (int i4 = 0; i4 < n; ++i4) {
    double x4 = -X4 + (i4 + 0.5) * h4;
    for (int i3 = 0; i3 < n; ++i3) {
      double x3 = -X3 + (i3 + 0.5) * h3;
      double m2 = c3 * x3 * x4 / cs;  // |cs x2 - c3 x3 x4| <= R
      for (int i2 = 0; i2 < n; ++i2) {
        double x2 = m2 - W2 + (i2 + 0.5) * h2;
        double m1 = (x4 * (cs + r) * x2 - x4 * x4 * c3 * x3) / c1;
        double acc1 = 0.0;
        for (int i1 = 0; i1 < n; ++i1) {
          double x1 = m1 - W1 + (i1 + 0.5) * h1;
          Mat4d u = unipotent<double>(x1, x2, x3, x4);
          // n(x)^{-1} = n2(-x4) n1(-x1,-x2,-x3)
          Mat4d uinv = unipotent<double>(0, 0, 0, -x4);
          Mat4d n1inv = Mat4d::Identity();
          n1inv(0, 2) = -x1;
          n1inv(0, 3) = -x2;
          n1inv(1, 2) = -x2;
          n1inv(1, 3) = -x3;
          uinv = uinv * n1inv;
          acc1 += f(Mat4d(uinv * gamma * u));
        }
        sum += acc1;
      }
    }
  }
  return sum * h1 * h2 * h3 * h4;
}

/// Closed form of the elliptic reduction for the degree-4 profile:
/// F(l) = g(2|l|) / (|l| R^8) with
/// g(c) = int_c^b (b^2 - p^2)^4 dp, b^2 = (R^2 - 4) + c^2.
inline double elliptic_closed_form(double lambda, const TestFunction& f) {
  if (f.degree != 4) throw std::invalid_argument("closed form frozen for degree 4");
  const double R2 = f.radius * f.radius;
  if (R2 <= 4.0) return 0.0;
  const double a2 = R2 - 4.0;
  const double c = 2.0 * std::abs(lambda);
  const double b2 = a2 + c * c;
  auto anti = [&](double p) {
    double p2 = p * p;
    return p * (b2 * b2 * b2 * b2 - (4.0 / 3.0) * b2 * b2 * b2 * p2 +
                (6.0 / 5.0) * b2 * b2 * p2 * p2 - (4.0 / 7.0) * b2 * p2 * p2 * p2 +
                p2 * p2 * p2 * p2 / 9.0);
  };
  double g = anti(std::sqrt(b2)) - anti(c);
  return g / (std::abs(lambda) * std::pow(f.radius, 8));
}

/// Coefficient of the 1/|lambda| singularity: lim lambda F(lambda) =
/// (128/315) a^9 / R^8 for the degree-4 profile, a^2 = R^2 - 4.
inline double elliptic_a0_closed_form(const TestFunction& f) {
  if (f.degree != 4) throw std::invalid_argument("closed form frozen for degree 4");
  const double a2 = f.radius * f.radius - 4.0;
  if (a2 <= 0.0) return 0.0;
  return (128.0 / 315.0) * std::pow(a2, 4.5) / std::pow(f.radius, 8);
}

}  // namespace sp4::tests

#endif
