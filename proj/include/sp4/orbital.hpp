#ifndef SP4_ORBITAL_HPP
#define SP4_ORBITAL_HPP

#include <complex>
#include <functional>
#include <vector>

#include "sp4/quadrature.hpp"
#include "sp4/test_function.hpp"
#include "sp4/types.hpp"

// Orbital integrals of K-bi-invariant test functions against regular
// hyperbolic and elliptic elements, their transfer factors, and the
// small-parameter expansion diagnostics of the elliptic side.

namespace sp4 {

/// Arbitrary integrand on the group; orbital integrals evaluate it on
/// explicitly assembled conjugates, so conjugation-twisted functions can be
/// passed as closures.
using GroupFunction = std::function<double(const Mat4d&)>;

struct TransferFactor {
  std::complex<double> value;
  bool singular = false;  // parameters on the singular set; value is 0
};

/// Delta(gamma) = |a1 - 1/a1| |a2 - 1/a2| for diag(a1,a2,1/a1,1/a2).
TransferFactor transfer_factor_hyperbolic(double a1, double a2);
/// Delta(k(th)) = 4 i sin(th1) sin(th2); purely imaginary.
TransferFactor transfer_factor_elliptic(double th1, double th2);

/// O_gamma(f) = integral of f(n(x)^{-1} gamma n(x)) over the unipotent
/// chart, gamma = diag(a1, a2, 1/a1, 1/a2) regular. support_radius bounds
/// the integrand's support in Frobenius norm and determines the (provably
/// sufficient) truncation box.
QuadratureResult orbital_hyperbolic(double a1, double a2, const GroupFunction& f,
                                    double support_radius, const QuadratureConfig& cfg);

inline QuadratureResult orbital_hyperbolic(double a1, double a2, const TestFunction& f,
                                           const QuadratureConfig& cfg) {
  return orbital_hyperbolic(a1, a2, GroupFunction(f), f.radius, cfg);
}

/// The one-parameter elliptic reduction F(lambda) =
/// int_0^inf sign(t-1) f(m(lambda,t)) dt, lambda = sin(theta) in [-1,1]\{0},
/// with m(lambda,t) the embedded block rotation (sqrt(1-lambda^2) on the
/// middle diagonal, t lambda and -lambda/t off-diagonal). The integrand is
/// supported on an explicit interval [tmin, tmax]; the integral is split at
/// the sign change t = 1.
QuadratureResult orbital_elliptic_1d(double lambda, const GroupFunction& f,
                                     double support_radius, const QuadratureConfig& cfg);

inline QuadratureResult orbital_elliptic_1d(double lambda, const TestFunction& f,
                                            const QuadratureConfig& cfg) {
  return orbital_elliptic_1d(lambda, GroupFunction(f), f.radius, cfg);
}

/// The matrix m(lambda, t) of the elliptic reduction.
Mat4d elliptic_orbit_point(double lambda, double t);

/// Small-lambda structure of F: F(lambda) = A0/|lambda| + B(lambda) with A0
/// the coefficient of the singular part (A0 = lim lambda F(lambda),
/// estimated by linear extrapolation of lambda F to 0) and B the continuous
/// remainder. The log fit regresses B on ln(1/lambda).
struct SingularExpansion {
  double a0 = 0.0;
  std::vector<double> lambda;
  std::vector<double> F;
  std::vector<double> B;
  double slope = 0.0, intercept = 0.0, r2 = 0.0;
};

SingularExpansion singular_expansion(const GroupFunction& f, double support_radius,
                                     const std::vector<double>& lambda_grid,
                                     const QuadratureConfig& cfg);

inline SingularExpansion singular_expansion(const TestFunction& f,
                                            const std::vector<double>& lambda_grid,
                                            const QuadratureConfig& cfg) {
  return singular_expansion(GroupFunction(f), f.radius, lambda_grid, cfg);
}

/// Even/odd combinations G = |l|(F(l) + F(-l)), H = l(F(l) - F(-l)) and
/// least-squares fits G ~ sum (a_n/|l| + b_n) l^{2n}, H ~ sum h_n l^{2n}.
struct EvenOddParts {
  std::vector<double> lambda;
  std::vector<double> G, H;
  std::vector<double> a_coeffs, b_coeffs, h_coeffs;
  double g_residual = 0.0, h_residual = 0.0;
  double g_condition = 0.0, h_condition = 0.0;
};

EvenOddParts even_odd_parts(const GroupFunction& f, double support_radius,
                            const std::vector<double>& lambda_grid, const QuadratureConfig& cfg,
                            int fit_order = 3);

inline EvenOddParts even_odd_parts(const TestFunction& f, const std::vector<double>& lambda_grid,
                                   const QuadratureConfig& cfg, int fit_order = 3) {
  return even_odd_parts(GroupFunction(f), f.radius, lambda_grid, cfg, fit_order);
}

/// Table of f^H(gamma) = Delta(gamma) O_gamma(f) over a parameter grid,
/// with the max adjacent jump as a continuity diagnostic.
struct TransferTable {
  struct Row {
    double a1, a2;
    double orbital;    // O_gamma(f)
    double transfer;   // Delta * O_gamma(f)
    double err_est;
    bool converged;
  };
  std::vector<Row> rows;
  std::vector<double> adjacent_jumps;  // |transfer_{k+1} - transfer_k|
};

TransferTable smooth_transfer_hyperbolic(const GroupFunction& f, double support_radius,
                                         const std::vector<std::pair<double, double>>& grid,
                                         const QuadratureConfig& cfg);

}  // namespace sp4

#endif
