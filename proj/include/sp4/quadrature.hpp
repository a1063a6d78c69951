#ifndef SP4_QUADRATURE_HPP
#define SP4_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace sp4 {

struct QuadratureConfig {
  enum class Rule { gauss_legendre_adaptive, tanh_sinh };
  Rule rule = Rule::gauss_legendre_adaptive;
  double abs_tol = 1e-8;   // per 1-D panel
  double rel_tol = 1e-10;
  int max_depth = 18;
};

struct QuadratureResult {
  double value = 0.0;
  double err_est = 0.0;
  bool converged = true;
  long evals = 0;
};

/// Adaptive 1-D integration of f over [a, b] per the configured rule.
/// Non-convergence at max_depth is reported through the flag, with the best
/// estimate and its error bound retained.
QuadratureResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                              const QuadratureConfig& cfg);

/// Finite-interval tanh-sinh (double exponential) rule with level doubling;
/// tolerates integrable endpoint singularities.
QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                           double tol, int max_levels = 12);

/// Summation with a fixed pairwise order, independent of accumulation
/// grain, so concurrent panel evaluation reproduces serial results.
double pairwise_sum(std::span<const double> xs);

/// Evaluate fn(i) for i in [0, n) with results written into slot i;
/// deterministic for any thread count. Threads come from the SP4_THREADS
/// environment variable (default 1).
std::vector<double> parallel_map(int n, const std::function<double(int)>& fn);

int configured_thread_count();

}  // namespace sp4

#endif
