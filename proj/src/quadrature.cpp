#include "sp4/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace sp4 {

namespace {

constexpr int kGaussOrder = 15;

struct GaussRule {
  std::array<double, kGaussOrder> x;  // nodes on [-1, 1]
  std::array<double, kGaussOrder> w;
};

/// Nodes by Newton iteration on the Legendre recurrence; deterministic and
/// accurate to full double precision.
GaussRule make_gauss_rule() {
  GaussRule rule;
  const int n = kGaussOrder;
  for (int k = 0; k < n; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= n; ++j) {
      double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    rule.x[k] = x;
    rule.w[k] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b, long& evals) {
  const GaussRule& rule = gauss_rule();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  std::array<double, kGaussOrder> vals;
  for (int k = 0; k < kGaussOrder; ++k) vals[k] = rule.w[k] * f(mid + half * rule.x[k]);
  evals += kGaussOrder;
  return half * pairwise_sum(vals);
}

void adaptive_gl_rec(const std::function<double(double)>& f, double a, double b, double whole,
                     double tol, int depth, const QuadratureConfig& cfg, QuadratureResult& out) {
  const double mid = 0.5 * (a + b);
  double left = gauss_panel(f, a, mid, out.evals);
  double right = gauss_panel(f, mid, b, out.evals);
  double diff = std::abs(left + right - whole);
  if (diff <= std::max(tol, cfg.rel_tol * std::abs(left + right)) || depth >= cfg.max_depth) {
    out.value += left + right;
    out.err_est += diff;
    return;
  }
  adaptive_gl_rec(f, a, mid, left, 0.5 * tol, depth + 1, cfg, out);
  adaptive_gl_rec(f, mid, b, right, 0.5 * tol, depth + 1, cfg, out);
}

}  // namespace

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                           double tol, int max_levels) {
  QuadratureResult out;
  const double half = 0.5 * (b - a);
  const double umax = 6.0;

  // Nodes are computed as offsets from the nearer endpoint: with
  // 1 -+ tanh(z) = 2 / (e^{+-2z} + 1) the abscissa stays distinguishable
  // from the endpoint far beyond where mid + half*tanh(z) would round onto
  // it, which matters for integrable endpoint singularities.
  auto add_node = [&](double u, double& sum) {
    double z = 0.5 * M_PI * std::sinh(u);
    double c = std::cosh(z);
    double w = half * 0.5 * M_PI * std::cosh(u) / (c * c);
    if (w <= 0.0 || !std::isfinite(w)) return;
    double offset = half * 2.0 / (std::exp(2.0 * std::abs(z)) + 1.0);
    if (offset <= 0.0) return;
    double x = u < 0.0 ? a + offset : b - offset;
    if (x <= a || x >= b) return;
    sum += w * f(x);
    ++out.evals;
  };

  double h = 1.0;
  double sum = 0.0;
  {
    double z = 0.0, c = std::cosh(z);
    sum = half * 0.5 * M_PI / (c * c) * f(a + half);
    ++out.evals;
  }
  for (double u = h; u <= umax; u += h) {
    add_node(u, sum);
    add_node(-u, sum);
  }
  double prev = sum * h;

  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    for (double u = h; u <= umax; u += 2.0 * h) {
      add_node(u, sum);
      add_node(-u, sum);
    }
    double cur = sum * h;
    double diff = std::abs(cur - prev);
    if (level >= 3 && diff <= std::max(tol, 1e-15 * std::abs(cur))) {
      out.value = cur;
      out.err_est = diff;
      return out;
    }
    prev = cur;
  }
  out.value = prev;
  out.err_est = tol;
  out.converged = false;
  return out;
}

QuadratureResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                              const QuadratureConfig& cfg) {
  if (a == b) return {};
  if (cfg.rule == QuadratureConfig::Rule::tanh_sinh) return tanh_sinh(f, a, b, cfg.abs_tol);
  QuadratureResult out;
  double whole = gauss_panel(f, a, b, out.evals);
  adaptive_gl_rec(f, a, b, whole, cfg.abs_tol, 0, cfg, out);
  out.converged = out.err_est <= 2.0 * std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
  return out;
}

int configured_thread_count() {
  const char* env = std::getenv("SP4_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

std::vector<double> parallel_map(int n, const std::function<double(int)>& fn) {
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  int threads = std::min(configured_thread_count(), n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += threads) out[static_cast<std::size_t>(i)] = fn(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace sp4
