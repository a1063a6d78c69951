#include "sp4/orbital.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace sp4 {

namespace {

constexpr double kSingularTol = 1e-14;

void require_regular_hyperbolic(double a1, double a2) {
  for (double a : {a1, a2})
    if (a == 0.0 || std::abs(std::abs(a) - 1.0) < kSingularTol)
      throw std::invalid_argument("orbital_hyperbolic: parameter on the singular set");
  if (std::abs(a1 - a2) < kSingularTol || std::abs(a1 * a2 - 1.0) < kSingularTol)
    throw std::invalid_argument("orbital_hyperbolic: parameters not regular");
}

}  // namespace

TransferFactor transfer_factor_hyperbolic(double a1, double a2) {
  TransferFactor out;
  if (a1 == 0.0 || a2 == 0.0 || std::abs(std::abs(a1) - 1.0) < kSingularTol ||
      std::abs(std::abs(a2) - 1.0) < kSingularTol) {
    out.singular = true;
    out.value = 0.0;
    return out;
  }
  out.value = std::abs(a1 - 1.0 / a1) * std::abs(a2 - 1.0 / a2);
  return out;
}

TransferFactor transfer_factor_elliptic(double th1, double th2) {
  TransferFactor out;
  double s1 = std::sin(th1), s2 = std::sin(th2);
  if (std::abs(s1) < kSingularTol || std::abs(s2) < kSingularTol) {
    out.singular = true;
    out.value = 0.0;
    return out;
  }
  out.value = std::complex<double>(0.0, 4.0 * s1 * s2);
  return out;
}

// The conjugate n(x)^{-1} gamma n(x) in the rescaled coordinates
//   y1 = (a1 - 1/a1) x1, y2 = (a2 - 1/a1) x2, y3 = (a2 - 1/a2) x3,
//   y4 = (a1 - a2) x4.
// Entries (all others are the diagonal a1, a2, 1/a1, 1/a2):
//   (0,1) = y4                      (3,2) = -y4 / (a1 a2)
//   (1,3) = y3                      (1,2) = y2 - k
//   (0,3) = r12 y2 - k              (0,2) = y1 - cy1
// with c4 = a1 - a2, r12 = (a1 - 1/a2)/(a2 - 1/a1), k = y3 y4 / c4 and
// cy1 = (y4/c4)(1 + r12) y2 - (y4/c4)^2 y3.
//
// Every entry is bounded by |M|_F, and each nesting variable enters
// |M|_F^2 quadratically, so the exact support slice of each variable given
// the outer ones is a closed-form interval. Integrating over exactly that
// interval keeps the integrand kink-free in the interior of every panel
// (for the polynomial bump the innermost slice integrand is a polynomial).
struct HyperbolicOrbitChart {
  double a1, a2, c1, cs, c3, c4, r12, e43, diag2;

  HyperbolicOrbitChart(double a1_, double a2_) : a1(a1_), a2(a2_) {
    c1 = a1 - 1.0 / a1;
    cs = a2 - 1.0 / a1;
    c3 = a2 - 1.0 / a2;
    c4 = a1 - a2;
    r12 = (a1 - 1.0 / a2) / cs;
    e43 = 1.0 / (a1 * a2);
    diag2 = a1 * a1 + a2 * a2 + 1.0 / (a1 * a1) + 1.0 / (a2 * a2);
  }

  Mat4d point(double y1, double y2, double y3, double y4) const {
    Mat4d m = Mat4d::Zero();
    m(0, 0) = a1;
    m(1, 1) = a2;
    m(2, 2) = 1.0 / a1;
    m(3, 3) = 1.0 / a2;
    m(0, 1) = y4;
    m(3, 2) = -y4 * e43;
    double w = y4 / c4;
    double k = y3 * w;
    m(1, 3) = y3;
    m(1, 2) = y2 - k;
    m(0, 3) = r12 * y2 - k;
    m(0, 2) = y1 - center_y1(y2, y3, y4);
    return m;
  }

  /// dx = dy / jacobian
  double jacobian() const { return std::abs(c1 * cs * c3 * c4); }

  double center_y1(double y2, double y3, double y4) const {
    double w = y4 / c4;
    return w * (1.0 + r12) * y2 - w * w * y3;
  }
};

namespace {

/// Iterated 1-D quadrature over the exact nested support slices; y4
/// outermost, then y3, y2, y1.
struct NestedIntegrator {
  const GroupFunction& f;
  const HyperbolicOrbitChart& ch;
  double R2;  // squared support radius
  const QuadratureConfig& cfg;
  bool converged = true;
  long evals = 0;
  double err_outer = 0.0;

  NestedIntegrator(const GroupFunction& f_, const HyperbolicOrbitChart& chart_, double radius,
                   const QuadratureConfig& cfg_)
      : f(f_), ch(chart_), R2(radius * radius), cfg(cfg_) {}

  double run() {
    double rem = R2 - ch.diag2;
    if (rem <= 0.0) return 0.0;
    double w4 = std::sqrt(rem / (1.0 + ch.e43 * ch.e43));
    QuadratureResult r = integrate_1d([this](double y4) { return level3(y4); }, -w4, w4, cfg);
    if (!r.converged) converged = false;
    err_outer = r.err_est;
    return r.value;
  }

  double level3(double y4) {
    double base4 = ch.diag2 + y4 * y4 * (1.0 + ch.e43 * ch.e43);
    double rem = R2 - base4;
    if (rem <= 0.0) return 0.0;
    // min over (y1, y2) of the remaining square terms at given y3 is
    // y3^2 (1 + (y4 (r12-1))^2 / (c4^2 (1 + r12^2)))
    double A2 = 1.0 + ch.r12 * ch.r12;
    double coef = 1.0 + y4 * y4 * (ch.r12 - 1.0) * (ch.r12 - 1.0) / (ch.c4 * ch.c4 * A2);
    double w3 = std::sqrt(rem / coef);
    QuadratureResult r =
        integrate_1d([this, y4](double y3) { return level2(y3, y4); }, -w3, w3, cfg);
    if (!r.converged) converged = false;
    return r.value;
  }

  double level2(double y3, double y4) {
    double base3 = ch.diag2 + y4 * y4 * (1.0 + ch.e43 * ch.e43) + y3 * y3;
    double rem = R2 - base3;
    if (rem <= 0.0) return 0.0;
    // q2(y2) = (y2 - k)^2 + (r12 y2 - k)^2 = A2 (y2 - yc)^2 + k^2 (r12-1)^2 / A2
    double A2 = 1.0 + ch.r12 * ch.r12;
    double k = y3 * y4 / ch.c4;
    double yc = k * (1.0 + ch.r12) / A2;
    double qmin = k * k * (ch.r12 - 1.0) * (ch.r12 - 1.0) / A2;
    double disc = (rem - qmin) / A2;
    if (disc <= 0.0) return 0.0;
    double w2 = std::sqrt(disc);
    QuadratureResult r = integrate_1d(
        [this, y3, y4](double y2) { return level1(y2, y3, y4); }, yc - w2, yc + w2, cfg);
    if (!r.converged) converged = false;
    return r.value;
  }

  double level1(double y2, double y3, double y4) {
    double k = y3 * y4 / ch.c4;
    double u21 = y2 - k, u12 = ch.r12 * y2 - k;
    double qrest = ch.diag2 + y4 * y4 * (1.0 + ch.e43 * ch.e43) + y3 * y3 + u21 * u21 +
                   u12 * u12;
    double rem = R2 - qrest;
    if (rem <= 0.0) return 0.0;
    double w1 = std::sqrt(rem);
    double c = ch.center_y1(y2, y3, y4);
    QuadratureResult r = integrate_1d(
        [this, y2, y3, y4](double y1) {
          ++evals;
          return f(ch.point(y1, y2, y3, y4));
        },
        c - w1, c + w1, cfg);
    return r.value;
  }
};

}  // namespace

QuadratureResult orbital_hyperbolic(double a1, double a2, const GroupFunction& f,
                                    double support_radius, const QuadratureConfig& cfg) {
  require_regular_hyperbolic(a1, a2);
  HyperbolicOrbitChart chart(a1, a2);

  QuadratureResult out;
  NestedIntegrator ni(f, chart, support_radius, cfg);
  double value = ni.run();

  out.value = value / chart.jacobian();
  out.err_est = ni.err_outer / chart.jacobian();
  out.converged = ni.converged;
  out.evals = ni.evals;
  return out;
}

Mat4d elliptic_orbit_point(double lambda, double t) {
  Mat4d m = Mat4d::Identity();
  double c = std::sqrt(std::max(0.0, 1.0 - lambda * lambda));
  m(1, 1) = c;
  m(2, 2) = c;
  m(1, 2) = t * lambda;
  m(2, 1) = -lambda / t;
  return m;
}

QuadratureResult orbital_elliptic_1d(double lambda, const GroupFunction& f,
                                     double support_radius, const QuadratureConfig& cfg) {
  if (!(std::abs(lambda) > 0.0) || std::abs(lambda) > 1.0)
    throw std::invalid_argument("orbital_elliptic_1d: lambda must lie in [-1,1] away from 0");

  QuadratureResult out;
  const double R2 = support_radius * support_radius;
  if (R2 <= 4.0) return out;  // |m(lambda,t)|_F^2 >= 4 everywhere

  // support: t^2 + 1/t^2 <= c, c = (R^2 - 4 + 2 l^2) / l^2 >= 2
  const double l2 = lambda * lambda;
  const double c = (R2 - 4.0 + 2.0 * l2) / l2;
  const double tmax = std::sqrt(0.5 * (c + std::sqrt(c * c - 4.0)));
  const double tmin = 1.0 / tmax;

  auto integrand = [&](double t) { return f(elliptic_orbit_point(lambda, t)); };
  QuadratureResult lo = integrate_1d(integrand, tmin, 1.0, cfg);
  QuadratureResult hi = integrate_1d(integrand, 1.0, tmax, cfg);
  out.value = hi.value - lo.value;  // sign(t-1)
  out.err_est = hi.err_est + lo.err_est;
  out.converged = hi.converged && lo.converged;
  out.evals = hi.evals + lo.evals;
  return out;
}

namespace {

struct LineFit {
  double slope, intercept, r2;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
  }
  double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
    syy += (y[k] - my) * (y[k] - my);
  }
  LineFit out{0.0, my, 0.0};
  if (sxx > 0.0) {
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
  }
  if (syy > 1e-30) {
    double ssres = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      double r = y[k] - (out.slope * x[k] + out.intercept);
      ssres += r * r;
    }
    out.r2 = 1.0 - ssres / syy;
  }
  return out;
}

}  // namespace

SingularExpansion singular_expansion(const GroupFunction& f, double support_radius,
                                     const std::vector<double>& lambda_grid,
                                     const QuadratureConfig& cfg) {
  if (lambda_grid.size() < 8)
    throw std::invalid_argument("singular_expansion: need at least 8 grid points");
  for (std::size_t k = 0; k < lambda_grid.size(); ++k) {
    if (!(lambda_grid[k] > 0.0) || lambda_grid[k] > 0.2)
      throw std::invalid_argument("singular_expansion: grid must lie in (0, 0.2]");
    if (k > 0 && lambda_grid[k] >= lambda_grid[k - 1])
      throw std::invalid_argument("singular_expansion: grid must be decreasing");
  }

  SingularExpansion out;
  out.lambda = lambda_grid;
  std::vector<double> values = parallel_map(static_cast<int>(lambda_grid.size()), [&](int i) {
    QuadratureResult r =
        orbital_elliptic_1d(lambda_grid[static_cast<std::size_t>(i)], f, support_radius, cfg);
    if (!r.converged)
      throw std::runtime_error("singular_expansion: quadrature failed at a grid point");
    return r.value;
  });
  out.F = values;

  // A0 = lim lambda F(lambda): linear extrapolation of lambda*F from the two
  // smallest grid points
  std::size_t n = lambda_grid.size();
  double la = lambda_grid[n - 1], lb = lambda_grid[n - 2];
  double ga = la * values[n - 1], gb = lb * values[n - 2];
  out.a0 = (ga * lb - la * gb) / (lb - la);

  out.B.resize(n);
  std::vector<double> logs(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.B[k] = values[k] - out.a0 / std::abs(lambda_grid[k]);
    logs[k] = std::log(1.0 / lambda_grid[k]);
  }
  LineFit fit = fit_line(logs, out.B);
  out.slope = fit.slope;
  out.intercept = fit.intercept;
  out.r2 = fit.r2;
  return out;
}

EvenOddParts even_odd_parts(const GroupFunction& f, double support_radius,
                            const std::vector<double>& lambda_grid, const QuadratureConfig& cfg,
                            int fit_order) {
  for (double l : lambda_grid)
    if (!(l > 0.0) || l > 0.2)
      throw std::invalid_argument("even_odd_parts: grid must lie in (0, 0.2]");
  const int n = static_cast<int>(lambda_grid.size());
  const int N = std::min(fit_order, 3);
  if (n < 2 * (N + 1)) throw std::invalid_argument("even_odd_parts: grid too small for the fit");

  EvenOddParts out;
  out.lambda = lambda_grid;
  std::vector<double> fplus = parallel_map(n, [&](int i) {
    return orbital_elliptic_1d(lambda_grid[static_cast<std::size_t>(i)], f, support_radius, cfg)
        .value;
  });
  std::vector<double> fminus = parallel_map(n, [&](int i) {
    return orbital_elliptic_1d(-lambda_grid[static_cast<std::size_t>(i)], f, support_radius, cfg)
        .value;
  });
  out.G.resize(static_cast<std::size_t>(n));
  out.H.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double l = lambda_grid[static_cast<std::size_t>(k)];
    out.G[static_cast<std::size_t>(k)] =
        std::abs(l) * (fplus[static_cast<std::size_t>(k)] + fminus[static_cast<std::size_t>(k)]);
    out.H[static_cast<std::size_t>(k)] =
        l * (fplus[static_cast<std::size_t>(k)] - fminus[static_cast<std::size_t>(k)]);
  }

  // G design matrix: columns l^{2n}/|l| and l^{2n}
  Eigen::MatrixXd dg(n, 2 * (N + 1));
  Eigen::MatrixXd dh(n, N + 1);
  for (int k = 0; k < n; ++k) {
    double l = lambda_grid[static_cast<std::size_t>(k)];
    double p = 1.0;
    for (int j = 0; j <= N; ++j) {
      dg(k, 2 * j) = p / std::abs(l);
      dg(k, 2 * j + 1) = p;
      dh(k, j) = p;
      p *= l * l;
    }
  }
  Eigen::Map<Eigen::VectorXd> gv(out.G.data(), n), hv(out.H.data(), n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svdg(dg, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::JacobiSVD<Eigen::MatrixXd> svdh(dh, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd cg = svdg.solve(gv);
  Eigen::VectorXd ch = svdh.solve(hv);
  out.g_condition = svdg.singularValues()(0) /
                    std::max(svdg.singularValues()(svdg.singularValues().size() - 1), 1e-300);
  out.h_condition = svdh.singularValues()(0) /
                    std::max(svdh.singularValues()(svdh.singularValues().size() - 1), 1e-300);
  for (int j = 0; j <= N; ++j) {
    out.a_coeffs.push_back(cg(2 * j));
    out.b_coeffs.push_back(cg(2 * j + 1));
    out.h_coeffs.push_back(ch(j));
  }
  double gscale = 1e-300, hscale = 1e-300;
  for (int k = 0; k < n; ++k) {
    gscale = std::max(gscale, std::abs(gv(k)));
    hscale = std::max(hscale, std::abs(hv(k)));
  }
  out.g_residual = (dg * cg - gv).cwiseAbs().maxCoeff() / gscale;
  out.h_residual = hscale > 1e-200 ? (dh * ch - hv).cwiseAbs().maxCoeff() / hscale
                                   : (dh * ch - hv).cwiseAbs().maxCoeff();
  return out;
}

TransferTable smooth_transfer_hyperbolic(const GroupFunction& f, double support_radius,
                                         const std::vector<std::pair<double, double>>& grid,
                                         const QuadratureConfig& cfg) {
  TransferTable out;
  out.rows.resize(grid.size());
  std::vector<double> transfers = parallel_map(static_cast<int>(grid.size()), [&](int i) {
    auto [a1, a2] = grid[static_cast<std::size_t>(i)];
    QuadratureResult r = orbital_hyperbolic(a1, a2, f, support_radius, cfg);
    TransferFactor d = transfer_factor_hyperbolic(a1, a2);
    TransferTable::Row& row = out.rows[static_cast<std::size_t>(i)];
    row.a1 = a1;
    row.a2 = a2;
    row.orbital = r.value;
    row.transfer = d.value.real() * r.value;
    row.err_est = r.err_est;
    row.converged = r.converged;
    return row.transfer;
  });
  for (std::size_t k = 0; k + 1 < transfers.size(); ++k)
    out.adjacent_jumps.push_back(std::abs(transfers[k + 1] - transfers[k]));
  return out;
}

}  // namespace sp4
