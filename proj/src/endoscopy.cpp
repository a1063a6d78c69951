#include "sp4/endoscopy.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "sp4/exact_solve.hpp"
#include "sp4/structure.hpp"
#include "sp4/symplectic.hpp"

namespace sp4 {

namespace {

constexpr double kEqualTol = 1e-8;  // parameter-equality (regularity) threshold

// Eigenvalues of a perturbed Jordan block scatter like sqrt(eps), so
// multiplicity clustering and the kernel threshold both sit well above that.
constexpr double kClusterTol = 1e-6;

int rank_at(const Eigen::Matrix4cd& m, double scale) {
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m);
  return static_cast<int>(
      (svd.singularValues().array() > kClusterTol * std::max(scale, 1.0)).count());
}

}  // namespace

std::string to_string(ConjugacyTag tag) {
  switch (tag) {
    case ConjugacyTag::elliptic: return "elliptic";
    case ConjugacyTag::hyperbolic: return "hyperbolic";
    case ConjugacyTag::parabolic: return "parabolic";
    case ConjugacyTag::mixed: return "mixed";
    case ConjugacyTag::singular: return "singular";
  }
  return "?";
}

std::string to_string(EndoscopicKind kind) {
  switch (kind) {
    case EndoscopicKind::torus: return "torus";
    case EndoscopicKind::sl2: return "sl2";
    case EndoscopicKind::full: return "full";
  }
  return "?";
}

ConjugacyType classify(const Mat4d& gamma, double tol) {
  if (!is_symplectic(gamma, std::max(tol, 1e-9)))
    throw std::invalid_argument("classify: input is not symplectic");

  Eigen::EigenSolver<Mat4d> es(gamma);
  Eigen::Vector4cd ev = es.eigenvalues();
  double scale = gamma.cwiseAbs().maxCoeff();

  // cluster equal eigenvalues
  std::vector<std::pair<std::complex<double>, int>> groups;
  for (int k = 0; k < 4; ++k) {
    bool merged = false;
    for (auto& g : groups) {
      if (std::abs(g.first - ev(k)) < kClusterTol * std::max(1.0, scale)) {
        ++g.second;
        merged = true;
        break;
      }
    }
    if (!merged) groups.emplace_back(ev(k), 1);
  }

  bool semisimple = true;
  for (const auto& g : groups) {
    if (g.second == 1) continue;
    Eigen::Matrix4cd shifted = gamma.cast<std::complex<double>>() -
                               g.first * Eigen::Matrix4cd::Identity();
    int geometric = 4 - rank_at(shifted, scale);
    if (geometric < g.second) semisimple = false;
  }

  bool any_unit = false, all_real = true, all_circle = true;
  for (const auto& g : groups) {
    double dist1 = std::abs(g.first - 1.0), distm1 = std::abs(g.first + 1.0);
    if (std::min(dist1, distm1) < kEqualTol) any_unit = true;
    if (std::abs(g.first.imag()) > kEqualTol) all_real = false;
    if (std::abs(std::abs(g.first) - 1.0) > kEqualTol) all_circle = false;
  }

  ConjugacyType out;
  if (!semisimple) {
    out.tag = ConjugacyTag::parabolic;
    return out;
  }
  if (any_unit) {
    out.tag = ConjugacyTag::singular;
    return out;
  }
  if (all_real) {
    out.tag = ConjugacyTag::hyperbolic;
    std::vector<double> big;
    for (int k = 0; k < 4; ++k)
      if (std::abs(ev(k)) > 1.0) big.push_back(ev(k).real());
    std::sort(big.begin(), big.end());
    out.params = big;
    // a1 = 1/a2 shows up as a repeated eigenvalue, so distinctness of the
    // two |lambda| > 1 representatives is the whole regularity condition
    out.regular = big.size() == 2 && std::abs(big[0] - big[1]) > kEqualTol;
    return out;
  }
  if (all_circle) {
    out.tag = ConjugacyTag::elliptic;
    std::vector<double> angles;
    for (int k = 0; k < 4; ++k)
      if (ev(k).imag() > kEqualTol) angles.push_back(std::abs(std::arg(ev(k))));
    std::sort(angles.begin(), angles.end());
    out.params = angles;
    out.regular = angles.size() == 2 && std::abs(angles[0] - angles[1]) > kEqualTol;
    return out;
  }
  out.tag = ConjugacyTag::mixed;
  return out;
}

namespace {

template <typename Scalar>
std::vector<Mat4<Scalar>> centralizer_impl(const Mat4<Scalar>& gamma) {
  const auto& cat = catalog();
  auto rational_basis = cat.real_basis();
  std::array<Mat4<Scalar>, 10> basis;
  for (int k = 0; k < 10; ++k) {
    if constexpr (std::is_same_v<Scalar, Rational>)
      basis[k] = rational_basis[k];
    else
      basis[k] = to_gaussian(rational_basis[k]);
  }
  MatX<Scalar> sys(16, 10);
  for (int k = 0; k < 10; ++k) {
    Mat4<Scalar> br = basis[k] * gamma - gamma * basis[k];
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) sys(4 * r + c, k) = br(r, c);
  }
  std::vector<Mat4<Scalar>> out;
  for (const auto& coeffs : exact_nullspace<Scalar>(sys)) {
    Mat4<Scalar> m = Mat4<Scalar>::Zero();
    for (int k = 0; k < 10; ++k) m += basis[k] * coeffs(k);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<Mat4q> centralizer_algebra(const Mat4q& gamma) {
  if (!is_symplectic<Rational>(gamma))
    throw std::invalid_argument("centralizer_algebra: input is not symplectic");
  return centralizer_impl<Rational>(gamma);
}

std::vector<Mat4g> centralizer_algebra(const Mat4g& gamma) {
  if (!is_symplectic<GaussianRational>(gamma))
    throw std::invalid_argument("centralizer_algebra: input is not symplectic");
  return centralizer_impl<GaussianRational>(gamma);
}

Mat4d EndoscopicGroup::embed_torus(double p1, double p2, bool plus) const {
  Mat4d m = source == ConjugacyTag::hyperbolic ? split_torus<double>(p1, p2)
                                               : torus_rotation(p1, p2);
  m = frame * m * frame_inv;
  return plus ? m : Mat4d(-m);
}

Mat4q EndoscopicGroup::embed_torus_exact(const Rational& c1, const Rational& s1,
                                         const Rational& c2, const Rational& s2, bool plus) {
  Mat4q m = torus_rotation_exact(c1, s1, c2, s2);
  return plus ? m : Mat4q(-m);
}

Mat4q EndoscopicGroup::embed_split_exact(const Rational& t1, const Rational& t2, bool plus) {
  Mat4q m = split_torus<Rational>(t1, t2);
  return plus ? m : Mat4q(-m);
}

Mat4d EndoscopicGroup::embed_sl2(double a, double b, double c, double d, bool plus) const {
  Mat4d m = Mat4d::Identity();
  m(1, 1) = a;
  m(1, 3) = b;
  m(3, 1) = c;
  m(3, 3) = d;
  m = frame * m * frame_inv;
  return plus ? m : Mat4d(-m);
}

Mat4q EndoscopicGroup::embed_sl2_exact(const Rational& a, const Rational& b, const Rational& c,
                                       const Rational& d, bool plus) {
  if (a * d - b * c != Rational(1))
    throw std::invalid_argument("embed_sl2_exact: ad - bc must be 1");
  Mat4q m = Mat4q::Identity();
  m(1, 1) = a;
  m(1, 3) = b;
  m(3, 1) = c;
  m(3, 3) = d;
  return plus ? m : Mat4q(-m);
}

namespace {

/// Symplectic basis aligned with the eigenplanes of a regular semisimple
/// element, giving frame^{-1} gamma frame the standard torus shape.
Mat4d torus_frame(const Mat4d& gamma, const ConjugacyType& type) {
  Eigen::EigenSolver<Mat4d> es(gamma);
  Eigen::Vector4cd ev = es.eigenvalues();
  const Mat4d& J = J4d();
  Mat4d frame;
  if (type.tag == ConjugacyTag::elliptic) {
    int slot = 0;
    for (int k = 0; k < 4 && slot < 2; ++k) {
      if (ev(k).imag() <= kEqualTol) continue;
      Eigen::Vector4d u = es.eigenvectors().col(k).real();
      Eigen::Vector4d v = es.eigenvectors().col(k).imag();
      double c = u.dot(J * v);
      if (std::abs(c) < 1e-12) throw std::logic_error("torus_frame: isotropic eigenplane");
      if (c < 0) {
        v = -v;
        c = -c;
      }
      double s = 1.0 / std::sqrt(c);
      frame.col(slot) = u * s;
      frame.col(slot + 2) = v * s;
      ++slot;
    }
  } else {
    int slot = 0;
    for (int k = 0; k < 4 && slot < 2; ++k) {
      if (std::abs(ev(k).real()) <= 1.0 || std::abs(ev(k).imag()) > kEqualTol) continue;
      Eigen::Vector4d w = es.eigenvectors().col(k).real();
      // dual eigenvector for 1/a
      int dual = -1;
      for (int m = 0; m < 4; ++m)
        if (std::abs(ev(m) - 1.0 / ev(k)) < kEqualTol * 10) dual = m;
      if (dual < 0) throw std::logic_error("torus_frame: missing dual eigenvalue");
      Eigen::Vector4d wd = es.eigenvectors().col(dual).real();
      double c = w.dot(J * wd);
      if (std::abs(c) < 1e-12) throw std::logic_error("torus_frame: isotropic eigenplane");
      frame.col(slot) = w;
      frame.col(slot + 2) = wd / c;
      ++slot;
    }
  }
  return frame;
}

}  // namespace

EndoscopicGroup endoscopic_group_of(const Mat4d& gamma, double tol) {
  ConjugacyType type = classify(gamma, tol);
  if (type.tag != ConjugacyTag::elliptic && type.tag != ConjugacyTag::hyperbolic)
    throw std::invalid_argument("endoscopic_group_of: " + to_string(type.tag) +
                                " input has no nontrivial endoscopic group here");
  if (type.params.size() != 2)
    throw std::invalid_argument("endoscopic_group_of: degenerate parameter set");

  EndoscopicGroup out;
  out.source = type.tag;
  const bool equal = std::abs(type.params[0] - type.params[1]) < kEqualTol;
  out.kind = equal ? EndoscopicKind::sl2 : EndoscopicKind::torus;

  if (out.kind == EndoscopicKind::torus) {
    auto commutes = [&](const EndoscopicGroup& g) {
      double scale = gamma.cwiseAbs().maxCoeff();
      for (double s : {0.37, 1.9}) {
        Mat4d h = g.embed_torus(s, -0.5 * s, true);
        if ((h * gamma - gamma * h).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, scale))
          return false;
      }
      return true;
    };
    if (!commutes(out)) {
      out.frame = torus_frame(gamma, type);
      out.frame_inv = out.frame.inverse();
      if (!commutes(out))
        throw std::logic_error("endoscopic_group_of: torus family failed to commute");
    }
  }
  return out;
}

}  // namespace sp4
