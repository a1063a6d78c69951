#ifndef SP4_TYPES_HPP
#define SP4_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

#include "sp4/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<sp4::Rational> {
  typedef sp4::Rational Real;
  typedef sp4::Rational NonInteger;
  typedef sp4::Rational Nested;
  typedef sp4::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

// Treated as a commutative field scalar; no Eigen operation used here ever
// needs conjugation, so it is registered as a "real" type.
template <>
struct NumTraits<sp4::GaussianRational> {
  typedef sp4::GaussianRational Real;
  typedef sp4::GaussianRational NonInteger;
  typedef sp4::GaussianRational Nested;
  typedef sp4::GaussianRational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 120,
    MulCost = 240
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace sp4 {

template <typename Scalar>
using Mat4 = Eigen::Matrix<Scalar, 4, 4>;
template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

using Mat4q = Mat4<Rational>;            // exact rational entries
using Mat4g = Mat4<GaussianRational>;    // exact complex-rational entries
using Mat4d = Eigen::Matrix4d;           // float64
using Mat2d = Eigen::Matrix2d;
using Mat2cd = Eigen::Matrix2cd;
using Mat2g = Mat2<GaussianRational>;

/// Integer weight (m1, m2) of the rank-2 torus.
using Weight = Eigen::Vector2i;

inline GaussianRational to_gaussian(const Rational& q) { return GaussianRational(q); }

inline Mat4g to_gaussian(const Mat4q& m) {
  Mat4g out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = GaussianRational(m(r, c));
  return out;
}

inline Mat4d to_float(const Mat4q& m) {
  Mat4d out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = m(r, c).to_double();
  return out;
}

inline std::complex<double> to_complex(const GaussianRational& z) {
  return {z.real().to_double(), z.imag().to_double()};
}

}  // namespace sp4

#endif
