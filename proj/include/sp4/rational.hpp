#ifndef SP4_RATIONAL_HPP
#define SP4_RATIONAL_HPP

#include <string>

#include "sp4/bigint.hpp"

namespace sp4 {

/// Exact rational number, always reduced, denominator > 0.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  /// Accepts "p", "p/q", leading sign allowed.
  static Rational parse(const std::string& s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_ == BigInt(1) && num_ == BigInt(1); }
  int sign() const { return num_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
  Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
  Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
  Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  double to_double() const;
  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

private:
  BigInt num_, den_;
  void normalize();
};

inline Rational abs(const Rational& q) { return q.abs(); }

/// Complex number with exact rational real and imaginary parts.
/// Closed under field operations; this is the scalar used for the
/// complexified algebra computations.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(int re) : re_(re) {}
  GaussianRational(std::int64_t re) : re_(re) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  /// Accepts "a", "a+bi", "a-bi", "bi", "-bi", "i", "-i" with rational a, b.
  static GaussianRational parse(const std::string& s);
  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& b) { *this = *this + b; return *this; }
  GaussianRational& operator-=(const GaussianRational& b) { *this = *this - b; return *this; }
  GaussianRational& operator*=(const GaussianRational& b) { *this = *this * b; return *this; }
  GaussianRational& operator/=(const GaussianRational& b) { *this = *this / b; return *this; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }  // |z|^2

  std::string to_string() const;

private:
  Rational re_, im_;
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline const Rational& real(const GaussianRational& z) { return z.real(); }
inline const Rational& imag(const GaussianRational& z) { return z.imag(); }

}  // namespace sp4

#endif
