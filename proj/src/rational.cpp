#include "sp4/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace sp4 {

void Rational::normalize() {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.is_negative()) {
    num_.negate();
    den_.negate();
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!(g == BigInt(1))) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt::from_decimal(s), BigInt(1));
  return Rational(BigInt::from_decimal(s.substr(0, slash)),
                  BigInt::from_decimal(s.substr(slash + 1)));
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_.negate();
  return out;
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(den_, num_);
}

double Rational::to_double() const {
  // Shift both parts into double range before dividing.
  std::size_t nb = num_.bit_length(), db = den_.bit_length();
  if (nb < 900 && db < 900) return num_.to_double() / den_.to_double();
  // Comparable magnitudes are all the exactness-critical code paths ever
  // produce; fall back to a crude scaled quotient for anything larger.
  double scale = std::ldexp(1.0, static_cast<int>(db) - static_cast<int>(nb));
  return (num_.to_double() * scale) / (den_.to_double() * scale);
}

std::string Rational::to_string() const {
  if (den_ == BigInt(1)) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  Rational n = b.norm();
  if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  GaussianRational t = a * b.conj();
  return {t.real() / n, t.imag() / n};
}

GaussianRational GaussianRational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("GaussianRational: empty literal");
  if (s.back() != 'i') return GaussianRational(Rational::parse(s));
  // Split an optional real part from the imaginary term: scan for the last
  // '+'/'-' that is not the leading sign and not inside "p/q".
  std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto parse_imag = [](const std::string& t) {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return Rational::parse(t);
  };
  if (split == std::string::npos) return {Rational(0), parse_imag(body)};
  return {Rational::parse(body.substr(0, split)), parse_imag(body.substr(split))};
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag_part = im_.abs().to_string() + "i";
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag_part;
  return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag_part;
}

}  // namespace sp4
