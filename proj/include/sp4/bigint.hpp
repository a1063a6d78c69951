#ifndef SP4_BIGINT_HPP
#define SP4_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sp4 {

/// Arbitrary-precision signed integer, sign + magnitude in base 2^32.
/// Canonical form: no leading zero limbs, zero is { } with negative_ == false.
class BigInt {
public:
  BigInt() = default;
  BigInt(std::int64_t v);
  static BigInt from_decimal(const std::string& s);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt& negate();

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  /// Truncated division (C semantics: quotient rounds toward zero).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
  BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
  BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  static BigInt gcd(BigInt a, BigInt b);

  BigInt abs() const;
  double to_double() const;
  std::string to_string() const;

  /// Number of significant bits in the magnitude (0 for zero).
  std::size_t bit_length() const;

private:
  std::vector<std::uint32_t> limbs_;  // little-endian magnitude
  bool negative_ = false;

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q,
                         std::vector<std::uint32_t>& r);
};

}  // namespace sp4

#endif
