#include "sp4/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sp4 {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
  negative_ = v < 0;
  std::uint64_t m = negative_ ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
  while (m != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
}

BigInt BigInt::from_decimal(const std::string& s) {
  BigInt out;
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
    // out = out*10 + digit
    std::uint64_t carry = static_cast<std::uint64_t>(s[i] - '0');
    for (std::size_t k = 0; k < out.limbs_.size(); ++k) {
      std::uint64_t t = static_cast<std::uint64_t>(out.limbs_[k]) * 10u + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(t & 0xffffffffu);
      carry = t >> 32;
    }
    if (carry) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
  }
  out.trim();
  out.negative_ = neg && !out.is_zero();
  return out;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t k = a.limbs_.size(); k-- > 0;) {
    if (a.limbs_[k] != b.limbs_[k]) return a.limbs_[k] < b.limbs_[k] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<std::uint32_t> out(big.size());
  std::uint64_t carry = 0;
  for (std::size_t k = 0; k < big.size(); ++k) {
    std::uint64_t t = carry + big[k] + (k < small.size() ? small[k] : 0u);
    out[k] = static_cast<std::uint32_t>(t & 0xffffffffu);
    carry = t >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size());
  std::int64_t borrow = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::int64_t t = static_cast<std::int64_t>(a[k]) - borrow - (k < b.size() ? b[k] : 0u);
    if (t < 0) {
      t += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[k] = static_cast<std::uint32_t>(t);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> out(a.size() + b.size(), 0u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t t = static_cast<std::uint64_t>(out[i + j]) + ai * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(t & 0xffffffffu);
      carry = t >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t t = static_cast<std::uint64_t>(out[k]) + carry;
      out[k] = static_cast<std::uint32_t>(t & 0xffffffffu);
      carry = t >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Knuth algorithm D, base 2^32.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q,
                        std::vector<std::uint32_t>& r) {
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  q.clear();
  r.clear();
  if (a.size() < b.size()) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    std::uint64_t d = b[0];
    q.assign(a.size(), 0u);
    std::uint64_t rem = 0;
    for (std::size_t k = a.size(); k-- > 0;) {
      std::uint64_t cur = (rem << 32) | a[k];
      q[k] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(static_cast<std::uint32_t>(rem));
    return;
  }

  // Normalize so that the divisor's top limb has its high bit set.
  int shift = 0;
  {
    std::uint32_t top = b.back();
    while ((top & 0x80000000u) == 0) {
      top <<= 1;
      ++shift;
    }
  }
  const std::size_t n = b.size();
  const std::size_t m = a.size() - n;
  std::vector<std::uint32_t> u(a.size() + 1, 0u), v(n, 0u);
  if (shift == 0) {
    std::copy(a.begin(), a.end(), u.begin());
    v = b;
  } else {
    for (std::size_t k = 0; k < a.size(); ++k) {
      u[k] |= a[k] << shift;
      u[k + 1] = a[k] >> (32 - shift);
    }
    for (std::size_t k = 0; k < n; ++k) {
      v[k] = b[k] << shift;
      if (k > 0) v[k] |= b[k - 1] >> (32 - shift);
    }
  }

  q.assign(m + 1, 0u);
  const std::uint64_t vtop = v[n - 1];
  const std::uint64_t vsub = v[n - 2];
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    std::uint64_t qhat = num / vtop;
    std::uint64_t rhat = num % vtop;
    while (qhat >= kBase || qhat * vsub > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += vtop;
      if (rhat >= kBase) break;
    }
    // u[j..j+n] -= qhat * v
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t p = qhat * v[k] + carry;
      carry = p >> 32;
      std::int64_t t = static_cast<std::int64_t>(u[j + k]) - borrow - static_cast<std::int64_t>(p & 0xffffffffu);
      if (t < 0) {
        t += static_cast<std::int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[j + k] = static_cast<std::uint32_t>(t);
    }
    std::int64_t t = static_cast<std::int64_t>(u[j + n]) - borrow - static_cast<std::int64_t>(carry);
    if (t < 0) {
      // qhat was one too large; add v back.
      t += static_cast<std::int64_t>(kBase);
      --qhat;
      std::uint64_t c2 = 0;
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t s = static_cast<std::uint64_t>(u[j + k]) + v[k] + c2;
        u[j + k] = static_cast<std::uint32_t>(s & 0xffffffffu);
        c2 = s >> 32;
      }
      t += static_cast<std::int64_t>(c2);
      t &= 0xffffffff;
    }
    u[j + n] = static_cast<std::uint32_t>(t);
    q[j] = static_cast<std::uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();

  r.assign(n, 0u);
  if (shift == 0) {
    std::copy(u.begin(), u.begin() + n, r.begin());
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      r[k] = u[k] >> shift;
      r[k] |= u[k + 1] << (32 - shift);
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.negate();
  return out;
}

BigInt& BigInt::negate() {
  if (!is_zero()) negative_ = !negative_;
  return *this;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt out;
  if (a.negative_ == b.negative_) {
    out.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
    out.negative_ = a.negative_;
  } else {
    int c = BigInt::cmp_mag(a, b);
    if (c == 0) return BigInt();
    const BigInt& big = c > 0 ? a : b;
    const BigInt& small = c > 0 ? b : a;
    out.limbs_ = BigInt::sub_mag(big.limbs_, small.limbs_);
    out.negative_ = big.negative_;
  }
  out.trim();
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  out.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
  out.negative_ = (a.negative_ != b.negative_) && !out.limbs_.empty();
  return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
  q.negative_ = (a.negative_ != b.negative_) && !q.limbs_.empty();
  r.negative_ = a.negative_ && !r.limbs_.empty();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.negative_ != b.negative_) return a.negative_;
  int c = BigInt::cmp_mag(a, b);
  return a.negative_ ? c > 0 : c < 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return a;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.negative_ = false;
  return out;
}

double BigInt::to_double() const {
  double m = 0.0;
  // Only the top three limbs contribute beyond double precision.
  std::size_t k0 = limbs_.size() > 3 ? limbs_.size() - 3 : 0;
  for (std::size_t k = limbs_.size(); k-- > k0;) {
    m = m * 4294967296.0 + static_cast<double>(limbs_[k]);
  }
  m = std::ldexp(m, static_cast<int>(32 * k0));
  return negative_ ? -m : m;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> work = limbs_;
  std::string digits;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t k = work.size(); k-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[k];
      work[k] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int d = 0; d < 9; ++d) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::size_t bits = 32 * (limbs_.size() - 1);
  std::uint32_t top = limbs_.back();
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

}  // namespace sp4
