#include <doctest.h>

#include <random>

#include "sp4/rational.hpp"

using sp4::BigInt;
using sp4::GaussianRational;
using sp4::Rational;

TEST_CASE("bigint arithmetic against int64") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-1000000000ll, 1000000000ll);
  for (int it = 0; it < 2000; ++it) {
    std::int64_t a = dist(rng), b = dist(rng);
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    if (b != 0) {
      CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
      CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
    }
    CHECK((BigInt(a) < BigInt(b)) == (a < b));
  }
}

TEST_CASE("bigint division reconstructs a = q*b + r on wide operands") {
  std::mt19937_64 rng(11);
  auto random_big = [&](int limbs) {
    BigInt x(0);
    for (int k = 0; k < limbs; ++k)
      x = x * BigInt(4294967296ll) + BigInt(static_cast<std::int64_t>(rng() & 0xffffffffu));
    if (rng() & 1) x.negate();
    return x;
  };
  for (int it = 0; it < 300; ++it) {
    BigInt a = random_big(1 + static_cast<int>(rng() % 6));
    BigInt b = random_big(1 + static_cast<int>(rng() % 4));
    if (b.is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    // remainder carries the dividend's sign (truncated division)
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("bigint decimal round trip") {
  const char* cases[] = {"0", "-1", "123456789012345678901234567890", "-987654321987654321"};
  for (const char* s : cases) CHECK(BigInt::from_decimal(s).to_string() == s);
  CHECK(BigInt::from_decimal("18446744073709551616").to_double() == doctest::Approx(1.8446744073709552e19));
}

TEST_CASE("rational field identities hold exactly") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> dist(-40, 40);
  auto rnd = [&] {
    std::int64_t d = 0;
    while (d == 0) d = dist(rng);
    return Rational(dist(rng), d);
  };
  for (int it = 0; it < 500; ++it) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("gaussian rational field and parse/print round trip") {
  GaussianRational z(Rational(1, 2), Rational(-3, 4));
  GaussianRational w(Rational(2), Rational(5));
  CHECK((z * w) / w == z);
  CHECK(z * z.conj() == GaussianRational(z.norm()));
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(Rational(-1)));

  for (const char* s : {"1/2-3/4i", "-3/4i", "i", "-i", "5", "-5/3", "2+i", "1/2+1/2i"}) {
    GaussianRational v = GaussianRational::parse(s);
    CHECK(GaussianRational::parse(v.to_string()) == v);
  }
  CHECK(GaussianRational::parse("1/2-3/4i") == z);
}
