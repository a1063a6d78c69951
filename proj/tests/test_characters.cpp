#include <doctest.h>

#include <cmath>

#include "sp4/characters.hpp"

using namespace sp4;

TEST_CASE("torus characters: unit modulus and periodicity") {
  TorusElement g{0.3, 0.7};
  for (Weight m : {Weight(1, 0), Weight(2, -1), Weight(-3, 5)}) {
    CHECK(std::abs(std::abs(g.character(m)) - 1.0) < 1e-15);
    TorusElement shifted{g.th1 + 2.0 * M_PI, g.th2 - 2.0 * M_PI};
    CHECK(std::abs(g.character(m) - shifted.character(m)) < 1e-13);
  }
}

TEST_CASE("weyl numerator: single term, brute-force sum, antisymmetry") {
  TorusElement g{0.3, 0.7};
  Weight mu(1, 0);

  // single-element subset is one exponential
  CHECK(std::abs(weyl_numerator(mu, g, {weyl_identity()}) -
                 Complex(std::cos(0.3), std::sin(0.3))) < 1e-15);

  // full group equals the direct 8-term sum
  Complex direct = 0.0;
  for (const WeylElement& w : weyl_group())
    direct += static_cast<double>(w.det()) * g.character(w.apply(mu));
  CHECK(std::abs(weyl_numerator(mu, g, weyl_group()) - direct) < 1e-14);

  // antisymmetry under precomposition by every Weyl element
  Weight reg(3, 1);
  Complex base = weyl_numerator(reg, g, weyl_group());
  for (const WeylElement& w : weyl_group()) {
    Complex twisted = weyl_numerator(w.apply(reg), g, weyl_group());
    CHECK(std::abs(twisted - static_cast<double>(w.det()) * base) < 1e-13);
  }

  // identity torus element: the alternating sum collapses
  TorusElement e{0.0, 0.0};
  CHECK(std::abs(weyl_numerator(reg, e, weyl_group())) < 1e-14);
}

TEST_CASE("weyl denominator: zeros exactly on the singular set, periodic") {
  CHECK(std::abs(weyl_denominator({0.0, 0.7})) < 1e-14);
  CHECK(std::abs(weyl_denominator({0.4, 0.4})) < 1e-14);
  CHECK(std::abs(weyl_denominator({0.4, -0.4})) < 1e-14);
  CHECK(std::abs(weyl_denominator({0.4, 0.9})) > 1e-3);
  TorusElement g{1.1, 2.3};
  TorusElement shifted{1.1 + 2.0 * M_PI, 2.3};
  CHECK(std::abs(weyl_denominator(g) - weyl_denominator(shifted)) < 1e-12);
}

TEST_CASE("sl2 character: convention values and symmetries") {
  // n=2, th=pi/2, sign +: -e^{i pi} / (2i) = -i/2
  Complex v = sl2_ds_character(2, M_PI / 2, +1);
  CHECK(std::abs(v - Complex(0.0, -0.5)) < 1e-15);

  // two-path evaluation: formula vs real trig identities
  for (int n : {1, 2, 5}) {
    for (double th : {0.3, 1.0, 2.5, -0.9}) {
      for (int sign : {+1, -1}) {
        Complex a = sl2_ds_character(n, th, sign);
        double s = std::sin(th);
        Complex b = sign > 0 ? Complex(-std::sin(n * th), std::cos(n * th)) / (2.0 * s)
                             : Complex(-std::sin(n * th), -std::cos(n * th)) / (2.0 * s);
        CHECK(std::abs(a - b) < 1e-14);
      }
    }
  }

  // stable sum via formula equals the closed ratio -sin(n th)/sin(th)
  for (double th : {0.5, M_PI / 3}) {
    Complex stable = sl2_ds_character(1, th, +1) + sl2_ds_character(1, th, -1);
    CHECK(std::abs(stable - Complex(-1.0, 0.0)) < 1e-14);  // -sin(th)/sin(th)
    Complex stable3 = sl2_ds_character(3, th, +1) + sl2_ds_character(3, th, -1);
    CHECK(std::abs(stable3 - Complex(-std::sin(3 * th) / std::sin(th), 0.0)) < 1e-13);
  }

  // conjugation th -> -th swaps the two signs
  Complex p = sl2_ds_character(3, 0.8, +1);
  Complex m = sl2_ds_character(3, -0.8, -1);
  CHECK(std::abs(p - m) < 1e-15);

  CHECK_THROWS_AS(sl2_ds_character(2, M_PI, +1), std::invalid_argument);
  CHECK_THROWS_AS(sl2_ds_character(0, 0.5, +1), std::invalid_argument);
}

TEST_CASE("kappa characters and labelings") {
  KappaCharacter trivial(2, 0);
  CHECK(trivial.trivial());
  for (unsigned s = 0; s < 4; ++s) CHECK(trivial(s) == 1);

  KappaCharacter k(2, 2);
  CHECK(k(0) == 1);
  CHECK(k(1) == 1);
  CHECK(k(2) == -1);
  CHECK(k(3) == -1);
  // multiplicativity on the generators
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) CHECK(k(a ^ b) == k(a) * k(b));

  CHECK_THROWS_AS(KappaCharacter(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(KappaCharacter(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(k(7), std::invalid_argument);

  CHECK(even_weyl().size() == 4);
  for (const WeylElement& w : even_weyl()) CHECK(w.det() == 1);

  WeylLabeling bad{{0u, 1u}};
  CHECK_THROWS_AS(bad.validate(k), std::invalid_argument);
  WeylLabeling outside{{0u, 1u, 2u, 4u}};
  CHECK_THROWS_AS(outside.validate(k), std::invalid_argument);
}

TEST_CASE("kappa orbital: trivial character equals the stable sum, two paths") {
  HCParameter p(Weight(3, 1));
  TorusElement g{0.4, 1.3};
  KappaCharacter trivial(2, 0);
  WeylLabeling lab = WeylLabeling::standard();

  Complex path1 = kappa_orbital(p, g, trivial, lab);

  CharacterPacket packet;
  for (const WeylElement& w : even_weyl()) {
    Weight nu = w.apply(p.mu);
    packet.members.push_back(
        {[nu](const TorusElement& t) { return model_character(nu, t.inverse()); }, +1});
  }
  Complex path2 = stable_character_sum(packet, g);
  CHECK(std::abs(path1 - path2) < 1e-12);

  // single sign flip: stable-minus-unstable equals direct enumeration
  KappaCharacter k(2, 1);
  Complex twisted = kappa_orbital(p, g, k, lab);
  Complex manual = 0.0;
  const auto& evens = even_weyl();
  for (std::size_t i = 0; i < evens.size(); ++i) {
    double w = k(lab.labels[i]);
    manual += w * model_character(evens[i].apply(p.mu), g.inverse());
  }
  CHECK(std::abs(twisted - manual) < 1e-14);

  // gamma^{-1} input with mu -> -mu symmetry
  HCParameter pneg(Weight(-3, -1));
  Complex a = kappa_orbital(p, g.inverse(), k, lab);
  Complex b = kappa_orbital(pneg, g, k, lab);
  CHECK(std::abs(a - b) < 1e-13);
}

TEST_CASE("transfer coefficients: printed identity and special cases") {
  HCParameter p(Weight(3, 1), Weight(1, -1));
  WeylLabeling lab = WeylLabeling::standard();

  // trivial kappa: all +1
  KappaCharacter trivial(2, 0);
  for (const auto& row : transfer_table(p, trivial, lab)) CHECK(row.a == 1);

  KappaCharacter k(2, 3);
  // w2 = e: a(w1, mu) = kappa(w1)
  for (const WeylElement& w1 : even_weyl())
    CHECK(transfer_coefficient(w1, weyl_identity(), k, lab) == k(lab.of(w1)));

  // cocycle-style identity on all even pairs
  for (const WeylElement& w1 : even_weyl())
    for (const WeylElement& w2 : even_weyl()) {
      int lhs = transfer_coefficient(w1, w2, k, lab);
      CHECK(lhs == k(lab.of(w2)) * k(lab.of(w2.compose(w1))));
      CHECK((lhs == 1 || lhs == -1));
    }

  // rows carry nu = w mu + xi
  auto rows = transfer_table(p, k, lab);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].nu == Weight(4, 0));  // e: mu + xi

  WeylElement odd = weyl_group()[1].det() == -1 ? weyl_group()[1] : weyl_group()[2];
  CHECK_THROWS_AS(transfer_coefficient(odd, weyl_identity(), k, lab), std::invalid_argument);
}

TEST_CASE("stable character sums over synthetic packets") {
  TorusElement g{0.9, 0.2};
  // size 1, sign +1: the single value
  CharacterPacket single;
  single.members.push_back({[](const TorusElement& t) { return model_character(Weight(4, 1), t); }, +1});
  CHECK(std::abs(stable_character_sum(single, g) - model_character(Weight(4, 1), g)) == 0.0);

  // alternating 4-member packet equals the manual sum; negating kappa
  // negates the output
  CharacterPacket four;
  Complex manual = 0.0;
  int sign = +1;
  for (const WeylElement& w : even_weyl()) {
    Weight nu = w.apply(Weight(3, 1));
    four.members.push_back(
        {[nu](const TorusElement& t) { return model_character(nu, t); }, sign});
    manual += static_cast<double>(sign) * model_character(nu, g);
    sign = -sign;
  }
  CHECK(std::abs(stable_character_sum(four, g) - manual) < 1e-15);

  CharacterPacket negated = four;
  for (auto& m : negated.members) m.sign = -m.sign;
  CHECK(std::abs(stable_character_sum(negated, g) + stable_character_sum(four, g)) < 1e-15);
}

TEST_CASE("model character: weyl-quotient structure") {
  TorusElement g{0.5, 1.7};
  // numerator antisymmetry under the compact reflection: swapping nu
  // coordinates flips the sign
  Weight nu(4, 1), swapped(1, 4);
  CHECK(std::abs(model_character(nu, g) + model_character(swapped, g)) < 1e-13);
  CHECK_THROWS_AS(model_character(nu, TorusElement{0.0, 0.5}), std::invalid_argument);

  // regularity guard on parameters
  CHECK_THROWS_AS(HCParameter(Weight(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(HCParameter(Weight(0, 1)), std::invalid_argument);

  // the exponent shift rho - rho_h + xi
  HCParameter p(Weight(3, 1), Weight(1, -1), Weight(1, 0));
  CHECK(p.transfer_shift() == Weight(2, -2));
}
