#include <doctest.h>

#include "sp4/exact_matrix.hpp"
#include "sp4/structure.hpp"
#include "sp4/symplectic.hpp"

using namespace sp4;

namespace {

Mat4q diag_q(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Mat4q m = Mat4q::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

}  // namespace

TEST_CASE("products of the fixed matrices") {
  const auto& cat = catalog();
  // I * J = J
  CHECK(is_exactly_zero(Mat4q(Mat4q(Mat4q::Identity() * cat.J4) - cat.J4)));
  // J * J = -I  (direct 4x4 multiplication)
  CHECK(is_exactly_zero(Mat4q(Mat4q(cat.J4 * cat.J4) + Mat4q::Identity())));
  // H1 * H2 = 0, so the diagonal pair commutes
  CHECK(is_exactly_zero(Mat4q(cat.H1 * cat.H2)));
  CHECK(is_exactly_zero(Mat4q(commutator(cat.H1, cat.H2))));
}

TEST_CASE("is_symplectic on exact inputs") {
  const auto& cat = catalog();
  CHECK(is_symplectic<Rational>(Mat4q(Mat4q::Identity())));
  CHECK(is_symplectic<Rational>(cat.J4));
  CHECK(is_symplectic<Rational>(diag_q(2, 3, Rational(1, 2), Rational(1, 3))));
  CHECK_FALSE(is_symplectic<Rational>(diag_q(2, 3, Rational(1, 3), Rational(1, 2))));
  CHECK_FALSE(is_symplectic<Rational>(Mat4q(Rational(2) * Mat4q::Identity())));
}

TEST_CASE("is_in_algebra on exact inputs") {
  const auto& cat = catalog();
  CHECK(is_in_algebra<Rational>(cat.H1));
  CHECK(is_in_algebra<Rational>(cat.E_2e1));
  CHECK_FALSE(is_in_algebra<Rational>(Mat4q(Mat4q::Identity())));
}

TEST_CASE("cartan involution") {
  const auto& cat = catalog();
  // fixed space: compact directions
  CHECK(is_exactly_zero(Mat4q(cartan_involution_algebra<Rational>(cat.jpV3) - cat.jpV3)));
  // split directions flip sign
  CHECK(is_exactly_zero(Mat4q(cartan_involution_algebra<Rational>(cat.H1) + cat.H1)));
  Mat4q e = cat.E_2e1;
  CHECK(is_exactly_zero(Mat4q(cartan_involution_algebra<Rational>(e) + Mat4q(e.transpose()))));
  CHECK_THROWS_AS(cartan_involution_algebra<Rational>(Mat4q(Mat4q::Identity())),
                  std::invalid_argument);

  // involution and bracket-compatibility on all basis pairs
  auto basis = cat.real_basis();
  for (const auto& x : basis) {
    CHECK(is_exactly_zero(
        Mat4q(cartan_involution_algebra<Rational>(cartan_involution_algebra<Rational>(x)) - x)));
  }
  for (const auto& x : basis)
    for (const auto& y : basis) {
      Mat4q lhs = cartan_involution_algebra<Rational>(Mat4q(commutator(x, y)));
      Mat4q rhs = commutator(cartan_involution_algebra<Rational>(x),
                             cartan_involution_algebra<Rational>(y));
      CHECK(is_exactly_zero(Mat4q(lhs - rhs)));
    }
}

TEST_CASE("jacobi identity and bilinearity on basis triples") {
  const auto& cat = catalog();
  auto basis = cat.real_basis();
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      for (int c = b + 1; c < 10; ++c) {
        Mat4q j = commutator(Mat4q(commutator(basis[a], basis[b])), basis[c]) +
                  commutator(Mat4q(commutator(basis[b], basis[c])), basis[a]) +
                  commutator(Mat4q(commutator(basis[c], basis[a])), basis[b]);
        CHECK(is_exactly_zero(j));
      }
  // bilinearity spot check with rational weights
  Mat4q u = Rational(2, 3) * basis[0] + Rational(-5, 7) * basis[3];
  Mat4q lhs = commutator(u, basis[8]);
  Mat4q rhs = Rational(2, 3) * commutator(basis[0], basis[8]) +
              Rational(-5, 7) * commutator(basis[3], basis[8]);
  CHECK(is_exactly_zero(Mat4q(lhs - rhs)));
}

TEST_CASE("exact inverse by adjugate") {
  Mat4q g = diag_q(2, 3, Rational(1, 2), Rational(1, 3));
  CHECK(is_exactly_zero(Mat4q(Mat4q(g * exact_inverse(g)) - Mat4q::Identity())));
  Mat4q n = unipotent<Rational>(Rational(1), Rational(2, 3), Rational(-1, 5), Rational(4));
  CHECK(is_exactly_zero(Mat4q(Mat4q(exact_inverse(n) * n) - Mat4q::Identity())));
  Mat4q sing = Mat4q::Zero();
  CHECK_THROWS_AS(exact_inverse(sing), std::domain_error);
}

TEST_CASE("group closure under product and inverse, exact words") {
  Mat4q g = unipotent<Rational>(Rational(1, 2), Rational(-1, 3), Rational(2), Rational(1)) *
            split_torus<Rational>(Rational(3, 2), Rational(5, 4));
  auto [c1, s1] = circle_point(Rational(1, 3));
  auto [c2, s2] = circle_point(Rational(-2, 5));
  Mat4q k = torus_rotation_exact(c1, s1, c2, s2);
  CHECK(is_symplectic<Rational>(g));
  CHECK(is_symplectic<Rational>(k));
  CHECK(is_symplectic<Rational>(Mat4q(g * k)));
  CHECK(is_symplectic<Rational>(exact_inverse(Mat4q(g * k))));
}

TEST_CASE("runtime-tagged matrices: mode dispatch and errors") {
  const auto& cat = catalog();
  ExactMatrix a(cat.H1), b(cat.H2), f(Mat4d(Mat4d::Identity()));
  CHECK(mat_mul(a, b).mode() == ScalarMode::rational);
  CHECK_THROWS_AS(mat_mul(a, f), ModeMismatch);
  CHECK(commutator(ExactMatrix(to_gaussian(cat.H1)), ExactMatrix(cat.Hp)).mode() ==
        ScalarMode::gaussian);
  CHECK(is_symplectic(ExactMatrix(cat.J4)));
  CHECK(is_in_algebra(ExactMatrix(cat.H1)));
  CHECK_FALSE(is_in_algebra(f));
  CHECK(is_symplectic(f));

  ExactMatrix widened = a.promoted_to(ScalarMode::gaussian);
  CHECK(widened.mode() == ScalarMode::gaussian);
  CHECK_THROWS_AS(ExactMatrix(cat.Hp).promoted_to(ScalarMode::float64), ModeMismatch);
}

TEST_CASE("json round trip in all three modes") {
  const auto& cat = catalog();
  for (const ExactMatrix& m :
       {ExactMatrix(Mat4q(unipotent<Rational>(Rational(1, 2), Rational(0), Rational(-7, 3), Rational(2)))),
        ExactMatrix(cat.Hp), ExactMatrix(Mat4d(0.5 * Mat4d::Identity()))}) {
    ExactMatrix back = matrix_from_json(to_json(m));
    CHECK(back.mode() == m.mode());
    CHECK(to_json(back) == to_json(m));
  }
  // inference: all numbers -> float64, strings -> exact
  CHECK(matrix_from_json("[1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1]").mode() == ScalarMode::float64);
  CHECK(matrix_from_json(
            "[\"1\",\"0\",\"0\",\"0\",\"0\",\"1\",\"0\",\"0\",\"0\",\"0\",\"1\",\"0\",\"0\",\"0\",\"0\",\"1\"]")
            .mode() == ScalarMode::rational);
  CHECK_THROWS(matrix_from_json("[1,2,3]"));
}
