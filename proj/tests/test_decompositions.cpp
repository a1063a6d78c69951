#include <doctest.h>

#include "sp4/decompositions.hpp"
#include "sp4/sampling.hpp"
#include "sp4/structure.hpp"
#include "sp4/symplectic.hpp"

using namespace sp4;

TEST_CASE("iwasawa of the identity and of split-torus elements") {
  IwasawaFactors f = iwasawa(Mat4d::Identity());
  CHECK(iwasawa_residual(Mat4d::Identity(), f) < 1e-14);
  CHECK((f.u - Mat4d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((f.a - Mat4d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((f.k - Mat4d::Identity()).cwiseAbs().maxCoeff() < 1e-14);

  Mat4d a0 = split_torus<double>(2.0, 3.0);
  f = iwasawa(a0);
  CHECK(f.t1 == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(f.t2 == doctest::Approx(3.0).epsilon(1e-13));
  CHECK((f.u - Mat4d::Identity()).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((f.k - Mat4d::Identity()).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(iwasawa_residual(a0, f) < 1e-13);
}

TEST_CASE("iwasawa round trip on a designed product") {
  Mat4d g = unipotent<double>(1.0, 0.0, 0.0, 0.0) * split_torus<double>(2.0, 1.0) *
            torus_rotation(0.4, -1.1);
  IwasawaFactors f = iwasawa(g);
  CHECK(iwasawa_residual(g, f) < 1e-12);
  CHECK(f.x1 == doctest::Approx(1.0));
  CHECK(f.t1 == doctest::Approx(2.0));
  CHECK(f.t2 == doctest::Approx(1.0));
  CHECK(k_defect(f.k) < 1e-12);
}

TEST_CASE("iwasawa round trip, K-membership, determinism on random words") {
  Rng rng(2024);
  for (int it = 0; it < 200; ++it) {
    Mat4d g = random_symplectic(rng);
    IwasawaFactors f = iwasawa(g);
    CHECK(iwasawa_residual(g, f) < 1e-11);
    CHECK(k_defect(f.k) < 1e-11);
    CHECK(f.t1 > 0.0);
    CHECK(f.t2 > 0.0);
    IwasawaFactors f2 = iwasawa(g);
    CHECK((f.u - f2.u).cwiseAbs().maxCoeff() == 0.0);
    CHECK((f.a - f2.a).cwiseAbs().maxCoeff() == 0.0);
    CHECK((f.k - f2.k).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("left-K invariance of the (u, a) part") {
  Rng rng(99);
  for (int it = 0; it < 100; ++it) {
    Mat4d g = random_symplectic(rng);
    Mat4d k0 = random_k(rng);
    IwasawaFactors f = iwasawa(g);
    IwasawaFactors fk = iwasawa(g * k0);
    CHECK((f.u - fk.u).cwiseAbs().maxCoeff() < 1e-11);
    CHECK((f.a - fk.a).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("iwasawa rejects non-symplectic input") {
  Mat4d bad = 2.0 * Mat4d::Identity();
  CHECK_THROWS_AS(iwasawa(bad), std::invalid_argument);
}

TEST_CASE("polar on identity, K elements, positive diagonal") {
  PolarFactors f = polar(Mat4d::Identity());
  CHECK((f.k1 - Mat4d::Identity()).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((f.p - Mat4d::Identity()).cwiseAbs().maxCoeff() < 1e-13);

  Rng rng(5);
  Mat4d k = random_k(rng);
  f = polar(k);
  CHECK((f.k1 - k).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((f.p - Mat4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);

  Mat4d a0 = split_torus<double>(4.0, 1.0);
  f = polar(a0);
  CHECK((f.p - a0).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((f.k1 - Mat4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("polar factors are symplectic and reconstruct g") {
  Rng rng(31);
  for (int it = 0; it < 100; ++it) {
    Mat4d g = random_symplectic(rng);
    PolarFactors f = polar(g);
    CHECK((f.k1 * f.p - g).cwiseAbs().maxCoeff() < 1e-11);
    CHECK(k_defect(f.k1) < 1e-11);
    CHECK(symplectic_defect(f.p) < 1e-11);
    CHECK((f.p - f.p.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("kak reconstructs with both factors in K") {
  Rng rng(77);
  for (int it = 0; it < 100; ++it) {
    Mat4d g = random_symplectic(rng);
    KAKFactors f = kak(g);
    CHECK((f.k1 * f.a * f.k2 - g).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(k_defect(f.k1) < 1e-10);
    CHECK(k_defect(f.k2) < 1e-10);
    CHECK(f.a(0, 0) >= f.a(1, 1));
    CHECK(f.a(1, 1) >= 1.0 - 1e-9);
  }
  // identity edge case (unit eigenvalues everywhere)
  KAKFactors f = kak(Mat4d::Identity());
  CHECK((f.k1 * f.a * f.k2 - Mat4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}
