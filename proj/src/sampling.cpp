#include "sp4/sampling.hpp"

#include "sp4/structure.hpp"

namespace sp4 {

Rng::Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

// splitmix64
std::uint64_t Rng::next() {
  s_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
  double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

Mat4d so2_rotation(double phi) {
  // (R 0; 0 R) with R in SO(2); orthogonal and symplectic
  Mat4d m = Mat4d::Zero();
  double c = std::cos(phi), s = std::sin(phi);
  m(0, 0) = c;
  m(0, 1) = s;
  m(1, 0) = -s;
  m(1, 1) = c;
  m(2, 2) = c;
  m(2, 3) = s;
  m(3, 2) = -s;
  m(3, 3) = c;
  return m;
}

}  // namespace

Mat4d random_k(Rng& rng) {
  Mat4d k = torus_rotation(rng.uniform(-3.1, 3.1), rng.uniform(-3.1, 3.1));
  k = k * so2_rotation(rng.uniform(-3.1, 3.1));
  k = k * torus_rotation(rng.uniform(-3.1, 3.1), rng.uniform(-3.1, 3.1));
  return k;
}

Mat4d random_symplectic(Rng& rng, int word_length) {
  Mat4d g = Mat4d::Identity();
  for (int w = 0; w < word_length; ++w) {
    switch (rng.uniform_int(0, 3)) {
      case 0:
        g = g * unipotent<double>(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5),
                                  rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
        break;
      case 1:
        g = g * split_torus<double>(rng.uniform(0.8, 1.25), rng.uniform(0.8, 1.25));
        break;
      case 2:
        g = g * torus_rotation(rng.uniform(-3.1, 3.1), rng.uniform(-3.1, 3.1));
        break;
      default:
        g = g * so2_rotation(rng.uniform(-3.1, 3.1));
        break;
    }
  }
  return g;
}

}  // namespace sp4
