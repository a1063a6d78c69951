#ifndef SP4_SAMPLING_HPP
#define SP4_SAMPLING_HPP

#include <cstdint>

#include "sp4/types.hpp"

// Seeded generation of random group elements as words in the standard
// generators (unipotent chart, split torus, torus rotations, diagonal
// SO(2)-rotations of K). Distributions are implemented directly on the raw
// 64-bit stream so artifacts are reproducible across standard libraries.

namespace sp4 {

class Rng {
public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  double uniform(double lo, double hi);      // uniform on [lo, hi)
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);  // inclusive
private:
  std::uint64_t s_;
};

/// Random word in the generators of U, A and K-rotations; gentle parameter
/// ranges keep conditioning mild.
Mat4d random_symplectic(Rng& rng, int word_length = 6);

/// Random element of K (product of torus rotations and embedded SO(2)).
Mat4d random_k(Rng& rng);

}  // namespace sp4

#endif
