#ifndef SP4_STRUCTURE_HPP
#define SP4_STRUCTURE_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sp4/symplectic.hpp"
#include "sp4/types.hpp"

// Structure constants of sp(4,R): the fixed basis matrices, the C2 root
// system on the compact Cartan subalgebra, the Weyl group of signed
// permutations, and exact root-space decomposition.
//
// Root pairing convention. The compact Cartan torus is generated by the two
// block rotations T1 = e13 - e31 and T2 = e24 - e42 (so exp(th1 T1 + th2 T2)
// is the rotation pair r(th1) r(th2)). A weight beta = (m1, m2) acts by
//
//     [ th1 T1 + th2 T2 , X_beta ] = i (m1 th1 + m2 th2) X_beta,
//
// equivalently ad(Z) = i (m1 + m2) and ad(H') = m1 - m2 on X_beta, where
// Z = T1 + T2 and H' = -i (T1 - T2). The pairing matrix is derived from the
// computed eigenvalue table, not from transcribed linear relations.

namespace sp4 {

/// One of the 8 roots of C2, as an integer pair with classification flags.
struct Root {
  Weight weight;   // (m1, m2)
  bool compact;    // true for +-(1,-1)
  bool positive;   // positive system {(1,-1), (2,0), (1,1), (0,2)}

  bool operator==(const Root& o) const { return weight == o.weight; }
};

/// Signed permutation of the two weight coordinates; the full set of eight
/// forms the C2 Weyl group.
struct WeylElement {
  Eigen::Matrix2i m;

  Weight apply(const Weight& w) const { return m * w; }
  int det() const { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
  WeylElement compose(const WeylElement& o) const { return {m * o.m}; }
  bool is_identity() const { return m == Eigen::Matrix2i::Identity(); }
  bool operator==(const WeylElement& o) const { return m == o.m; }
  /// "(m1,m2)->(img of e1),(img of e2)", e.g. the identity reads
  /// "(1,0),(0,1)".
  std::string name() const;
};

/// All 8 elements in a fixed deterministic order (identity first).
const std::vector<WeylElement>& weyl_group();
WeylElement weyl_identity();
WeylElement weyl_long_element();

/// The 8 roots of Sigma in a fixed order: positive roots first.
const std::vector<Root>& root_system();

/// rho = half sum of positive roots = (2, -1).
Weight rho();

/// Minimal K-type weights retained from the induction constructions.
Weight min_k_type_holomorphic(int k);    // (k, -k)
Weight min_k_type_cohomological(int k);  // (k-1, 1-k)

/// Exact constants: every named basis matrix of the group's structure
/// theory. Real matrices are rational, the complex basis is
/// gaussian-rational. All are verified against the membership predicates and
/// bracket relations by verify_bracket_table() and the test suite.
struct BasisCatalog {
  // symplectic form
  Mat4q J4;

  // split Cartan and restricted-root vectors (Borel direction)
  Mat4q H1, H2;
  Mat4q E_2e1, E_e1e2, E_2e2, E_e1me2;

  // compact Cartan generators: exp(th1 T1 + th2 T2) = r(th1) r(th2)
  Mat4q T1, T2;

  // complex basis of k_C and the Cartan h_C = <Z, H'>
  Mat4g Z, Hp, X, Xbar;

  // su(1,1) and u(2) images (the j / j' inclusions)
  Mat4q jU1, jU2, jU3, jU4;
  Mat4q jpU1, jpU2, jpV3, jpV4;

  // canonical root vectors, one per root of Sigma, normalized so the first
  // nonzero entry in row-major order is 1; computed as exact simultaneous
  // eigenvectors of ad(T1), ad(T2)
  std::map<std::pair<int, int>, Mat4g> root_vectors;

  /// The 10 rational matrices {H1, H2, E_*, j'(.)} forming a basis of
  /// sp(4,R) over R (and of sp(4,C) over C).
  std::array<Mat4q, 10> real_basis() const;
  std::array<std::string, 10> real_basis_names() const;

  const Mat4g& root_vector(const Weight& beta) const;
};

const BasisCatalog& catalog();

/// Compact torus element r(th1) r(th2) with exact cosine/sine pairs
/// (c1,s1), (c2,s2); each pair must satisfy c^2 + s^2 = 1.
Mat4q torus_rotation_exact(const Rational& c1, const Rational& s1,
                           const Rational& c2, const Rational& s2);
Mat4d torus_rotation(double th1, double th2);

/// Rational point on the unit circle: (cos, sin) = ((1-t^2), 2t) / (1+t^2).
std::pair<Rational, Rational> circle_point(const Rational& t);

/// n(x1,x2,x3,x4): the global polynomial chart of the unipotent radical U of
/// the Borel subgroup (symmetric 2x2 block (x1 x2; x2 x3) over the
/// upper-triangular (1 x4; 0 1) factor).
template <typename Scalar>
Mat4<Scalar> unipotent(const Scalar& x1, const Scalar& x2, const Scalar& x3, const Scalar& x4) {
  Mat4<Scalar> n1 = Mat4<Scalar>::Identity();
  n1(0, 2) = x1;
  n1(0, 3) = x2;
  n1(1, 2) = x2;
  n1(1, 3) = x3;
  Mat4<Scalar> n2 = Mat4<Scalar>::Identity();
  n2(0, 1) = x4;
  n2(3, 2) = -x4;
  return Mat4<Scalar>(n1 * n2);
}

/// diag(t1, t2, 1/t1, 1/t2), the split torus A of the Iwasawa decomposition.
template <typename Scalar>
Mat4<Scalar> split_torus(const Scalar& t1, const Scalar& t2) {
  Mat4<Scalar> a = Mat4<Scalar>::Zero();
  a(0, 0) = t1;
  a(1, 1) = t2;
  a(2, 2) = Scalar(1) / t1;
  a(3, 3) = Scalar(1) / t2;
  return a;
}

/// beta(H) for H = cz Z + ch H' given exactly by i cz (m1+m2) + ch (m1-m2).
GaussianRational root_pairing(const Weight& beta, const GaussianRational& coeff_Z,
                              const GaussianRational& coeff_Hp);

struct RootDecomposition {
  GaussianRational coeff_Z, coeff_Hp;                       // Cartan part
  std::map<std::pair<int, int>, GaussianRational> components;  // root components
};

/// Expand an element of the complexified algebra in the basis
/// {Z, H'} u {X_beta}. Throws if the input is outside the span.
RootDecomposition root_decompose(const Mat4g& xc);

struct CheckEntry {
  std::string name;
  bool passed;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  bool all_passed() const;
  void add(std::string name, bool passed, std::string detail = "");
};

/// Exact verification of the displayed commutation relations
/// ([Z, k_C] = 0, [H',X] = 2X, [H',Xbar] = -2Xbar, [X,Xbar] = H'),
/// basis membership, the root eigenvalue table, and the dimension count.
CheckReport verify_bracket_table();

std::string report_to_json(const CheckReport& report);

}  // namespace sp4

#endif
