#ifndef SP4_CHARACTERS_HPP
#define SP4_CHARACTERS_HPP

#include <complex>
#include <functional>
#include <vector>

#include "sp4/structure.hpp"
#include "sp4/types.hpp"

// Character machinery on the compact Cartan subgroup: Weyl-alternating
// numerators, the rank-one character convention, kappa-weighted orbital
// sums, the transfer coefficients a(w, nu), and stable sums over packets.

namespace sp4 {

using Complex = std::complex<double>;

/// Point r(th1) r(th2) of the compact Cartan subgroup.
struct TorusElement {
  double th1, th2;

  Mat4d matrix() const { return torus_rotation(th1, th2); }
  TorusElement inverse() const { return {-th1, -th2}; }
  /// e^{i (m1 th1 + m2 th2)}
  Complex character(const Weight& m) const;
};

/// Harish-Chandra-style parameter data: a regular weight with the shift
/// carried by the transfer construction.
struct HCParameter {
  Weight mu;             // regular: m1 != +-m2, both nonzero
  Weight xi;             // shift (character of the double cover data)
  Weight rho_h;          // endoscopic half-sum, kept as data
  Weight rho = Weight(2, -1);

  HCParameter(Weight mu_, Weight xi_ = Weight(0, 0), Weight rho_h_ = Weight(0, 0));

  /// rho - rho_h + xi: the character shift entering every exponent of the
  /// transfer identities; never materialized as a covering-group object.
  Weight transfer_shift() const { return rho - rho_h + xi; }
};

bool is_regular(const Weight& mu);

/// +-1 character of an elementary abelian 2-group (Z/2)^r, r <= 2,
/// evaluated as s -> (-1)^{popcount(dual & s)}.
struct KappaCharacter {
  int rank;            // r in {0, 1, 2}
  unsigned dual_mask;  // < 2^rank

  KappaCharacter(int r, unsigned dual);
  int operator()(unsigned element) const;
  bool trivial() const { return dual_mask == 0; }
};

/// The four even-sign (det = +1) Weyl elements, fixed order with the
/// identity first.
const std::vector<WeylElement>& even_weyl();

/// Labeling of the even-sign Weyl elements by elements of the kappa-domain
/// group; configuration data, not derived. Must cover all four.
struct WeylLabeling {
  std::vector<unsigned> labels;  // one per even_weyl() entry

  static WeylLabeling standard();  // e->00, rot->10, -1->11, rot^3->01
  unsigned of(const WeylElement& w) const;
  void validate(const KappaCharacter& kappa) const;
};

/// sum_{w in subset} det(w) e^{i <w mu, theta>}
Complex weyl_numerator(const Weight& mu, const TorusElement& gamma,
                       const std::vector<WeylElement>& subset);

/// prod_{alpha > 0} (e^{i<alpha,theta>/2} - e^{-i<alpha,theta>/2}); the
/// half-angles multiply out to a 2 pi - periodic function since rho is
/// integral.
Complex weyl_denominator(const TorusElement& gamma);

/// Two-term quotient character model on the compact torus:
///   Theta_nu(gamma) = - (e^{i<nu,theta>} - e^{i<s nu,theta>}) / denominator
/// with s the compact-root reflection (coordinate swap). This is the
/// normalization every downstream identity is tested against.
Complex model_character(const Weight& nu, const TorusElement& gamma);

/// Rank-one character convention: Theta_n^{+-}(r(th)) =
/// -+ e^{+- i n th} / (e^{i th} - e^{-i th}), th not in pi Z.
Complex sl2_ds_character(int n, double theta, int sign);

/// kappa-weighted character sum over the even-sign Weyl orbit:
///   sum_{det w = 1} kappa(label(w)) Theta_{w mu}(gamma^{-1}).
Complex kappa_orbital(const HCParameter& p, const TorusElement& gamma,
                      const KappaCharacter& kappa, const WeylLabeling& labeling);

/// a(w1, w2) = kappa(w2) kappa(w2 w1)^{-1}, both arguments even-sign.
int transfer_coefficient(const WeylElement& w1, const WeylElement& w2,
                         const KappaCharacter& kappa, const WeylLabeling& labeling);

struct TransferCoefficientRow {
  WeylElement w;
  Weight nu;  // w mu + xi
  int a;      // coefficient, +-1
};

/// One row per even-sign w: nu = w mu + xi with a(w, nu) evaluated at
/// w2 = e (so a = kappa(w)); the full two-argument coefficient satisfies
/// the cocycle identity, which the tests exercise on all pairs.
std::vector<TransferCoefficientRow> transfer_table(const HCParameter& p,
                                                   const KappaCharacter& kappa,
                                                   const WeylLabeling& labeling);

/// Finite packet with per-member character evaluators and signs.
struct CharacterPacket {
  struct Member {
    std::function<Complex(const TorusElement&)> character;
    int sign;  // kappa(pi) in {+1, -1}
  };
  std::vector<Member> members;
};

/// sum_pi kappa(pi) Theta_pi(gamma)
Complex stable_character_sum(const CharacterPacket& packet, const TorusElement& gamma);

}  // namespace sp4

#endif
