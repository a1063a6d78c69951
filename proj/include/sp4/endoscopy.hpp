#ifndef SP4_ENDOSCOPY_HPP
#define SP4_ENDOSCOPY_HPP

#include <string>
#include <vector>

#include "sp4/types.hpp"

// Conjugacy-type classification of group elements, exact centralizer
// subalgebras, and the two nontrivial endoscopic groups with explicit
// symplectic embeddings.

namespace sp4 {

enum class ConjugacyTag { elliptic, hyperbolic, parabolic, mixed, singular };

std::string to_string(ConjugacyTag tag);

/// Classification data; params holds (a1, a2) for hyperbolic (|a_i| > 1
/// representatives, ascending) and (th1, th2) for elliptic (0 < th < pi,
/// ascending).
struct ConjugacyType {
  ConjugacyTag tag;
  std::vector<double> params;
  bool regular = false;  // distinct parameters, away from the singular set
};

/// Tag from the eigenvalue structure: unit-circle semisimple -> elliptic,
/// real off +-1 semisimple -> hyperbolic, nontrivial Jordan block ->
/// parabolic, +-1 semisimple spectrum -> singular, anything else -> mixed.
/// Eigenvalues closer than 1e-8 are treated as equal.
ConjugacyType classify(const Mat4d& gamma, double tol = 1e-12);

/// Exact basis of { X in sp(4) : X gamma = gamma X } for a rational gamma.
std::vector<Mat4q> centralizer_algebra(const Mat4q& gamma);
/// Same over the complexified algebra for gaussian-rational gamma.
std::vector<Mat4g> centralizer_algebra(const Mat4g& gamma);

enum class EndoscopicKind { torus, sl2, full };

std::string to_string(EndoscopicKind kind);

/// One of the two nontrivial endoscopic groups (or the full group).
///
/// torus: S^1 x S^1 x {+-1}. For an elliptic gamma the embedding is the
/// rotation pair +-r(th1) r(th2); for a hyperbolic gamma the split form
/// +-diag(t1, t2, 1/t1, 1/t2). Either family commutes elementwise with its
/// defining element: when gamma is away from standard position the family
/// is conjugated by a symplectic frame built from gamma's eigenplanes.
///
/// sl2: SL(2,R) x {+-1}, embedded in the symplectic coordinate plane
/// (e2, e4) with the (e1, e3) plane fixed.
struct EndoscopicGroup {
  EndoscopicKind kind;
  ConjugacyTag source;                   // which case produced it
  Mat4d frame = Mat4d::Identity();       // symplectic change of basis
  Mat4d frame_inv = Mat4d::Identity();

  /// torus kind: parameters are the two circle angles / split coordinates.
  Mat4d embed_torus(double p1, double p2, bool plus) const;

  // standard-frame exact families (these are the matrices of the displayed
  // classification, used when exact membership certificates are wanted)
  static Mat4q embed_torus_exact(const Rational& c1, const Rational& s1, const Rational& c2,
                                 const Rational& s2, bool plus);
  static Mat4q embed_split_exact(const Rational& t1, const Rational& t2, bool plus);

  /// sl2 kind: (a b; c d) with ad - bc = 1.
  Mat4d embed_sl2(double a, double b, double c, double d, bool plus) const;
  static Mat4q embed_sl2_exact(const Rational& a, const Rational& b, const Rational& c,
                               const Rational& d, bool plus);
};

/// Endoscopic group attached to a regular elliptic or hyperbolic element:
/// distinct parameters give the torus kind, equal parameters the sl2 kind.
EndoscopicGroup endoscopic_group_of(const Mat4d& gamma, double tol = 1e-12);

}  // namespace sp4

#endif
