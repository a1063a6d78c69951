#ifndef SP4_PACKET_HPP
#define SP4_PACKET_HPP

#include <map>
#include <string>
#include <vector>

#include "sp4/rational.hpp"
#include "sp4/structure.hpp"

// Exact Fourier analysis on an elementary abelian 2-group: the pairing
// table between a packet and the group, forward transfers, the inversion
// back to member traces, and the sign-consistency report.

namespace sp4 {

/// (Z/2)^r for r in {0,1,2}: elements and characters are bitmasks, the
/// character table has exact +-1 entries chi_d(s) = (-1)^{popcount(d & s)}.
struct SGroup {
  int rank;

  explicit SGroup(int r);
  unsigned size() const { return 1u << rank; }
  int character(unsigned dual, unsigned element) const;
};

/// Finite packet paired with an SGroup: each member carries the dual mask
/// of its pairing character <s, pi>, a sign epsilon(pi), and an exact trace
/// value tr pi(f).
struct FourierPacket {
  SGroup group;
  struct Member {
    unsigned pairing_dual;  // <s, pi> = chi_{pairing_dual}(s)
    Rational trace;
    Rational epsilon;  // +-1
  };
  std::vector<Member> members;
  Rational c = Rational(1);  // the constant c(s), carried as data
  unsigned s0 = 0;           // distinguished group element for epsilon
  Rational report_tol = Rational(0);  // nonzero only for float-imported traces

  /// complete: one member per character, all characters distinct
  bool complete() const;
};

/// Sigma~_s = sum_pi <s, pi> tr pi, exact. Requires a complete packet.
Rational forward_transfer(const FourierPacket& p, unsigned s);

/// tr pi = (1/#S) sum_s <s, pi> Sigma~_s, exact; inverse of the forward
/// transfer on trace vectors.
std::vector<Rational> invert(const FourierPacket& p, const std::map<unsigned, Rational>& transfers);

struct EpsilonReport {
  bool passed;
  std::vector<std::string> failures;  // names the offending members
  Rational lhs, rhs;                  // the two sides of the stable identity
};

/// Checks epsilon(pi) = c(s0) <s0, pi> memberwise and the summed identity
/// sum_sigma tr sigma(f^H) = sum_pi epsilon(pi) tr pi(f), where the left
/// side is c(s0) Sigma~_{s0}.
EpsilonReport verify_epsilon_consistency(const FourierPacket& p);

/// JSON wire format:
/// {"group_rank": r, "pairing": [d0, d1, ...], "traces": ["p/q", ...],
///  "epsilon": [1, -1, ...], "c": "1", "s0": 0}
/// Trace entries may also be plain numbers; they are converted to their
/// exact dyadic rationals, and a "tol" field (e.g. "1/1000000") then bounds
/// the allowed discrepancy in the consistency report.
FourierPacket packet_from_json(const std::string& text);

/// Exact rational value of a float64 (every finite double is dyadic).
Rational dyadic_rational(double v);
std::string transfers_to_json(const FourierPacket& p);

/// Built-in demo packet used by the CLI.
FourierPacket demo_packet();

}  // namespace sp4

#endif
