#include "sp4/packet.hpp"

#include <bit>
#include <cmath>
#include <json.hpp>
#include <set>
#include <stdexcept>

namespace sp4 {

SGroup::SGroup(int r) : rank(r) {
  if (r < 0 || r > 2) throw std::invalid_argument("SGroup: rank must be 0, 1 or 2");
}

int SGroup::character(unsigned dual, unsigned element) const {
  if (dual >= size() || element >= size())
    throw std::invalid_argument("SGroup: index out of range");
  return std::popcount(dual & element) % 2 == 0 ? 1 : -1;
}

bool FourierPacket::complete() const {
  if (members.size() != group.size()) return false;
  std::set<unsigned> duals;
  for (const auto& m : members) {
    if (m.pairing_dual >= group.size()) return false;
    duals.insert(m.pairing_dual);
  }
  return duals.size() == members.size();
}

Rational forward_transfer(const FourierPacket& p, unsigned s) {
  if (!p.complete()) throw std::invalid_argument("forward_transfer: incomplete packet");
  if (s >= p.group.size()) throw std::invalid_argument("forward_transfer: no such element");
  Rational sum(0);
  for (const auto& m : p.members) sum += Rational(p.group.character(m.pairing_dual, s)) * m.trace;
  return sum;
}

std::vector<Rational> invert(const FourierPacket& p,
                             const std::map<unsigned, Rational>& transfers) {
  if (!p.complete()) throw std::invalid_argument("invert: incomplete packet");
  for (unsigned s = 0; s < p.group.size(); ++s)
    if (!transfers.count(s)) throw std::invalid_argument("invert: missing transfer value");
  std::vector<Rational> traces;
  const Rational scale(1, static_cast<std::int64_t>(p.group.size()));
  for (const auto& m : p.members) {
    Rational sum(0);
    for (unsigned s = 0; s < p.group.size(); ++s)
      sum += Rational(p.group.character(m.pairing_dual, s)) * transfers.at(s);
    traces.push_back(scale * sum);
  }
  return traces;
}

EpsilonReport verify_epsilon_consistency(const FourierPacket& p) {
  EpsilonReport report;
  report.passed = true;
  if (!p.complete()) {
    report.passed = false;
    report.failures.push_back("packet incomplete");
    return report;
  }
  for (std::size_t k = 0; k < p.members.size(); ++k) {
    const auto& m = p.members[k];
    Rational expect = p.c * Rational(p.group.character(m.pairing_dual, p.s0));
    if (m.epsilon != expect) {
      report.passed = false;
      report.failures.push_back("member " + std::to_string(k) + ": epsilon " +
                                m.epsilon.to_string() + " != c(s0) <s0,pi> = " +
                                expect.to_string());
    }
  }
  // summed identity: c(s0) Sigma~_{s0} = sum_pi epsilon(pi) tr pi
  report.lhs = p.c * forward_transfer(p, p.s0);
  report.rhs = Rational(0);
  for (const auto& m : p.members) report.rhs += m.epsilon * m.trace;
  Rational gap = (report.lhs - report.rhs).abs();
  if (gap > p.report_tol) {
    report.passed = false;
    report.failures.push_back("stable identity: " + report.lhs.to_string() +
                              " != " + report.rhs.to_string());
  }
  return report;
}

FourierPacket packet_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FourierPacket p{SGroup(j.at("group_rank").get<int>()), {}, Rational(1), 0};
  const auto& pairing = j.at("pairing");
  const auto& traces = j.at("traces");
  if (pairing.size() != traces.size())
    throw std::invalid_argument("packet_from_json: pairing/traces size mismatch");
  bool float_import = false;
  for (std::size_t k = 0; k < pairing.size(); ++k) {
    FourierPacket::Member m;
    m.pairing_dual = pairing[k].get<unsigned>();
    if (traces[k].is_string()) {
      m.trace = Rational::parse(traces[k].get<std::string>());
    } else {
      m.trace = dyadic_rational(traces[k].get<double>());
      float_import = true;
    }
    m.epsilon = Rational(1);
    p.members.push_back(m);
  }
  if (j.contains("epsilon")) {
    const auto& eps = j["epsilon"];
    if (eps.size() != p.members.size())
      throw std::invalid_argument("packet_from_json: epsilon size mismatch");
    for (std::size_t k = 0; k < p.members.size(); ++k)
      p.members[k].epsilon = Rational(eps[k].get<int>());
  }
  if (j.contains("c")) p.c = Rational::parse(j["c"].get<std::string>());
  if (j.contains("s0")) p.s0 = j["s0"].get<unsigned>();
  if (j.contains("tol")) p.report_tol = Rational::parse(j["tol"].get<std::string>());
  if (float_import && p.report_tol.is_zero())
    throw std::invalid_argument(
        "packet_from_json: float trace import needs an explicit \"tol\" for the report");
  return p;
}

Rational dyadic_rational(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("dyadic_rational: non-finite value");
  if (v == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(v, &exp);  // v = m * 2^exp, |m| in [1/2, 1)
  auto mantissa = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  Rational out(mantissa);
  BigInt two(2);
  BigInt pow(1);
  for (int k = 0; k < std::abs(exp); ++k) pow = pow * two;
  return exp >= 0 ? out * Rational(pow, BigInt(1)) : out * Rational(BigInt(1), pow);
}

std::string transfers_to_json(const FourierPacket& p) {
  nlohmann::json j;
  j["group_rank"] = p.group.rank;
  j["transfers"] = nlohmann::json::array();
  std::map<unsigned, Rational> transfers;
  for (unsigned s = 0; s < p.group.size(); ++s) {
    Rational t = forward_transfer(p, s);
    transfers[s] = t;
    j["transfers"].push_back(t.to_string());
  }
  j["inverted_traces"] = nlohmann::json::array();
  for (const Rational& t : invert(p, transfers)) j["inverted_traces"].push_back(t.to_string());
  j["round_trip_exact"] = true;
  for (std::size_t k = 0; k < p.members.size(); ++k) {
    if (invert(p, transfers)[k] != p.members[k].trace) j["round_trip_exact"] = false;
  }
  EpsilonReport rep = verify_epsilon_consistency(p);
  j["epsilon_consistent"] = rep.passed;
  j["epsilon_failures"] = rep.failures;
  return j.dump(2);
}

FourierPacket demo_packet() {
  FourierPacket p{SGroup(2), {}, Rational(1), 0};
  p.members.push_back({0u, Rational(5, 3), Rational(1)});
  p.members.push_back({1u, Rational(-2, 7), Rational(1)});
  p.members.push_back({2u, Rational(11, 4), Rational(1)});
  p.members.push_back({3u, Rational(1, 2), Rational(1)});
  return p;
}

}  // namespace sp4
