#include <doctest.h>

#include "sp4/characters.hpp"
#include "sp4/packet.hpp"
#include "sp4/sampling.hpp"

using namespace sp4;

namespace {

FourierPacket random_packet(Rng& rng, int rank) {
  FourierPacket p{SGroup(rank), {}, Rational(1), 0};
  for (unsigned d = 0; d < (1u << rank); ++d) {
    FourierPacket::Member m;
    m.pairing_dual = d;
    m.trace = Rational(rng.uniform_int(-50, 50), rng.uniform_int(1, 30));
    m.epsilon = Rational(1);
    p.members.push_back(m);
  }
  return p;
}

}  // namespace

TEST_CASE("character table orthogonality, exact, all ranks") {
  for (int rank : {0, 1, 2}) {
    SGroup g(rank);
    for (unsigned d1 = 0; d1 < g.size(); ++d1)
      for (unsigned d2 = 0; d2 < g.size(); ++d2) {
        int sum = 0;
        for (unsigned s = 0; s < g.size(); ++s) sum += g.character(d1, s) * g.character(d2, s);
        CHECK(sum == (d1 == d2 ? static_cast<int>(g.size()) : 0));
      }
  }
  CHECK_THROWS_AS(SGroup(3), std::invalid_argument);
}

TEST_CASE("forward transfer: closed cases") {
  // all traces equal t, s = identity: N * t
  FourierPacket p{SGroup(2), {}, Rational(1), 0};
  for (unsigned d = 0; d < 4; ++d) p.members.push_back({d, Rational(7, 5), Rational(1)});
  CHECK(forward_transfer(p, 0) == Rational(28, 5));

  // traces = (1,0,0,0): the transfer picks out <s, pi_1>
  FourierPacket q{SGroup(2), {}, Rational(1), 0};
  q.members.push_back({1u, Rational(1), Rational(1)});
  q.members.push_back({0u, Rational(0), Rational(1)});
  q.members.push_back({2u, Rational(0), Rational(1)});
  q.members.push_back({3u, Rational(0), Rational(1)});
  for (unsigned s = 0; s < 4; ++s)
    CHECK(forward_transfer(q, s) == Rational(q.group.character(1u, s)));

  // random rational traces match a direct 4-term sum
  Rng rng(100);
  FourierPacket r = random_packet(rng, 2);
  for (unsigned s = 0; s < 4; ++s) {
    Rational direct(0);
    for (const auto& m : r.members)
      direct += Rational(r.group.character(m.pairing_dual, s)) * m.trace;
    CHECK(forward_transfer(r, s) == direct);
  }

  // incomplete packet is rejected
  FourierPacket incomplete{SGroup(2), {{0u, Rational(1), Rational(1)}}, Rational(1), 0};
  CHECK_THROWS_AS(forward_transfer(incomplete, 0), std::invalid_argument);
}

TEST_CASE("round trip is bit-exact on random packets, all ranks") {
  Rng rng(2718);
  for (int rank : {0, 1, 2}) {
    for (int it = 0; it < 1000; ++it) {
      FourierPacket p = random_packet(rng, rank);
      std::map<unsigned, Rational> transfers;
      for (unsigned s = 0; s < p.group.size(); ++s) transfers[s] = forward_transfer(p, s);
      std::vector<Rational> traces = invert(p, transfers);
      REQUIRE(traces.size() == p.members.size());
      for (std::size_t k = 0; k < traces.size(); ++k) CHECK(traces[k] == p.members[k].trace);
    }
  }

  // all-zero transfers invert to all-zero traces
  FourierPacket p = random_packet(rng, 2);
  std::map<unsigned, Rational> zeros = {{0u, Rational(0)}, {1u, Rational(0)},
                                        {2u, Rational(0)}, {3u, Rational(0)}};
  for (const Rational& t : invert(p, zeros)) CHECK(t.is_zero());

  // rank 0: inversion is the identity
  FourierPacket p0 = random_packet(rng, 0);
  std::map<unsigned, Rational> t0 = {{0u, forward_transfer(p0, 0)}};
  CHECK(invert(p0, t0)[0] == p0.members[0].trace);

  std::map<unsigned, Rational> missing = {{0u, Rational(1)}};
  CHECK_THROWS_AS(invert(p, missing), std::invalid_argument);
}

TEST_CASE("epsilon consistency: character-generated passes, corruption is named") {
  Rng rng(33);
  FourierPacket p = random_packet(rng, 2);
  p.s0 = 2;
  for (auto& m : p.members) m.epsilon = Rational(p.group.character(m.pairing_dual, p.s0));
  EpsilonReport rep = verify_epsilon_consistency(p);
  CHECK(rep.passed);
  CHECK(rep.lhs == rep.rhs);

  // epsilon identically +1 with s0 = 0: both sides are plain sums
  FourierPacket q = random_packet(rng, 1);
  EpsilonReport rq = verify_epsilon_consistency(q);
  CHECK(rq.passed);

  // corrupt one member: the report fails and names it
  p.members[2].epsilon = -p.members[2].epsilon;
  EpsilonReport bad = verify_epsilon_consistency(p);
  CHECK_FALSE(bad.passed);
  REQUIRE(!bad.failures.empty());
  CHECK(bad.failures[0].find("member 2") != std::string::npos);
}

TEST_CASE("kappa sums reduce to forward transfers on synthetic data") {
  // members indexed by the even Weyl elements through the standard
  // labeling; kappa = <s, .> turns the kappa-weighted sum into the
  // transfer at s
  Rng rng(55);
  WeylLabeling lab = WeylLabeling::standard();
  for (unsigned s = 0; s < 4; ++s) {
    FourierPacket p{SGroup(2), {}, Rational(1), 0};
    std::vector<Rational> traces;
    for (std::size_t k = 0; k < even_weyl().size(); ++k) {
      Rational t(rng.uniform_int(-20, 20), rng.uniform_int(1, 9));
      traces.push_back(t);
      p.members.push_back({lab.labels[k], t, Rational(1)});
    }
    KappaCharacter kappa(2, s);
    Rational kappa_sum(0);
    for (std::size_t k = 0; k < even_weyl().size(); ++k)
      kappa_sum += Rational(kappa(lab.labels[k])) * traces[k];
    CHECK(kappa_sum == forward_transfer(p, s));
  }
}

TEST_CASE("transfer coefficients reproduce packet sums on synthetic traces") {
  // sum_w a(w, nu) t_w with w2 = e reduces to the kappa-weighted sum, i.e.
  // a forward transfer when members are indexed by their labels
  Rng rng(77);
  WeylLabeling lab = WeylLabeling::standard();
  KappaCharacter kappa(2, 3);
  HCParameter p(Weight(3, 1), Weight(1, -1));

  std::vector<Rational> traces;
  FourierPacket fp{SGroup(2), {}, Rational(1), 0};
  for (std::size_t k = 0; k < even_weyl().size(); ++k) {
    Rational t(rng.uniform_int(-15, 15), rng.uniform_int(1, 6));
    traces.push_back(t);
    fp.members.push_back({lab.labels[k], t, Rational(1)});
  }

  auto rows = transfer_table(p, kappa, lab);
  Rational coeff_sum(0);
  for (std::size_t k = 0; k < rows.size(); ++k) coeff_sum += Rational(rows[k].a) * traces[k];
  CHECK(coeff_sum == forward_transfer(fp, 3u));  // kappa = <3, .>
}

TEST_CASE("float trace import converts exactly and gates the report") {
  CHECK(dyadic_rational(0.5) == Rational(1, 2));
  CHECK(dyadic_rational(-0.375) == Rational(-3, 8));
  CHECK(dyadic_rational(3.0) == Rational(3));
  CHECK(dyadic_rational(0.1).to_double() == 0.1);  // exact dyadic of the double

  std::string with_floats = R"({"group_rank": 1, "pairing": [0, 1],
                                "traces": [0.5, -0.25], "tol": "1/1000000"})";
  FourierPacket p = packet_from_json(with_floats);
  CHECK(p.members[0].trace == Rational(1, 2));
  CHECK(forward_transfer(p, 1) == Rational(3, 4));
  CHECK(verify_epsilon_consistency(p).passed);

  // float import without an explicit report tolerance is rejected
  std::string no_tol = R"({"group_rank": 1, "pairing": [0, 1], "traces": [0.5, -0.25]})";
  CHECK_THROWS_AS(packet_from_json(no_tol), std::invalid_argument);
}

TEST_CASE("packet json round trip and demo") {
  FourierPacket p = demo_packet();
  CHECK(p.complete());
  std::string out = transfers_to_json(p);
  CHECK(out.find("\"round_trip_exact\": true") != std::string::npos);
  CHECK(out.find("\"epsilon_consistent\": true") != std::string::npos);

  std::string input = R"({"group_rank": 1, "pairing": [0, 1],
                          "traces": ["2/3", "-1/5"], "epsilon": [1, 1],
                          "c": "1", "s0": 0})";
  FourierPacket q = packet_from_json(input);
  CHECK(q.group.rank == 1);
  CHECK(q.members[1].trace == Rational(-1, 5));
  CHECK(forward_transfer(q, 1) == Rational(2, 3) + Rational(1, 5));
}
