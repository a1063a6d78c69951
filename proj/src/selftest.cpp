#include "sp4/selftest.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>

#include "sp4/characters.hpp"
#include "sp4/decompositions.hpp"
#include "sp4/endoscopy.hpp"
#include "sp4/exact_solve.hpp"
#include "sp4/orbital.hpp"
#include "sp4/packet.hpp"
#include "sp4/sampling.hpp"
#include "sp4/structure.hpp"
#include "sp4/symplectic.hpp"

// The acceptance suite: every criterion with its tolerances pinned here,
// runnable through the CLI (`sp4 selftest`) and the ctest acceptance binary.

namespace sp4 {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

QuadratureConfig orbital_cfg() {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-6;  // per panel; the 4-D nesting resolves far below this
  return cfg;
}

const std::vector<std::pair<std::pair<double, double>, double>>& oracle_pairs() {
  // ((a1, a2), support radius); diagonal norms sit comfortably inside
  static const std::vector<std::pair<std::pair<double, double>, double>> pairs = {
      {{2.0, 3.0}, 4.0},  {{1.5, 2.5}, 4.0},  {{2.0, 3.0}, 4.3},
      {{1.2, 2.0}, 3.6},  {{1.8, 2.2}, 3.9},
  };
  return pairs;
}

/// Fixed-lattice midpoint oracle in the raw unipotent chart (independent of
/// the library's rescaled chart and of adaptive quadrature).
double lattice_oracle(double a1, double a2, const TestFunction& f, int n) {
  const double R = f.radius;
  const double c1 = a1 - 1.0 / a1, cs = a2 - 1.0 / a1, c3 = a2 - 1.0 / a2, c4 = a1 - a2;
  const double r = a1 - 1.0 / a2;
  const double X4 = R / std::abs(c4), X3 = R / std::abs(c3);
  const double W2 = R / std::abs(cs), W1 = R / std::abs(c1);
  Mat4d gamma = split_torus<double>(a1, a2);
  const double h1 = 2.0 * W1 / n, h2 = 2.0 * W2 / n, h3 = 2.0 * X3 / n, h4 = 2.0 * X4 / n;
  double sum = 0.0;
  for (int i4 = 0; i4 < n; ++i4) {
    double x4 = -X4 + (i4 + 0.5) * h4;
    for (int i3 = 0; i3 < n; ++i3) {
      double x3 = -X3 + (i3 + 0.5) * h3;
      double m2 = c3 * x3 * x4 / cs;
      for (int i2 = 0; i2 < n; ++i2) {
        double x2 = m2 - W2 + (i2 + 0.5) * h2;
        double m1 = (x4 * (cs + r) * x2 - x4 * x4 * c3 * x3) / c1;
        for (int i1 = 0; i1 < n; ++i1) {
          double x1 = m1 - W1 + (i1 + 0.5) * h1;
          Mat4d u = unipotent<double>(x1, x2, x3, x4);
          Mat4d n2inv = unipotent<double>(0, 0, 0, -x4);
          Mat4d n1inv = Mat4d::Identity();
          n1inv(0, 2) = -x1;
          n1inv(0, 3) = -x2;
          n1inv(1, 2) = -x2;
          n1inv(1, 3) = -x3;
          sum += f(Mat4d(n2inv * n1inv * gamma * u));
        }
      }
    }
  }
  return sum * h1 * h2 * h3 * h4;
}

std::vector<double> log_grid() {
  std::vector<double> grid;
  for (int k = 0; k < 13; ++k) grid.push_back(0.1 * std::pow(10.0, -3.0 * k / 12.0));
  return grid;
}

CriterionResult criterion_structure(std::uint64_t) {
  CriterionResult out{1, "structure suite (exact)", true, ""};
  CheckReport report = verify_bracket_table();
  int failed = 0;
  for (const auto& e : report.entries)
    if (!e.passed) {
      ++failed;
      out.detail += e.name + " failed; ";
    }
  if (failed) out.passed = false;

  // Jacobi identity on all triples from the 10 real basis elements and the
  // 8 root vectors, exact gaussian arithmetic
  const auto& cat = catalog();
  std::vector<Mat4g> elems;
  for (const auto& b : cat.real_basis()) elems.push_back(to_gaussian(b));
  for (const Root& r : root_system()) elems.push_back(cat.root_vector(r.weight));
  long jacobi_failures = 0;
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b)
      for (std::size_t c = b + 1; c < elems.size(); ++c) {
        Mat4g j = commutator(Mat4g(commutator(elems[a], elems[b])), elems[c]) +
                  commutator(Mat4g(commutator(elems[b], elems[c])), elems[a]) +
                  commutator(Mat4g(commutator(elems[c], elems[a])), elems[b]);
        if (!is_exactly_zero(j)) ++jacobi_failures;
      }
  if (jacobi_failures) {
    out.passed = false;
    out.detail += std::to_string(jacobi_failures) + " Jacobi failures; ";
  }

  // root_decompose recovers every root with its integer eigenvalue pair
  for (const Root& r : root_system()) {
    for (int which = 0; which < 2; ++which) {
      Mat4g h = which == 0 ? cat.Z : cat.Hp;
      GaussianRational expect = root_pairing(
          r.weight, which == 0 ? GaussianRational(1) : GaussianRational(0),
          which == 0 ? GaussianRational(0) : GaussianRational(1));
      auto d = root_decompose(Mat4g(commutator(h, Mat4g(cat.root_vector(r.weight)))));
      bool ok = d.coeff_Z.is_zero() && d.coeff_Hp.is_zero();
      if (expect.is_zero()) {
        ok = ok && d.components.empty();
      } else {
        ok = ok && d.components.size() == 1 &&
             d.components.count({r.weight[0], r.weight[1]}) == 1 &&
             d.components.at({r.weight[0], r.weight[1]}) == expect;
      }
      if (!ok) {
        out.passed = false;
        out.detail += "root_decompose failed at (" + std::to_string(r.weight[0]) + "," +
                      std::to_string(r.weight[1]) + "); ";
      }
    }
  }

  // dimension count
  {
    MatX<GaussianRational> cols(16, 10);
    auto basis = cat.real_basis();
    for (int k = 0; k < 10; ++k) {
      Mat4g g = to_gaussian(basis[k]);
      for (int rr = 0; rr < 4; ++rr)
        for (int cc = 0; cc < 4; ++cc) cols(4 * rr + cc, k) = g(rr, cc);
    }
    if (exact_rank(cols) != 10) {
      out.passed = false;
      out.detail += "dim != 10; ";
    }
  }
  if (out.passed) out.detail = "bracket table, 816 Jacobi triples, 8 roots, dim 10";
  return out;
}

CriterionResult criterion_group_predicates(std::uint64_t seed) {
  CriterionResult out{2, "group predicates on random words", true, ""};
  Rng rng(seed ^ 0x1111);
  double worst = 0.0;
  Mat4d prev = Mat4d::Identity();
  for (int it = 0; it < 1000; ++it) {
    Mat4d g = random_symplectic(rng);
    worst = std::max(worst, symplectic_defect(g));
    worst = std::max(worst, symplectic_defect(Mat4d(g * prev)));
    Eigen::PartialPivLU<Mat4d> lu(g);
    worst = std::max(worst, symplectic_defect(Mat4d(lu.inverse())));
    prev = g;
  }
  out.passed = worst <= 1e-12;
  out.detail = "max defect " + fmt(worst) + " (tol 1e-12)";
  return out;
}

CriterionResult criterion_decompositions(std::uint64_t seed) {
  CriterionResult out{3, "iwasawa decomposition round trips", true, ""};
  Rng rng(seed ^ 0x2222);
  double worst_rt = 0.0, worst_k = 0.0, worst_inv = 0.0;
  for (int it = 0; it < 1000; ++it) {
    Mat4d g = random_symplectic(rng);
    IwasawaFactors f = iwasawa(g);
    worst_rt = std::max(worst_rt, iwasawa_residual(g, f));
    worst_k = std::max(worst_k, k_defect(f.k));
    if (it % 5 == 0) {
      Mat4d k0 = random_k(rng);
      IwasawaFactors fk = iwasawa(g * k0);
      worst_inv = std::max(worst_inv, (f.u - fk.u).cwiseAbs().maxCoeff());
      worst_inv = std::max(worst_inv, (f.a - fk.a).cwiseAbs().maxCoeff());
    }
  }
  out.passed = worst_rt <= 1e-11 && worst_k <= 1e-11 && worst_inv <= 1e-11;
  out.detail = "round trip " + fmt(worst_rt) + ", K defect " + fmt(worst_k) +
               ", left-K invariance " + fmt(worst_inv) + " (tol 1e-11)";
  return out;
}

CriterionResult criterion_endoscopy(std::uint64_t) {
  CriterionResult out{4, "endoscopy: centralizers and embeddings", true, ""};

  auto check = [&](bool ok, const std::string& what) {
    if (!ok) {
      out.passed = false;
      out.detail += what + " failed; ";
    }
  };

  check(centralizer_algebra(Mat4q(split_torus<Rational>(Rational(2), Rational(3)))).size() == 2,
        "hyperbolic centralizer dim 2");
  auto [c1, s1] = circle_point(Rational(1, 2));
  auto [c2, s2] = circle_point(Rational(1, 3));
  check(centralizer_algebra(torus_rotation_exact(c1, s1, c2, s2)).size() == 2,
        "elliptic centralizer dim 2");
  check(centralizer_algebra(Mat4q(Mat4q::Identity())).size() == 10, "identity centralizer dim 10");

  check(endoscopic_group_of(torus_rotation(0.3, 0.7)).kind == EndoscopicKind::torus,
        "distinct elliptic -> torus kind");
  check(endoscopic_group_of(to_float(split_torus<Rational>(Rational(2), Rational(3)))).kind ==
            EndoscopicKind::torus,
        "distinct hyperbolic -> torus kind");
  check(endoscopic_group_of(torus_rotation(0.4, 0.4)).kind == EndoscopicKind::sl2,
        "equal parameters -> sl2 kind");

  check(is_symplectic<Rational>(EndoscopicGroup::embed_torus_exact(c1, s1, c2, s2, false)),
        "exact torus embedding symplectic");
  check(is_symplectic<Rational>(
            EndoscopicGroup::embed_split_exact(Rational(5, 2), Rational(7, 3), true)),
        "exact split embedding symplectic");
  check(is_symplectic<Rational>(EndoscopicGroup::embed_sl2_exact(Rational(2), Rational(3),
                                                                 Rational(1), Rational(2), true)),
        "exact sl2 embedding symplectic");
  if (out.passed) out.detail = "centralizer dims 2/2/10; torus and sl2 kinds; exact embeddings";
  return out;
}

CriterionResult criterion_orbital(std::uint64_t seed) {
  CriterionResult out{5, "orbital integrals vs lattice oracle", true, ""};
  QuadratureConfig cfg = orbital_cfg();
  double worst_rel = 0.0;
  for (const auto& [params, radius] : oracle_pairs()) {
    TestFunction f(radius, 4);
    double q = orbital_hyperbolic(params.first, params.second, f, cfg).value;
    double o = lattice_oracle(params.first, params.second, f, 32);
    double rel = std::abs(q - o) / std::abs(o);
    worst_rel = std::max(worst_rel, rel);
  }
  if (worst_rel > 5e-4) {
    out.passed = false;
    out.detail += "oracle disagreement " + fmt(worst_rel) + "; ";
  }

  // linearity and K-conjugation invariance within 2 abs_tol
  TestFunction f1(4.0, 4), f2(4.1, 5);
  double v1 = orbital_hyperbolic(2.0, 3.0, f1, cfg).value;
  double v2 = orbital_hyperbolic(2.0, 3.0, f2, cfg).value;
  auto combo = [&](const Mat4d& g) { return 1.5 * f1(g) - 0.25 * f2(g); };
  double vc = orbital_hyperbolic(2.0, 3.0, combo, 4.1, cfg).value;
  if (std::abs(vc - (1.5 * v1 - 0.25 * v2)) > 2.0 * cfg.abs_tol) {
    out.passed = false;
    out.detail += "linearity violation " + fmt(std::abs(vc - (1.5 * v1 - 0.25 * v2))) + "; ";
  }
  Rng rng(seed ^ 0x5555);
  Mat4d k0 = random_k(rng);
  auto conj = [&](const Mat4d& g) { return f1(Mat4d(k0.transpose() * g * k0)); };
  double vk = orbital_hyperbolic(2.0, 3.0, conj, 4.0, cfg).value;
  if (std::abs(vk - v1) > 2.0 * cfg.abs_tol) {
    out.passed = false;
    out.detail += "conjugation-invariance violation " + fmt(std::abs(vk - v1)) + "; ";
  }

  // continuity diagnostic: adjacent jumps decrease monotonically on the
  // refinement a1 -> 1
  std::vector<std::pair<double, double>> seq = {
      {1.5, 3.0}, {1.25, 3.0}, {1.1, 3.0}, {1.05, 3.0}, {1.01, 3.0}};
  TransferTable table = smooth_transfer_hyperbolic(GroupFunction(f1), f1.radius, seq, cfg);
  for (std::size_t k = 0; k + 1 < table.adjacent_jumps.size(); ++k) {
    if (!(table.adjacent_jumps[k + 1] < table.adjacent_jumps[k])) {
      out.passed = false;
      out.detail += "jump sequence not decreasing at step " + std::to_string(k) + "; ";
    }
  }
  if (out.passed)
    out.detail = "5 oracle pairs within " + fmt(worst_rel) +
                 "; linearity, K-invariance, jumps decreasing";
  return out;
}

CriterionResult criterion_singular_expansion(std::uint64_t) {
  CriterionResult out{6, "singular expansion diagnostics", true, ""};
  TestFunction f(4.0, 4);
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-9;
  std::vector<double> grid = log_grid();

  SingularExpansion se = singular_expansion(f, grid, cfg);
  out.detail = "log-fit r2 = " + fmt(se.r2) + " (required >= 0.98)";
  if (!(se.r2 >= 0.98)) out.passed = false;

  // H evenness: both orientations of the defining formula agree
  double hmax = 1e-300, hres = 0.0;
  for (double l : grid) {
    double fp = orbital_elliptic_1d(l, f, cfg).value;
    double fm = orbital_elliptic_1d(-l, f, cfg).value;
    double hplus = l * (fp - fm);
    double hminus = (-l) * (fm - fp);
    hmax = std::max(hmax, std::abs(hplus));
    hres = std::max(hres, std::abs(hplus - hminus));
  }
  double rel = hres / std::max(hmax, 1e-12);
  out.detail += "; H evenness residual " + fmt(rel) + " (tol 1e-6)";
  if (rel > 1e-6) out.passed = false;
  return out;
}

CriterionResult criterion_characters(std::uint64_t) {
  CriterionResult out{7, "character identities", true, ""};

  // antisymmetry of the numerator under all 8 Weyl elements
  double worst = 0.0;
  for (const Weight& mu : {Weight(3, 1), Weight(5, -2)}) {
    for (const TorusElement& g : {TorusElement{0.3, 0.7}, TorusElement{-1.2, 2.1}}) {
      Complex base = weyl_numerator(mu, g, weyl_group());
      for (const WeylElement& w : weyl_group()) {
        Complex twisted = weyl_numerator(w.apply(mu), g, weyl_group());
        worst = std::max(worst, std::abs(twisted - static_cast<double>(w.det()) * base));
      }
    }
  }
  if (worst > 1e-13) {
    out.passed = false;
    out.detail += "antisymmetry defect " + fmt(worst) + "; ";
  }

  // trivial-kappa path equality
  HCParameter p(Weight(3, 1));
  TorusElement g{0.4, 1.3};
  Complex path1 = kappa_orbital(p, g, KappaCharacter(2, 0), WeylLabeling::standard());
  CharacterPacket packet;
  for (const WeylElement& w : even_weyl()) {
    Weight nu = w.apply(p.mu);
    packet.members.push_back(
        {[nu](const TorusElement& t) { return model_character(nu, t.inverse()); }, +1});
  }
  Complex path2 = stable_character_sum(packet, g);
  if (std::abs(path1 - path2) > 1e-12) {
    out.passed = false;
    out.detail += "kappa/stable mismatch " + fmt(std::abs(path1 - path2)) + "; ";
  }

  // sl2 character: formula vs trig path
  double worst_sl2 = 0.0;
  for (int n : {1, 2, 5})
    for (double th : {0.3, 1.0, 2.5})
      for (int sign : {+1, -1}) {
        Complex a = sl2_ds_character(n, th, sign);
        double s = std::sin(th);
        Complex b = sign > 0 ? Complex(-std::sin(n * th), std::cos(n * th)) / (2.0 * s)
                             : Complex(-std::sin(n * th), -std::cos(n * th)) / (2.0 * s);
        worst_sl2 = std::max(worst_sl2, std::abs(a - b));
      }
  if (worst_sl2 > 1e-14) {
    out.passed = false;
    out.detail += "sl2 two-path defect " + fmt(worst_sl2) + "; ";
  }
  if (out.passed)
    out.detail = "antisymmetry " + fmt(worst) + ", paths equal, sl2 " + fmt(worst_sl2);
  return out;
}

CriterionResult criterion_packet(std::uint64_t seed) {
  CriterionResult out{8, "packet Fourier analysis (exact)", true, ""};

  for (int rank : {0, 1, 2}) {
    SGroup grp(rank);
    for (unsigned d1 = 0; d1 < grp.size(); ++d1)
      for (unsigned d2 = 0; d2 < grp.size(); ++d2) {
        int sum = 0;
        for (unsigned s = 0; s < grp.size(); ++s)
          sum += grp.character(d1, s) * grp.character(d2, s);
        if (sum != (d1 == d2 ? static_cast<int>(grp.size()) : 0)) {
          out.passed = false;
          out.detail += "orthogonality failed; ";
        }
      }
  }

  Rng rng(seed ^ 0x8888);
  long mismatches = 0;
  for (int rank : {0, 1, 2}) {
    for (int it = 0; it < 1000; ++it) {
      FourierPacket p{SGroup(rank), {}, Rational(1), 0};
      for (unsigned d = 0; d < (1u << rank); ++d)
        p.members.push_back(
            {d, Rational(rng.uniform_int(-60, 60), rng.uniform_int(1, 40)), Rational(1)});
      std::map<unsigned, Rational> transfers;
      for (unsigned s = 0; s < p.group.size(); ++s) transfers[s] = forward_transfer(p, s);
      std::vector<Rational> traces = invert(p, transfers);
      for (std::size_t k = 0; k < traces.size(); ++k)
        if (!(traces[k] == p.members[k].trace)) ++mismatches;
    }
  }
  if (mismatches) {
    out.passed = false;
    out.detail += std::to_string(mismatches) + " round-trip mismatches; ";
  }

  // epsilon consistency: character-generated passes, corrupted member fails
  FourierPacket p{SGroup(2), {}, Rational(1), 2};
  Rng rng2(seed ^ 0x9999);
  for (unsigned d = 0; d < 4; ++d) {
    Rational t(rng2.uniform_int(-9, 9), rng2.uniform_int(1, 7));
    p.members.push_back({d, t, Rational(SGroup(2).character(d, 2))});
  }
  if (!verify_epsilon_consistency(p).passed) {
    out.passed = false;
    out.detail += "epsilon consistency failed on valid data; ";
  }
  p.members[1].epsilon = -p.members[1].epsilon;
  EpsilonReport corrupted = verify_epsilon_consistency(p);
  if (corrupted.passed ||
      corrupted.failures.empty() ||
      corrupted.failures[0].find("member 1") == std::string::npos) {
    out.passed = false;
    out.detail += "corrupted member not detected; ";
  }
  if (out.passed) out.detail = "orthogonality, 3000 exact round trips, epsilon report";
  return out;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int k = 1; k <= 8; ++k) out.push_back(run_criterion(k, seed));
  return out;
}

CriterionResult run_criterion(int number, std::uint64_t seed) {
  switch (number) {
    case 1: return criterion_structure(seed);
    case 2: return criterion_group_predicates(seed);
    case 3: return criterion_decompositions(seed);
    case 4: return criterion_endoscopy(seed);
    case 5: return criterion_orbital(seed);
    case 6: return criterion_singular_expansion(seed);
    case 7: return criterion_characters(seed);
    case 8: return criterion_packet(seed);
    default: throw std::invalid_argument("run_criterion: number must be 1..8");
  }
}

std::string criterion_line(const CriterionResult& r) {
  return "criterion " + std::to_string(r.number) + " [" + (r.passed ? "PASS" : "FAIL") + "] " +
         r.name + ": " + r.detail;
}

namespace {

nlohmann::json config_block(std::uint64_t seed) {
  nlohmann::json c;
  c["seed"] = seed;
  c["orbital_abs_tol"] = "1e-06";
  c["expansion_abs_tol"] = "1e-09";
  c["oracle_lattice_n"] = 32;
  return c;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
}

}  // namespace

void write_selftest_artifacts(const std::string& dir, std::uint64_t seed,
                              const std::vector<CriterionResult>& results) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  {
    nlohmann::json j;
    j["config"] = config_block(seed);
    j["report"] = nlohmann::json::parse(report_to_json(verify_bracket_table()));
    write_file(fs::path(dir) / "structure_report.json", j.dump(2) + "\n");
  }
  {
    nlohmann::json j;
    j["config"] = config_block(seed);
    j["criteria"] = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json e;
      e["number"] = r.number;
      e["name"] = r.name;
      e["passed"] = r.passed;
      e["detail"] = r.detail;
      j["criteria"].push_back(e);
    }
    write_file(fs::path(dir) / "acceptance_report.json", j.dump(2) + "\n");
  }
  {
    QuadratureConfig cfg = orbital_cfg();
    std::string csv = "# seed=" + std::to_string(seed) + " abs_tol=1e-06\n";
    csv += "a1,a2,radius,degree,value,err_est\n";
    for (const auto& [params, radius] : oracle_pairs()) {
      TestFunction f(radius, 4);
      QuadratureResult r = orbital_hyperbolic(params.first, params.second, f, cfg);
      csv += fmt(params.first) + "," + fmt(params.second) + "," + fmt(radius) + ",4," +
             fmt(r.value) + "," + fmt(r.err_est) + "\n";
    }
    write_file(fs::path(dir) / "orbital_table.csv", csv);
  }
  {
    TestFunction f(4.0, 4);
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-9;
    std::vector<double> grid = log_grid();
    SingularExpansion se = singular_expansion(f, grid, cfg);
    EvenOddParts eo = even_odd_parts(f, grid, cfg);
    std::string csv = "# seed=" + std::to_string(seed) + " radius=4 degree=4 abs_tol=1e-09\n";
    csv += "lambda,F,A,B,G,H\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
      csv += fmt(grid[k]) + "," + fmt(se.F[k]) + "," + fmt(se.a0 / grid[k]) + "," +
             fmt(se.B[k]) + "," + fmt(eo.G[k]) + "," + fmt(eo.H[k]) + "\n";
    }
    csv += "# a0=" + fmt(se.a0) + " log_fit_slope=" + fmt(se.slope) +
           " log_fit_intercept=" + fmt(se.intercept) + " r2=" + fmt(se.r2) + "\n";
    write_file(fs::path(dir) / "expansion_table.csv", csv);
  }
  {
    std::string csv = "# seed=" + std::to_string(seed) + "\n";
    csv += "theta1,theta2,m1,m2,numerator_re,numerator_im,kappa_orbital_re,kappa_orbital_im\n";
    WeylLabeling lab = WeylLabeling::standard();
    KappaCharacter kappa(2, 1);
    for (double th1 : {0.3, 0.9, 1.7}) {
      for (double th2 : {0.7, 2.1}) {
        TorusElement g{th1, th2};
        Weight mu(3, 1);
        Complex num = weyl_numerator(mu, g, weyl_group());
        Complex ko = kappa_orbital(HCParameter(mu), g, kappa, lab);
        csv += fmt(th1) + "," + fmt(th2) + ",3,1," + fmt(num.real()) + "," + fmt(num.imag()) +
               "," + fmt(ko.real()) + "," + fmt(ko.imag()) + "\n";
      }
    }
    write_file(fs::path(dir) / "characters_table.csv", csv);
  }
  {
    nlohmann::json j;
    j["config"] = config_block(seed);
    j["demo"] = nlohmann::json::parse(transfers_to_json(demo_packet()));
    write_file(fs::path(dir) / "packet_demo.json", j.dump(2) + "\n");
  }
  {
    Rng rng(seed ^ 0xABCD);
    Mat4d g = random_symplectic(rng);
    IwasawaFactors f = iwasawa(g);
    nlohmann::json j;
    j["config"] = config_block(seed);
    j["x"] = {fmt(f.x1), fmt(f.x2), fmt(f.x3), fmt(f.x4)};
    j["t"] = {fmt(f.t1), fmt(f.t2)};
    j["reconstruction_error"] = fmt(iwasawa_residual(g, f));
    j["k_defect"] = fmt(k_defect(f.k));
    write_file(fs::path(dir) / "decompose_sample.json", j.dump(2) + "\n");
  }
}

}  // namespace sp4
