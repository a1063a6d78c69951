// Command-line front end: structure verification, decompositions,
// conjugacy/endoscopy classification, orbital integrals and their
// expansions, character evaluations, packet Fourier analysis, and the
// acceptance selftest.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "sp4/characters.hpp"
#include "sp4/decompositions.hpp"
#include "sp4/endoscopy.hpp"
#include "sp4/exact_matrix.hpp"
#include "sp4/orbital.hpp"
#include "sp4/packet.hpp"
#include "sp4/quadrature.hpp"
#include "sp4/selftest.hpp"
#include "sp4/structure.hpp"
#include "sp4/symplectic.hpp"

namespace {

using namespace sp4;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << content;
  if (content.empty() || content.back() != '\n') f << "\n";
}

int cmd_verify_structure(const std::string& out_path) {
  CheckReport report = verify_bracket_table();
  emit(out_path, report_to_json(report));
  return report.all_passed() ? 0 : 1;
}

int cmd_decompose(const std::string& in_path, const std::string& out_path, double tol) {
  ExactMatrix m = matrix_from_json(read_input(in_path));
  Mat4d g = m.promoted_to(ScalarMode::float64).float64();
  IwasawaFactors f = iwasawa(g, tol);
  PolarFactors pf = polar(g, tol);
  nlohmann::json j;
  j["config"] = {{"tol", fmt(tol)}};
  j["iwasawa"]["x"] = {fmt(f.x1), fmt(f.x2), fmt(f.x3), fmt(f.x4)};
  j["iwasawa"]["t"] = {fmt(f.t1), fmt(f.t2)};
  j["iwasawa"]["u"] = nlohmann::json::parse(to_json(ExactMatrix(f.u)));
  j["iwasawa"]["a"] = nlohmann::json::parse(to_json(ExactMatrix(f.a)));
  j["iwasawa"]["k"] = nlohmann::json::parse(to_json(ExactMatrix(f.k)));
  j["iwasawa"]["reconstruction_error"] = fmt(iwasawa_residual(g, f));
  j["iwasawa"]["k_defect"] = fmt(k_defect(f.k));
  j["polar"]["k1"] = nlohmann::json::parse(to_json(ExactMatrix(pf.k1)));
  j["polar"]["p"] = nlohmann::json::parse(to_json(ExactMatrix(pf.p)));
  j["polar"]["reconstruction_error"] = fmt((pf.k1 * pf.p - g).cwiseAbs().maxCoeff());
  emit(out_path, j.dump(2));
  return 0;
}

int cmd_endoscopy(const std::string& in_path, const std::string& out_path, double tol) {
  ExactMatrix m = matrix_from_json(read_input(in_path));
  nlohmann::json j;
  j["config"] = {{"tol", fmt(tol)}};
  Mat4d g = m.promoted_to(ScalarMode::float64).float64();
  ConjugacyType type = classify(g, tol);
  j["type"] = to_string(type.tag);
  j["params"] = type.params;
  j["regular"] = type.regular;
  if (m.mode() == ScalarMode::rational) {
    j["centralizer_dim"] = centralizer_algebra(m.rational()).size();
  }
  try {
    EndoscopicGroup e = endoscopic_group_of(g, tol);
    j["endoscopic_kind"] = to_string(e.kind);
  } catch (const std::exception& ex) {
    j["endoscopic_kind"] = nullptr;
    j["endoscopic_error"] = ex.what();
  }
  emit(out_path, j.dump(2));
  return 0;
}

struct OrbitalArgs {
  std::string type = "hyp";
  double a1 = 2.0, a2 = 3.0, lambda = 0.5;
  std::string profile = "4,4";
  double tol = 1e-6;
  std::string out;
};

TestFunction parse_profile(const std::string& text) {
  auto comma = text.find(",");
  if (comma == std::string::npos)
    throw std::runtime_error("profile must be R,m (support radius, degree)");
  return TestFunction(std::stod(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
}

int cmd_orbital(const OrbitalArgs& args) {
  TestFunction f = parse_profile(args.profile);
  QuadratureConfig cfg;
  cfg.abs_tol = args.tol;
  std::string csv = "# abs_tol=" + fmt(args.tol) + "\n";
  if (args.type == "hyp") {
    QuadratureResult r = orbital_hyperbolic(args.a1, args.a2, f, cfg);
    TransferFactor d = transfer_factor_hyperbolic(args.a1, args.a2);
    csv += "type,a1,a2,radius,degree,value,err_est,transfer_factor,normalized\n";
    csv += "hyp," + fmt(args.a1) + "," + fmt(args.a2) + "," + fmt(f.radius) + "," +
           std::to_string(f.degree) + "," + fmt(r.value) + "," + fmt(r.err_est) + "," +
           fmt(d.value.real()) + "," + fmt(d.value.real() * r.value) + "\n";
  } else {
    QuadratureResult r = orbital_elliptic_1d(args.lambda, f, cfg);
    csv += "type,lambda,radius,degree,value,err_est\n";
    csv += "ell," + fmt(args.lambda) + "," + fmt(f.radius) + "," + std::to_string(f.degree) +
           "," + fmt(r.value) + "," + fmt(r.err_est) + "\n";
  }
  emit(args.out, csv);
  return 0;
}

int cmd_expansion(const std::string& profile, double lambda_max, double lambda_min, int points,
                  double tol, const std::string& out_path) {
  TestFunction f = parse_profile(profile);
  QuadratureConfig cfg;
  cfg.abs_tol = tol;
  std::vector<double> grid;
  for (int k = 0; k < points; ++k)
    grid.push_back(lambda_max *
                   std::pow(lambda_min / lambda_max, static_cast<double>(k) / (points - 1)));
  SingularExpansion se = singular_expansion(f, grid, cfg);
  EvenOddParts eo = even_odd_parts(f, grid, cfg);
  std::string csv = "# radius=" + fmt(f.radius) + " degree=" + std::to_string(f.degree) +
                    " abs_tol=" + fmt(tol) + "\n";
  csv += "lambda,F,A,B,G,H\n";
  for (std::size_t k = 0; k < grid.size(); ++k)
    csv += fmt(grid[k]) + "," + fmt(se.F[k]) + "," + fmt(se.a0 / grid[k]) + "," + fmt(se.B[k]) +
           "," + fmt(eo.G[k]) + "," + fmt(eo.H[k]) + "\n";
  csv += "# a0=" + fmt(se.a0) + " log_fit_slope=" + fmt(se.slope) + " r2=" + fmt(se.r2) + "\n";
  emit(out_path, csv);
  return 0;
}

int cmd_characters(const std::string& op, int m1, int m2, int n, int points,
                   const std::string& out_path) {
  std::string csv = "# op=" + op + " points=" + std::to_string(points) + "\n";
  if (op == "numerator") {
    csv += "theta1,theta2,m1,m2,value_re,value_im\n";
    for (int i = 1; i <= points; ++i)
      for (int j = 1; j <= points; ++j) {
        TorusElement g{i * 2.8 / points, j * 2.8 / points};
        Complex v = weyl_numerator(Weight(m1, m2), g, weyl_group());
        csv += fmt(g.th1) + "," + fmt(g.th2) + "," + std::to_string(m1) + "," +
               std::to_string(m2) + "," + fmt(v.real()) + "," + fmt(v.imag()) + "\n";
      }
  } else if (op == "sl2") {
    csv += "n,theta,plus_re,plus_im,minus_re,minus_im,stable_re,stable_im\n";
    for (int i = 1; i <= points; ++i) {
      double th = i * 3.0 / (points + 1);
      Complex p = sl2_ds_character(n, th, +1);
      Complex m = sl2_ds_character(n, th, -1);
      csv += std::to_string(n) + "," + fmt(th) + "," + fmt(p.real()) + "," + fmt(p.imag()) +
             "," + fmt(m.real()) + "," + fmt(m.imag()) + "," + fmt((p + m).real()) + "," +
             fmt((p + m).imag()) + "\n";
    }
  } else if (op == "stable") {
    csv += "theta1,theta2,m1,m2,kappa_trivial_re,kappa_trivial_im\n";
    WeylLabeling lab = WeylLabeling::standard();
    KappaCharacter trivial(2, 0);
    for (int i = 1; i <= points; ++i)
      for (int j = 1; j <= points; ++j) {
        TorusElement g{i * 2.8 / points, j * 2.8 / points + 0.05};
        Complex v = kappa_orbital(HCParameter(Weight(m1, m2)), g, trivial, lab);
        csv += fmt(g.th1) + "," + fmt(g.th2) + "," + std::to_string(m1) + "," +
               std::to_string(m2) + "," + fmt(v.real()) + "," + fmt(v.imag()) + "\n";
      }
  } else {
    throw std::runtime_error("characters --op must be numerator, sl2 or stable");
  }
  emit(out_path, csv);
  return 0;
}

int cmd_packet(const std::string& in_path, bool demo, const std::string& out_path) {
  FourierPacket p = demo ? demo_packet() : packet_from_json(read_input(in_path));
  emit(out_path, transfers_to_json(p));
  EpsilonReport rep = verify_epsilon_consistency(p);
  return rep.passed ? 0 : 1;
}

int cmd_selftest(std::uint64_t seed, const std::string& out_dir, bool core_only,
                 const std::string& self_path) {
  std::vector<CriterionResult> results = run_acceptance(seed);
  for (const auto& r : results) std::cout << criterion_line(r) << "\n";
  if (!out_dir.empty()) write_selftest_artifacts(out_dir, seed, results);

  bool all = true;
  for (const auto& r : results) all = all && r.passed;

  if (!core_only) {
    // criterion 9: two artifact sets from the same seed must be
    // byte-identical
    namespace fs = std::filesystem;
    fs::path base = fs::temp_directory_path() / ("sp4-selftest-" + std::to_string(seed));
    fs::path d1 = base / "run1", d2 = base / "run2";
    std::error_code ec;
    fs::remove_all(base, ec);
    bool spawned = true;
    for (const fs::path& d : {d1, d2}) {
      std::string cmd = self_path + " selftest --core-only --seed " + std::to_string(seed) +
                        " --out " + d.string() + " > /dev/null 2>&1";
      int rc = std::system(cmd.c_str());
      if (rc == -1) spawned = false;
    }
    bool identical = spawned;
    std::string detail;
    int compared = 0;
    if (spawned) {
      for (const auto& entry : fs::directory_iterator(d1)) {
        std::string name = entry.path().filename().string();
        std::string a = read_input(entry.path().string());
        fs::path other = d2 / name;
        ++compared;
        if (!fs::exists(other) || read_input(other.string()) != a) {
          identical = false;
          detail += name + " differs; ";
        }
      }
      if (compared == 0) identical = false;
    }
    std::cout << "criterion 9 [" << (identical ? "PASS" : "FAIL")
              << "] reproducibility: " << compared << " artifacts byte-identical"
              << (detail.empty() ? "" : ": " + detail) << "\n";
    all = all && identical;
    fs::remove_all(base, ec);
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure theory, orbital integrals and endoscopic transfer for Sp(4,R)"};
  app.require_subcommand(1);

  std::string out, input = "-";
  double tol = 1e-12;

  auto* verify = app.add_subcommand("verify-structure", "exact bracket-table report (JSON)");
  verify->add_option("-o,--out", out, "output path (default stdout)");

  auto* decompose = app.add_subcommand("decompose", "Iwasawa and polar factors of a matrix");
  decompose->add_option("-i,--input", input, "matrix JSON path or - for stdin");
  decompose->add_option("-o,--out", out, "output path");
  decompose->add_option("--tol", tol, "membership tolerance");

  auto* endo = app.add_subcommand("endoscopy", "conjugacy type, centralizer, endoscopic kind");
  endo->add_option("-i,--input", input, "matrix JSON path or - for stdin");
  endo->add_option("-o,--out", out, "output path");
  endo->add_option("--tol", tol, "membership tolerance");

  OrbitalArgs oargs;
  auto* orb = app.add_subcommand("orbital", "orbital integral of a bump test function (CSV)");
  orb->add_option("--type", oargs.type, "hyp or ell")->check(CLI::IsMember({"hyp", "ell"}));
  orb->add_option("--a1", oargs.a1, "first hyperbolic parameter");
  orb->add_option("--a2", oargs.a2, "second hyperbolic parameter");
  orb->add_option("--lambda", oargs.lambda, "elliptic parameter sin(theta)");
  orb->add_option("--profile", oargs.profile, "bump profile R,m");
  orb->add_option("--tol", oargs.tol, "quadrature abs tolerance per panel");
  orb->add_option("-o,--out", oargs.out, "output path");

  std::string profile = "4,4";
  double lmax = 0.1, lmin = 1e-4;
  int points = 13;
  double etol = 1e-9;
  auto* exp = app.add_subcommand("expansion", "(lambda, F, A, B, G, H) table (CSV)");
  exp->add_option("--profile", profile, "bump profile R,m");
  exp->add_option("--lambda-max", lmax, "largest lambda");
  exp->add_option("--lambda-min", lmin, "smallest lambda");
  exp->add_option("--points", points, "grid size (log-spaced)");
  exp->add_option("--tol", etol, "quadrature abs tolerance");
  exp->add_option("-o,--out", out, "output path");

  std::string chop = "numerator";
  int m1 = 3, m2 = 1, n = 2, cpoints = 6;
  auto* ch = app.add_subcommand("characters", "character evaluations on grids (CSV)");
  ch->add_option("--op", chop, "numerator, sl2 or stable");
  ch->add_option("--m1", m1, "weight coordinate 1");
  ch->add_option("--m2", m2, "weight coordinate 2");
  ch->add_option("--n", n, "sl2 parameter");
  ch->add_option("--points", cpoints, "grid size per axis");
  ch->add_option("-o,--out", out, "output path");

  bool demo = false;
  auto* pk = app.add_subcommand("packet", "finite Fourier transfer / inversion (JSON)");
  pk->add_option("-i,--input", input, "packet JSON path or - for stdin");
  pk->add_flag("--demo", demo, "use the built-in demo packet");
  pk->add_option("-o,--out", out, "output path");

  std::uint64_t seed = 42;
  std::string out_dir;
  bool core_only = false;
  auto* st = app.add_subcommand("selftest", "run the acceptance suite");
  st->add_option("--seed", seed, "seed for randomized criteria");
  st->add_option("--out", out_dir, "artifact directory");
  st->add_flag("--core-only", core_only, "skip the reproducibility criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify_structure(out);
    if (*decompose) return cmd_decompose(input, out, tol);
    if (*endo) return cmd_endoscopy(input, out, tol);
    if (*orb) return cmd_orbital(oargs);
    if (*exp) return cmd_expansion(profile, lmax, lmin, points, etol, out);
    if (*ch) return cmd_characters(chop, m1, m2, n, cpoints, out);
    if (*pk) return cmd_packet(input, demo, out);
    if (*st) return cmd_selftest(seed, out_dir, core_only, argv[0]);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
