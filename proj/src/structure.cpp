#include "sp4/structure.hpp"

#include <json.hpp>
#include <stdexcept>

#include "sp4/exact_solve.hpp"

namespace sp4 {

namespace {

Mat4q elem(int r, int c, std::int64_t v) {
  Mat4q m = Mat4q::Zero();
  m(r, c) = Rational(v);
  return m;
}

Mat4g gelem(int r, int c, GaussianRational v) {
  Mat4g m = Mat4g::Zero();
  m(r, c) = std::move(v);
  return m;
}

const GaussianRational gi = GaussianRational::i();

BasisCatalog build_catalog();

}  // namespace

std::string WeylElement::name() const {
  auto img = [&](const Weight& w) {
    Weight v = apply(w);
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
  };
  return img(Weight(1, 0)) + "," + img(Weight(0, 1));
}

const std::vector<WeylElement>& weyl_group() {
  static const std::vector<WeylElement> g = [] {
    std::vector<WeylElement> out;
    for (int swap = 0; swap < 2; ++swap)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          Eigen::Matrix2i m;
          if (!swap)
            m << s1, 0, 0, s2;
          else
            m << 0, s1, s2, 0;
          out.push_back({m});
        }
    return out;
  }();
  return g;
}

WeylElement weyl_identity() { return {Eigen::Matrix2i::Identity()}; }

WeylElement weyl_long_element() { return {-Eigen::Matrix2i::Identity()}; }

const std::vector<Root>& root_system() {
  static const std::vector<Root> roots = {
      {Weight(1, -1), true, true},   {Weight(2, 0), false, true},
      {Weight(1, 1), false, true},   {Weight(0, 2), false, true},
      {Weight(-1, 1), true, false},  {Weight(-2, 0), false, false},
      {Weight(-1, -1), false, false}, {Weight(0, -2), false, false},
  };
  return roots;
}

Weight rho() { return Weight(2, -1); }

Weight min_k_type_holomorphic(int k) { return Weight(k, -k); }
Weight min_k_type_cohomological(int k) { return Weight(k - 1, 1 - k); }

namespace {

/// ad matrices of T1, T2 in the 10-element rational basis, as 10x10
/// gaussian matrices acting on coordinate vectors.
struct AdTable {
  MatX<GaussianRational> basis_cols;  // 16 x 10, column k = vec(B_k)
  MatX<GaussianRational> adT1, adT2;  // 10 x 10
};

VecX<GaussianRational> vec16(const Mat4g& m) {
  VecX<GaussianRational> v(16);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) v(4 * r + c) = m(r, c);
  return v;
}

Mat4g unvec16(const VecX<GaussianRational>& v) {
  Mat4g m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = v(4 * r + c);
  return m;
}

AdTable build_ad_table(const BasisCatalog& cat) {
  AdTable t;
  auto basis = cat.real_basis();
  t.basis_cols.resize(16, 10);
  std::array<Mat4g, 10> gb;
  for (int k = 0; k < 10; ++k) {
    gb[k] = to_gaussian(basis[k]);
    t.basis_cols.col(k) = vec16(gb[k]);
  }
  Mat4g T1 = to_gaussian(cat.T1), T2 = to_gaussian(cat.T2);
  t.adT1.resize(10, 10);
  t.adT2.resize(10, 10);
  for (int k = 0; k < 10; ++k) {
    for (auto [ad, T] : {std::pair{&t.adT1, &T1}, std::pair{&t.adT2, &T2}}) {
      Mat4g br = commutator(*T, gb[k]);
      auto coeffs = exact_solve<GaussianRational>(t.basis_cols, vec16(br));
      if (!coeffs) throw std::logic_error("ad table: bracket left the algebra span");
      ad->col(k) = *coeffs;
    }
  }
  return t;
}

/// Simultaneous exact eigenvector of (ad T1, ad T2) with eigenvalues
/// (i m1, i m2), normalized so the first nonzero matrix entry in row-major
/// order is 1.
Mat4g computed_root_vector(const AdTable& t, const Weight& beta) {
  MatX<GaussianRational> sys(20, 10);
  MatX<GaussianRational> top = t.adT1;
  MatX<GaussianRational> bot = t.adT2;
  for (int k = 0; k < 10; ++k) {
    top(k, k) = top(k, k) - gi * GaussianRational(beta[0]);
    bot(k, k) = bot(k, k) - gi * GaussianRational(beta[1]);
  }
  sys.topRows(10) = top;
  sys.bottomRows(10) = bot;
  auto null = exact_nullspace<GaussianRational>(sys);
  if (null.size() != 1)
    throw std::logic_error("root space dimension != 1 for (" + std::to_string(beta[0]) + "," +
                           std::to_string(beta[1]) + ")");
  VecX<GaussianRational> coeffs = null[0];
  VecX<GaussianRational> entries = t.basis_cols * coeffs;
  Mat4g m = unvec16(entries);
  for (int k = 0; k < 16; ++k) {
    if (!entries(k).is_zero()) {
      GaussianRational lead = entries(k);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = m(r, c) / lead;
      break;
    }
  }
  return m;
}

BasisCatalog build_catalog() {
  BasisCatalog cat;
  cat.J4 = symplectic_form<Rational>();

  cat.H1 = elem(0, 0, 1) + elem(2, 2, -1);
  cat.H2 = elem(1, 1, 1) + elem(3, 3, -1);

  cat.E_2e1 = elem(0, 2, 1);
  cat.E_e1e2 = elem(0, 3, 1) + elem(1, 2, 1);
  cat.E_2e2 = elem(1, 3, 1);
  cat.E_e1me2 = elem(0, 1, 1) + elem(3, 2, -1);

  cat.T1 = elem(0, 2, 1) + elem(2, 0, -1);
  cat.T2 = elem(1, 3, 1) + elem(3, 1, -1);

  // Z = (0 I; -I 0); H' = -i (T1 - T2)
  cat.Z = to_gaussian(Mat4q(cat.T1 + cat.T2));
  cat.Hp = gelem(0, 2, -gi) + gelem(2, 0, gi) + gelem(1, 3, gi) + gelem(3, 1, -gi);

  // X, Xbar: the sl2-triple completing <H'> inside k_C, entries +-1/2, +-i/2.
  // The sign of Xbar is fixed by the triple relations [H',X] = 2X,
  // [H',Xbar] = -2Xbar, [X,Xbar] = H': with this X, the entrywise conjugate
  // satisfies [X, conj(X)] = -H', so Xbar = -conj(X).
  const Rational half(1, 2);
  const GaussianRational ih(Rational(0), half);  // i/2
  Mat4g x = Mat4g::Zero();
  x(0, 1) = GaussianRational(half);
  x(1, 0) = GaussianRational(-half);
  x(2, 3) = GaussianRational(half);
  x(3, 2) = GaussianRational(-half);
  x(0, 3) = -ih;
  x(1, 2) = -ih;
  x(2, 1) = ih;
  x(3, 0) = ih;
  cat.X = x;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) cat.Xbar(r, c) = -x(r, c).conj();

  // su(1,1) image under j (the bracket-consistent set)
  cat.jU1 = elem(0, 2, -1) + elem(2, 0, 1);
  cat.jU2 = elem(1, 3, 1) + elem(3, 1, -1);
  cat.jU3 = elem(0, 1, 1) + elem(1, 0, 1) + elem(2, 3, -1) + elem(3, 2, -1);
  cat.jU4 = elem(0, 3, 1) + elem(1, 2, 1) + elem(2, 1, 1) + elem(3, 0, 1);

  // u(2) image under j' (realification A = X + iY -> (X -Y; Y X))
  cat.jpU1 = cat.jU1;
  cat.jpU2 = elem(1, 3, -1) + elem(3, 1, 1);
  cat.jpV3 = elem(0, 1, 1) + elem(1, 0, -1) + elem(2, 3, 1) + elem(3, 2, -1);
  cat.jpV4 = elem(0, 3, -1) + elem(1, 2, -1) + elem(2, 1, 1) + elem(3, 0, 1);

  AdTable ad = build_ad_table(cat);
  for (const Root& root : root_system()) {
    cat.root_vectors[{root.weight[0], root.weight[1]}] =
        computed_root_vector(ad, root.weight);
  }
  return cat;
}

}  // namespace

std::array<Mat4q, 10> BasisCatalog::real_basis() const {
  return {H1, H2, E_2e1, E_e1e2, E_2e2, E_e1me2, jpU1, jpU2, jpV3, jpV4};
}

std::array<std::string, 10> BasisCatalog::real_basis_names() const {
  return {"H1", "H2", "E_2e1", "E_e1+e2", "E_2e2", "E_e1-e2", "j'(U1)", "j'(U2)", "j'(V3)",
          "j'(V4)"};
}

const Mat4g& BasisCatalog::root_vector(const Weight& beta) const {
  auto it = root_vectors.find({beta[0], beta[1]});
  if (it == root_vectors.end()) throw std::invalid_argument("root_vector: not a root of Sigma");
  return it->second;
}

const BasisCatalog& catalog() {
  static const BasisCatalog cat = build_catalog();
  return cat;
}

Mat4q torus_rotation_exact(const Rational& c1, const Rational& s1, const Rational& c2,
                           const Rational& s2) {
  if (c1 * c1 + s1 * s1 != Rational(1) || c2 * c2 + s2 * s2 != Rational(1))
    throw std::invalid_argument("torus_rotation_exact: (c,s) not on the unit circle");
  Mat4q m = Mat4q::Zero();
  m(0, 0) = c1;
  m(0, 2) = s1;
  m(2, 0) = -s1;
  m(2, 2) = c1;
  m(1, 1) = c2;
  m(1, 3) = s2;
  m(3, 1) = -s2;
  m(3, 3) = c2;
  return m;
}

Mat4d torus_rotation(double th1, double th2) {
  Mat4d m = Mat4d::Zero();
  m(0, 0) = std::cos(th1);
  m(0, 2) = std::sin(th1);
  m(2, 0) = -std::sin(th1);
  m(2, 2) = std::cos(th1);
  m(1, 1) = std::cos(th2);
  m(1, 3) = std::sin(th2);
  m(3, 1) = -std::sin(th2);
  m(3, 3) = std::cos(th2);
  return m;
}

std::pair<Rational, Rational> circle_point(const Rational& t) {
  Rational denom = Rational(1) + t * t;
  return {(Rational(1) - t * t) / denom, (Rational(2) * t) / denom};
}

GaussianRational root_pairing(const Weight& beta, const GaussianRational& coeff_Z,
                              const GaussianRational& coeff_Hp) {
  return gi * GaussianRational(beta[0] + beta[1]) * coeff_Z +
         GaussianRational(beta[0] - beta[1]) * coeff_Hp;
}

RootDecomposition root_decompose(const Mat4g& xc) {
  const BasisCatalog& cat = catalog();
  {
    Mat4g j = symplectic_form<GaussianRational>();
    if (!is_exactly_zero(Mat4g(xc.transpose() * j + j * xc)))
      throw std::invalid_argument("root_decompose: input not in the complexified algebra");
  }
  MatX<GaussianRational> cols(16, 10);
  std::vector<std::pair<int, int>> order;
  cols.col(0) = vec16(cat.Z);
  cols.col(1) = vec16(cat.Hp);
  int k = 2;
  for (const Root& root : root_system()) {
    cols.col(k++) = vec16(cat.root_vector(root.weight));
    order.emplace_back(root.weight[0], root.weight[1]);
  }
  auto sol = exact_solve<GaussianRational>(cols, vec16(xc));
  if (!sol) throw std::invalid_argument("root_decompose: input outside the basis span");
  RootDecomposition out;
  out.coeff_Z = (*sol)(0);
  out.coeff_Hp = (*sol)(1);
  for (int i = 0; i < 8; ++i) {
    GaussianRational c = (*sol)(i + 2);
    if (!c.is_zero()) out.components[order[i]] = c;
  }
  return out;
}

bool CheckReport::all_passed() const {
  for (const auto& e : entries)
    if (!e.passed) return false;
  return true;
}

void CheckReport::add(std::string name, bool passed, std::string detail) {
  entries.push_back({std::move(name), passed, std::move(detail)});
}

CheckReport verify_bracket_table() {
  const BasisCatalog& cat = catalog();
  CheckReport report;

  auto eq = [](const Mat4g& a, const Mat4g& b) { return is_exactly_zero(Mat4g(a - b)); };
  const GaussianRational two(2);

  // displayed commutation relations of the complex basis
  report.add("[Z,Z]=0", is_exactly_zero(Mat4g(commutator(cat.Z, cat.Z))));
  report.add("[Z,H']=0", is_exactly_zero(Mat4g(commutator(cat.Z, cat.Hp))));
  report.add("[Z,X]=0", is_exactly_zero(Mat4g(commutator(cat.Z, cat.X))));
  report.add("[Z,Xbar]=0", is_exactly_zero(Mat4g(commutator(cat.Z, cat.Xbar))));
  report.add("[H',X]=2X", eq(commutator(cat.Hp, cat.X), Mat4g(cat.X * two)));
  report.add("[H',Xbar]=-2Xbar", eq(commutator(cat.Hp, cat.Xbar), Mat4g(cat.Xbar * (-two))));
  report.add("[X,Xbar]=H'", eq(commutator(cat.X, cat.Xbar), cat.Hp));

  // membership of every real basis element
  auto basis = cat.real_basis();
  auto names = cat.real_basis_names();
  for (int k = 0; k < 10; ++k)
    report.add(names[k] + " in sp(4,R)", is_in_algebra<Rational>(basis[k]));

  // form identities
  report.add("J^2=-I", is_exactly_zero(Mat4q(cat.J4 * cat.J4 + Mat4q::Identity())));
  report.add("J^T=-J", is_exactly_zero(Mat4q(cat.J4.transpose() + cat.J4)));

  // root eigenvalue table: [H_c, X_beta] = beta(H_c) X_beta for H_c in {Z, H'}
  for (const Root& root : root_system()) {
    const Mat4g& xb = cat.root_vector(root.weight);
    bool okz = eq(commutator(cat.Z, xb), Mat4g(xb * root_pairing(root.weight, GaussianRational(1),
                                                                 GaussianRational(0))));
    bool okh = eq(commutator(cat.Hp, xb), Mat4g(xb * root_pairing(root.weight, GaussianRational(0),
                                                                  GaussianRational(1))));
    std::string tag = "(" + std::to_string(root.weight[0]) + "," + std::to_string(root.weight[1]) + ")";
    report.add("ad-eigenvalue " + tag, okz && okh);
  }

  // dimension: the 10 real basis matrices are independent, and together with
  // the Cartan pair {Z,H'} the 8 root vectors again span 10 dimensions
  {
    MatX<GaussianRational> cols(16, 10);
    for (int k = 0; k < 10; ++k) cols.col(k) = vec16(to_gaussian(basis[k]));
    report.add("dim sp(4,R) = 10", exact_rank(cols) == 10,
               "rank " + std::to_string(exact_rank(cols)));
  }

  return report;
}

std::string report_to_json(const CheckReport& report) {
  nlohmann::json j;
  j["all_passed"] = report.all_passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json entry;
    entry["name"] = e.name;
    entry["passed"] = e.passed;
    if (!e.detail.empty()) entry["detail"] = e.detail;
    j["checks"].push_back(entry);
  }
  return j.dump(2);
}

}  // namespace sp4
