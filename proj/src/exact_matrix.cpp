#include "sp4/exact_matrix.hpp"

#include <json.hpp>

namespace sp4 {

using nlohmann::json;

std::string to_string(ScalarMode mode) {
  switch (mode) {
    case ScalarMode::rational: return "rational";
    case ScalarMode::gaussian: return "gaussian";
    case ScalarMode::float64: return "float64";
  }
  return "?";
}

ScalarMode ExactMatrix::mode() const {
  return visit([](const auto& m) {
    using T = std::decay_t<decltype(m)>;
    if constexpr (std::is_same_v<T, Mat4q>) return ScalarMode::rational;
    else if constexpr (std::is_same_v<T, Mat4g>) return ScalarMode::gaussian;
    else return ScalarMode::float64;
  });
}

ExactMatrix ExactMatrix::promoted_to(ScalarMode target) const {
  if (mode() == target) return *this;
  if (mode() == ScalarMode::rational && target == ScalarMode::gaussian)
    return ExactMatrix(to_gaussian(rational()));
  if (mode() == ScalarMode::rational && target == ScalarMode::float64)
    return ExactMatrix(to_float(rational()));
  if (mode() == ScalarMode::gaussian && target == ScalarMode::float64) {
    const Mat4g& g = gaussian();
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (!g(r, c).is_real())
          throw ModeMismatch("ExactMatrix: complex entries cannot narrow to float64");
    Mat4d out;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) out(r, c) = g(r, c).real().to_double();
    return ExactMatrix(out);
  }
  throw ModeMismatch("ExactMatrix: no lossless promotion from " + to_string(mode()) +
                     " to " + to_string(target));
}

namespace {

template <typename F>
ExactMatrix zip_same_mode(const ExactMatrix& a, const ExactMatrix& b, const char* op, F&& f) {
  if (a.mode() != b.mode())
    throw ModeMismatch(std::string(op) + ": scalar mode mismatch (" + to_string(a.mode()) +
                       " vs " + to_string(b.mode()) + ")");
  switch (a.mode()) {
    case ScalarMode::rational: return ExactMatrix(Mat4q(f(a.rational(), b.rational())));
    case ScalarMode::gaussian: return ExactMatrix(Mat4g(f(a.gaussian(), b.gaussian())));
    default: return ExactMatrix(Mat4d(f(a.float64(), b.float64())));
  }
}

}  // namespace

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  return zip_same_mode(a, b, "mat_mul", [](const auto& x, const auto& y) { return x * y; });
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  return zip_same_mode(a, b, "commutator",
                       [](const auto& x, const auto& y) { return x * y - y * x; });
}

bool is_symplectic(const ExactMatrix& g, double tol) {
  switch (g.mode()) {
    case ScalarMode::rational: return is_symplectic<Rational>(g.rational());
    case ScalarMode::gaussian: return is_symplectic<GaussianRational>(g.gaussian());
    default: return is_symplectic(g.float64(), tol);
  }
}

bool is_in_algebra(const ExactMatrix& x, double tol) {
  switch (x.mode()) {
    case ScalarMode::rational: return is_in_algebra<Rational>(x.rational());
    case ScalarMode::gaussian: return is_in_algebra<GaussianRational>(x.gaussian());
    default: return is_in_algebra(x.float64(), tol);
  }
}

ExactMatrix cartan_involution_algebra(const ExactMatrix& x) {
  switch (x.mode()) {
    case ScalarMode::rational: return ExactMatrix(cartan_involution_algebra<Rational>(x.rational()));
    case ScalarMode::gaussian: return ExactMatrix(cartan_involution_algebra<GaussianRational>(x.gaussian()));
    default: return ExactMatrix(cartan_involution_algebra<double>(x.float64()));
  }
}

ExactMatrix inverse(const ExactMatrix& m) {
  switch (m.mode()) {
    case ScalarMode::rational: return ExactMatrix(exact_inverse<Rational>(m.rational()));
    case ScalarMode::gaussian: return ExactMatrix(exact_inverse<GaussianRational>(m.gaussian()));
    default: {
      // float mode: partial-pivot elimination
      Eigen::PartialPivLU<Mat4d> lu(m.float64());
      return ExactMatrix(Mat4d(lu.inverse()));
    }
  }
}

std::string to_json(const ExactMatrix& m) {
  json arr = json::array();
  m.visit([&](const auto& mat) {
    using T = std::decay_t<decltype(mat)>;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        if constexpr (std::is_same_v<T, Mat4d>)
          arr.push_back(mat(r, c));
        else
          arr.push_back(mat(r, c).to_string());
      }
  });
  return arr.dump();
}

ExactMatrix matrix_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array() || j.size() != 16)
    throw std::invalid_argument("matrix_from_json: expected a flat array of 16 entries");
  bool any_string = false, any_imag = false;
  for (const auto& e : j) {
    if (e.is_string()) {
      any_string = true;
      if (e.get<std::string>().find('i') != std::string::npos) any_imag = true;
    } else if (!e.is_number()) {
      throw std::invalid_argument("matrix_from_json: entries must be strings or numbers");
    }
  }
  if (!any_string) {
    Mat4d m;
    for (int k = 0; k < 16; ++k) m(k / 4, k % 4) = j[k].get<double>();
    return ExactMatrix(m);
  }
  auto entry_string = [&](int k) -> std::string {
    const auto& e = j[k];
    if (e.is_string()) return e.get<std::string>();
    double v = e.get<double>();
    auto iv = static_cast<long long>(v);
    if (static_cast<double>(iv) != v)
      throw std::invalid_argument("matrix_from_json: non-integer number in exact-mode literal");
    return std::to_string(iv);
  };
  if (any_imag) {
    Mat4g m;
    for (int k = 0; k < 16; ++k) m(k / 4, k % 4) = GaussianRational::parse(entry_string(k));
    return ExactMatrix(m);
  }
  Mat4q m;
  for (int k = 0; k < 16; ++k) m(k / 4, k % 4) = Rational::parse(entry_string(k));
  return ExactMatrix(m);
}

}  // namespace sp4
