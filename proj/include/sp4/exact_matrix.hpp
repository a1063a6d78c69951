#ifndef SP4_EXACT_MATRIX_HPP
#define SP4_EXACT_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "sp4/symplectic.hpp"
#include "sp4/types.hpp"

// Runtime-tagged 4x4 matrix over one of the three scalar modes. This is the
// boundary type used by the CLI and the JSON (de)serializer; numeric code
// works directly on the statically typed Mat4<Scalar>.

namespace sp4 {

enum class ScalarMode { rational, gaussian, float64 };

std::string to_string(ScalarMode mode);

struct ModeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ExactMatrix {
public:
  ExactMatrix() : value_(Mat4q(Mat4q::Zero())) {}
  explicit ExactMatrix(Mat4q m) : value_(std::move(m)) {}
  explicit ExactMatrix(Mat4g m) : value_(std::move(m)) {}
  explicit ExactMatrix(Mat4d m) : value_(std::move(m)) {}

  ScalarMode mode() const;

  const Mat4q& rational() const { return expect<Mat4q>("rational"); }
  const Mat4g& gaussian() const { return expect<Mat4g>("gaussian"); }
  const Mat4d& float64() const { return expect<Mat4d>("float64"); }

  /// Lossless widening: rational -> gaussian, exact -> float64.
  ExactMatrix promoted_to(ScalarMode target) const;

  template <typename Visitor>
  decltype(auto) visit(Visitor&& v) const {
    return std::visit(std::forward<Visitor>(v), value_);
  }

private:
  std::variant<Mat4q, Mat4g, Mat4d> value_;

  template <typename T>
  const T& expect(const char* name) const {
    const T* p = std::get_if<T>(&value_);
    if (!p) throw ModeMismatch(std::string("ExactMatrix: not in ") + name + " mode");
    return *p;
  }
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
bool is_symplectic(const ExactMatrix& g, double tol = kDefaultTol);
bool is_in_algebra(const ExactMatrix& x, double tol = kDefaultTol);
ExactMatrix cartan_involution_algebra(const ExactMatrix& x);
ExactMatrix inverse(const ExactMatrix& m);

/// JSON wire format: a row-major array of 16 entries; strings "p/q" for
/// rational mode, "a+bi" with rational parts for gaussian mode, plain
/// numbers for float mode. The mode is inferred when parsing.
std::string to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const std::string& text);

}  // namespace sp4

#endif
