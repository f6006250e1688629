#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace sympl4 {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;

/// Absolute tolerance used by default for symplecticity, determinant and
/// closed-form-vs-oracle checks. Overridable per call site.
inline constexpr double kDefaultTolerance = 1e-10;

/// Phase-space variable ordering carried by every 4x4 group matrix.
/// Y is (q1, p1, q2, p2); X is (q1, q2, p1, p2).
enum class Ordering { Y, X };

inline const char* ordering_name(Ordering o) { return o == Ordering::Y ? "Y" : "X"; }

enum class ErrorCode {
  WrongOrdering,
  ComplexEigenvalueRegime,
  EllipticSpectrum,
  SingularB,
  QuadratureNotConverged,
  NotPointTransform,
  NotSymmetric,
  NotNormalized,
  NotSymplectic,
  ParseError,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class SymplError : public std::runtime_error {
 public:
  SymplError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

/// The 2x2 rotation generator [[0,1],[-1,0]].
inline Mat2 j2() {
  Mat2 j;
  j << 0.0, 1.0, -1.0, 0.0;
  return j;
}

/// Block-diagonal J + J, the symplectic form in Y ordering.
Mat4 j4();

/// Symplectic form matrix for the given ordering: 1 (x) J for Y, J (x) 1 for X.
Mat4 omega(Ordering ordering);

/// Permutation exchanging p1 and q2, mapping Y ordering into X ordering.
/// Orthogonal and involutory.
Mat4 gamma2();

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

}  // namespace sympl4
