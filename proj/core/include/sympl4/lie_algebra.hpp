#pragma once

#include "sympl4/types.hpp"

namespace sympl4 {

/// Generator data for sp(4,R): the symmetric 4x4 matrix [[a, b], [b^T, c]]
/// with a, c symmetric 2x2 blocks and b an arbitrary real 2x2 block.
/// The algebra matrix itself is m = (J + J) L.
class LieAlgebraElement {
 public:
  LieAlgebraElement() : a_(Mat2::Zero()), b_(Mat2::Zero()), c_(Mat2::Zero()) {}

  /// Symmetrizes a and c; rejects non-finite input or blocks whose
  /// asymmetry exceeds 1e-9 * max(1, |block|).
  LieAlgebraElement(const Mat2& a, const Mat2& b, const Mat2& c);

  static LieAlgebraElement zero() { return LieAlgebraElement(); }

  const Mat2& a() const { return a_; }
  const Mat2& b() const { return b_; }
  const Mat2& c() const { return c_; }

  /// The symmetric matrix L = [[a, b], [b^T, c]].
  Mat4 symmetric_matrix() const;

  LieAlgebraElement operator+(const LieAlgebraElement& other) const;
  LieAlgebraElement operator-(const LieAlgebraElement& other) const;
  LieAlgebraElement operator*(double scale) const;
  LieAlgebraElement operator-() const { return *this * -1.0; }

  double max_abs() const;

 private:
  Mat2 a_, b_, c_;
};

inline LieAlgebraElement operator*(double scale, const LieAlgebraElement& l) {
  return l * scale;
}

/// The Y-ordered algebra matrix m = (J + J) L. Traceless.
Mat4 build_m(const LieAlgebraElement& l);

/// d = a J b + b J c, the block controlling the off-diagonal of m^2.
Mat2 d_matrix(const LieAlgebraElement& l);

/// Lie bracket: returns the generator of [(J+J)L1, (J+J)L2], with the three
/// blocks assembled directly from the 2x2 block products.
LieAlgebraElement bracket(const LieAlgebraElement& l1, const LieAlgebraElement& l2);

/// Eigenvalues of the 2x2 recursion matrix governing powers of m^2:
///   lambda_pm = -(det a + det c + 2 det b)/2 +- sqrt(radicand)/2,
///   radicand  = (det a - det c)^2 + 4 det d.
/// When the radicand is negative the pair is complex conjugate; lambda_plus
/// and lambda_minus then hold the common real part and imag_part its
/// imaginary part.
struct EigenPair {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double delta = 0.0;      ///< lambda_plus - lambda_minus, >= 0 in the real regime
  double imag_part = 0.0;  ///< nonzero only in the complex regime
  bool complex_regime = false;
};

EigenPair lambda_pm(const LieAlgebraElement& l);

/// Coefficient view of the second-order polynomial generator associated with
/// L through the symmetric matrix: a11..a22 quadratic in mode 1, b11..b22 the
/// cross couplings, c11..c22 quadratic in mode 2.
struct PolynomialCoefficients {
  double a11 = 0, a12 = 0, a22 = 0;
  double b11 = 0, b12 = 0, b21 = 0, b22 = 0;
  double c11 = 0, c12 = 0, c22 = 0;
  double hbar = 1.0;
};

PolynomialCoefficients iota(const LieAlgebraElement& l, double hbar);
LieAlgebraElement iota_inv(const PolynomialCoefficients& p);

}  // namespace sympl4
