#pragma once

#include "sympl4/types.hpp"

namespace sympl4 {

/// Residual |M Omega M^T - Omega|_inf for the symplectic condition of
/// the given ordering.
double symplectic_residual(const Mat4& entries, Ordering ordering);

/// A 4x4 real symplectic matrix tagged with its phase-space ordering.
/// Construction validates the symplectic condition and det M = 1 against a
/// tolerance scaled by the squared magnitude of the entries, so strongly
/// squeezed matrices are not rejected for honest roundoff.
class SymplecticMatrix {
 public:
  SymplecticMatrix(const Mat4& entries, Ordering ordering,
                   double tol = kDefaultTolerance);

  static SymplecticMatrix identity(Ordering ordering) {
    return SymplecticMatrix(Mat4::Identity(), ordering);
  }

  const Mat4& entries() const { return entries_; }
  Ordering ordering() const { return ordering_; }

  Mat2 block_a() const { return entries_.block<2, 2>(0, 0); }
  Mat2 block_b() const { return entries_.block<2, 2>(0, 2); }
  Mat2 block_c() const { return entries_.block<2, 2>(2, 0); }
  Mat2 block_d() const { return entries_.block<2, 2>(2, 2); }

  double symplectic_residual() const {
    return sympl4::symplectic_residual(entries_, ordering_);
  }
  double determinant() const { return entries_.determinant(); }

  /// Group inverse via Omega^-1 M^T Omega; exact for exact symplectic input.
  SymplecticMatrix inverse() const;

  /// Product of two matrices in the same ordering; mixing orderings throws
  /// WrongOrdering.
  SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;

  Vec4 operator*(const Vec4& v) const { return entries_ * v; }

 private:
  Mat4 entries_;
  Ordering ordering_;
};

/// Conjugation by the Gamma(2) permutation, Y -> X. Throws WrongOrdering if
/// the input is not Y-ordered.
SymplecticMatrix to_x_order(const SymplecticMatrix& m);

/// Conjugation by the Gamma(2) permutation, X -> Y.
SymplecticMatrix to_y_order(const SymplecticMatrix& m);

/// Max modulus of the characteristic quartic, built from Tr M, Tr M^2 and
/// Tr M^3 with det M = 1, evaluated at every eigenvalue of M.
double char_poly_check(const SymplecticMatrix& m);

}  // namespace sympl4
