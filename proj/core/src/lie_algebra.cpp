#include "sympl4/lie_algebra.hpp"

#include <cmath>

namespace sympl4 {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::WrongOrdering: return "WrongOrdering";
    case ErrorCode::ComplexEigenvalueRegime: return "ComplexEigenvalueRegime";
    case ErrorCode::EllipticSpectrum: return "EllipticSpectrum";
    case ErrorCode::SingularB: return "SingularB";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::NotPointTransform: return "NotPointTransform";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Mat4 j4() {
  Mat4 j = Mat4::Zero();
  j.block<2, 2>(0, 0) = j2();
  j.block<2, 2>(2, 2) = j2();
  return j;
}

Mat4 omega(Ordering ordering) {
  if (ordering == Ordering::Y) return j4();
  Mat4 w = Mat4::Zero();
  w.block<2, 2>(0, 2) = Mat2::Identity();
  w.block<2, 2>(2, 0) = -Mat2::Identity();
  return w;
}

Mat4 gamma2() {
  Mat4 g = Mat4::Zero();
  g(0, 0) = 1.0;
  g(1, 2) = 1.0;
  g(2, 1) = 1.0;
  g(3, 3) = 1.0;
  return g;
}

namespace {

Mat2 require_symmetric(const Mat2& m, const char* name) {
  if (!all_finite(m)) {
    throw SymplError(ErrorCode::InvalidArgument,
                     std::string("non-finite entries in block ") + name);
  }
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (asym > 1e-9 * scale) {
    throw SymplError(ErrorCode::InvalidArgument,
                     std::string("block ") + name + " is not symmetric");
  }
  return 0.5 * (m + m.transpose());
}

}  // namespace

LieAlgebraElement::LieAlgebraElement(const Mat2& a, const Mat2& b, const Mat2& c)
    : a_(require_symmetric(a, "a")), b_(b), c_(require_symmetric(c, "c")) {
  if (!all_finite(b)) {
    throw SymplError(ErrorCode::InvalidArgument, "non-finite entries in block b");
  }
}

Mat4 LieAlgebraElement::symmetric_matrix() const {
  Mat4 l;
  l.block<2, 2>(0, 0) = a_;
  l.block<2, 2>(0, 2) = b_;
  l.block<2, 2>(2, 0) = b_.transpose();
  l.block<2, 2>(2, 2) = c_;
  return l;
}

LieAlgebraElement LieAlgebraElement::operator+(const LieAlgebraElement& o) const {
  return LieAlgebraElement(a_ + o.a_, b_ + o.b_, c_ + o.c_);
}

LieAlgebraElement LieAlgebraElement::operator-(const LieAlgebraElement& o) const {
  return LieAlgebraElement(a_ - o.a_, b_ - o.b_, c_ - o.c_);
}

LieAlgebraElement LieAlgebraElement::operator*(double scale) const {
  return LieAlgebraElement(a_ * scale, b_ * scale, c_ * scale);
}

double LieAlgebraElement::max_abs() const {
  return symmetric_matrix().cwiseAbs().maxCoeff();
}

Mat4 build_m(const LieAlgebraElement& l) {
  return j4() * l.symmetric_matrix();
}

Mat2 d_matrix(const LieAlgebraElement& l) {
  const Mat2 j = j2();
  return l.a() * j * l.b() + l.b() * j * l.c();
}

LieAlgebraElement bracket(const LieAlgebraElement& l1, const LieAlgebraElement& l2) {
  const Mat2 j = j2();
  const Mat2& a1 = l1.a();
  const Mat2& b1 = l1.b();
  const Mat2& c1 = l1.c();
  const Mat2& a2 = l2.a();
  const Mat2& b2 = l2.b();
  const Mat2& c2 = l2.c();

  const Mat2 a3 = a1 * j * a2 + b1 * j * b2.transpose() - a2 * j * a1 - b2 * j * b1.transpose();
  const Mat2 b3 = a1 * j * b2 + b1 * j * c2 - a2 * j * b1 - b2 * j * c1;
  const Mat2 c3 = c1 * j * c2 + b1.transpose() * j * b2 - c2 * j * c1 - b2.transpose() * j * b1;
  return LieAlgebraElement(a3, b3, c3);
}

EigenPair lambda_pm(const LieAlgebraElement& l) {
  const double det_a = l.a().determinant();
  const double det_b = l.b().determinant();
  const double det_c = l.c().determinant();
  const double det_d = d_matrix(l).determinant();

  const double mean = -0.5 * (det_a + det_c + 2.0 * det_b);
  const double radicand = (det_a - det_c) * (det_a - det_c) + 4.0 * det_d;

  EigenPair pair;
  if (radicand < 0.0) {
    pair.lambda_plus = mean;
    pair.lambda_minus = mean;
    pair.delta = 0.0;
    pair.imag_part = 0.5 * std::sqrt(-radicand);
    pair.complex_regime = true;
    return pair;
  }
  const double half_delta = 0.5 * std::sqrt(radicand);
  pair.lambda_plus = mean + half_delta;
  pair.lambda_minus = mean - half_delta;
  pair.delta = 2.0 * half_delta;
  return pair;
}

PolynomialCoefficients iota(const LieAlgebraElement& l, double hbar) {
  if (!(hbar > 0.0)) {
    throw SymplError(ErrorCode::InvalidArgument, "hbar must be positive");
  }
  PolynomialCoefficients p;
  p.a11 = l.a()(0, 0);
  p.a12 = l.a()(0, 1);
  p.a22 = l.a()(1, 1);
  p.b11 = l.b()(0, 0);
  p.b12 = l.b()(0, 1);
  p.b21 = l.b()(1, 0);
  p.b22 = l.b()(1, 1);
  p.c11 = l.c()(0, 0);
  p.c12 = l.c()(0, 1);
  p.c22 = l.c()(1, 1);
  p.hbar = hbar;
  return p;
}

LieAlgebraElement iota_inv(const PolynomialCoefficients& p) {
  Mat2 a, b, c;
  a << p.a11, p.a12, p.a12, p.a22;
  b << p.b11, p.b12, p.b21, p.b22;
  c << p.c11, p.c12, p.c12, p.c22;
  return LieAlgebraElement(a, b, c);
}

}  // namespace sympl4
