#include "sympl4/special_forms.hpp"

#include <cmath>
#include <numbers>

#include "sympl4/analytic.hpp"

namespace sympl4 {

double SqueezeParams::zeta_x() const { return r * std::cos(phi); }
double SqueezeParams::zeta_y() const { return r * std::sin(phi); }

void SqueezeParams::validate() const {
  if (!(l1 > 0.0) || !(l2 > 0.0) || !(hbar > 0.0)) {
    throw SymplError(ErrorCode::InvalidArgument,
                     "oscillator lengths and hbar must be positive");
  }
  if (!std::isfinite(r) || !std::isfinite(phi)) {
    throw SymplError(ErrorCode::InvalidArgument, "non-finite squeeze parameters");
  }
}

namespace {

Mat2 sp2_block(const Mat2& sym) {
  const double lambda = -sym.determinant();
  return analytic_C(lambda) * Mat2::Identity() + analytic_S(lambda) * j2() * sym;
}

Mat2 require_symmetric2(const Mat2& m) {
  if ((m - m.transpose()).cwiseAbs().maxCoeff() >
      1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    throw SymplError(ErrorCode::InvalidArgument, "block must be symmetric");
  }
  return 0.5 * (m + m.transpose());
}

}  // namespace

SymplecticMatrix m1_decoupled(const Mat2& a, const Mat2& c) {
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = sp2_block(require_symmetric2(a));
  m.block<2, 2>(2, 2) = sp2_block(require_symmetric2(c));
  return SymplecticMatrix(m, Ordering::Y);
}

SymplecticMatrix m2_coupled(double a11, double a22, double b11, double b22) {
  const double lp = -(a11 - b11) * (a22 - b22);
  const double lm = -(a11 + b11) * (a22 + b22);
  const double cp = analytic_C(lp);
  const double cm = analytic_C(lm);
  const double sp = analytic_S(lp);
  const double sm = analytic_S(lm);

  const double csum = 0.5 * (cm + cp);
  const double cdiff = 0.5 * (cm - cp);
  const double row1_s = 0.5 * ((a22 + b22) * sm + (a22 - b22) * sp);
  const double row1_d = 0.5 * ((a22 + b22) * sm + (b22 - a22) * sp);
  const double row2_s = 0.5 * ((b11 - a11) * sp - (a11 + b11) * sm);
  const double row2_d = 0.5 * ((a11 - b11) * sp - (a11 + b11) * sm);

  Mat4 m;
  m << csum, row1_s, cdiff, row1_d,
       row2_s, csum, row2_d, cdiff,
       cdiff, row1_d, csum, row1_s,
       row2_d, cdiff, row2_s, csum;
  return SymplecticMatrix(m, Ordering::Y);
}

SymplecticMatrix m3_pure_coupling(const Mat2& b) {
  const double lambda = -b.determinant();
  const double c = analytic_C(lambda);
  const double s = analytic_S(lambda);
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = c * Mat2::Identity();
  m.block<2, 2>(2, 2) = c * Mat2::Identity();
  m.block<2, 2>(0, 2) = s * j2() * b;
  m.block<2, 2>(2, 0) = s * j2() * b.transpose();
  return SymplecticMatrix(m, Ordering::Y);
}

LieAlgebraElement squeeze_generator(const SqueezeParams& params) {
  params.validate();
  const double zx = params.zeta_x();
  const double zy = params.zeta_y();
  Mat2 b;
  b << params.hbar * zy / (params.l1 * params.l2), -params.l2 * zx / params.l1,
       -params.l1 * zx / params.l2, -params.l1 * params.l2 * zy / params.hbar;
  return LieAlgebraElement(Mat2::Zero(), b, Mat2::Zero());
}

SymplecticMatrix squeeze_matrix(const SqueezeParams& params) {
  params.validate();
  const double ch = std::cosh(params.r);
  const double sh = std::sinh(params.r);
  const double cp = std::cos(params.phi);
  const double sp = std::sin(params.phi);
  const double l1 = params.l1;
  const double l2 = params.l2;
  const double hb = params.hbar;

  Mat4 m;
  m << ch, 0.0, -sh * cp * l1 / l2, -sh * sp * l1 * l2 / hb,
       0.0, ch, -sh * sp * hb / (l1 * l2), sh * cp * l2 / l1,
       -sh * cp * l2 / l1, -sh * sp * l1 * l2 / hb, ch, 0.0,
       -sh * sp * hb / (l1 * l2), sh * cp * l1 / l2, 0.0, ch;
  return SymplecticMatrix(m, Ordering::Y);
}

SymplecticMatrix squeeze_matrix_x(const SqueezeParams& params) {
  return to_x_order(squeeze_matrix(params));
}

std::vector<TrajectorySample> squeeze_trajectory(const SqueezeParams& params,
                                                 int n_samples, double q1, double p1,
                                                 double q2, double p2) {
  if (n_samples < 2) {
    throw SymplError(ErrorCode::InvalidArgument, "need at least 2 samples");
  }
  const SymplecticMatrix ms = squeeze_matrix(params);
  std::vector<TrajectorySample> out;
  out.reserve(n_samples + 1);
  for (int k = 0; k <= n_samples; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n_samples;
    const double ct = std::cos(t);
    const double st = std::sin(t);
    Vec4 y;
    y << ct * q1 + st * p1, -st * q1 + ct * p1, ct * q2 + st * p2, -st * q2 + ct * p2;
    const Vec4 yp = ms * y;
    TrajectorySample sample;
    sample.input = {t, y[0], y[1], y[2], y[3]};
    sample.transformed = {t, yp[0], yp[1], yp[2], yp[3]};
    out.push_back(sample);
  }
  return out;
}

}  // namespace sympl4
