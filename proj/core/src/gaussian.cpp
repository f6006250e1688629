#include "sympl4/gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "sympl4/analytic.hpp"

namespace sympl4 {

void OscillatorConfig::validate() const {
  if (!(l1 > 0.0) || !(l2 > 0.0) || !(hbar > 0.0)) {
    throw SymplError(ErrorCode::InvalidArgument,
                     "oscillator lengths and hbar must be positive");
  }
}

CovarianceMatrix::CovarianceMatrix(const Mat4& entries, const OscillatorConfig& config,
                                   double tol)
    : entries_(entries), config_(config) {
  config_.validate();
  if (!all_finite(entries)) {
    throw SymplError(ErrorCode::InvalidArgument, "non-finite covariance entries");
  }
  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  if ((entries - entries.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
    throw SymplError(ErrorCode::InvalidArgument, "covariance matrix must be symmetric");
  }
  const Mat4 sigma = (2.0 / config_.hbar) * entries;
  const double norm = sigma.cwiseAbs().maxCoeff();
  if (sympl4::symplectic_residual(sigma, Ordering::X) > tol * std::max(1.0, norm * norm)) {
    throw SymplError(ErrorCode::NotSymplectic,
                     "(2/hbar) V does not satisfy the X-order symplectic condition");
  }
  Eigen::SelfAdjointEigenSolver<Mat4> solver(0.5 * (entries + entries.transpose()));
  if (solver.eigenvalues().minCoeff() <= 0.0) {
    throw SymplError(ErrorCode::InvalidArgument, "covariance matrix must be positive definite");
  }
}

double CovarianceMatrix::symplectic_residual() const {
  return sympl4::symplectic_residual((2.0 / config_.hbar) * entries_, Ordering::X);
}

namespace {

Mat4 vacuum_diag(const OscillatorConfig& config, bool amplitude_units) {
  // amplitude_units: diag(L^2/hbar^2, L^-2); otherwise diag(L^2, hbar^2 L^-2).
  Mat4 d = Mat4::Zero();
  const double l1sq = config.l1 * config.l1;
  const double l2sq = config.l2 * config.l2;
  const double h2 = config.hbar * config.hbar;
  if (amplitude_units) {
    d(0, 0) = l1sq / h2;
    d(1, 1) = l2sq / h2;
    d(2, 2) = 1.0 / l1sq;
    d(3, 3) = 1.0 / l2sq;
  } else {
    d(0, 0) = l1sq;
    d(1, 1) = l2sq;
    d(2, 2) = h2 / l1sq;
    d(3, 3) = h2 / l2sq;
  }
  return d;
}

void require_x_order(const SymplecticMatrix& m) {
  if (m.ordering() != Ordering::X) {
    throw SymplError(ErrorCode::WrongOrdering, "expected an X-ordered matrix");
  }
}

}  // namespace

Mat4 lambda_matrix(const SymplecticMatrix& m_x, const OscillatorConfig& config) {
  require_x_order(m_x);
  config.validate();
  const Mat4 lam = m_x.entries() * vacuum_diag(config, true) * m_x.entries().transpose();
  return 0.5 * (lam + lam.transpose());
}

double weyl_amplitude(const SymplecticMatrix& m_x, const OscillatorConfig& config,
                      const WeylLabel& w) {
  const Mat4 lam = lambda_matrix(m_x, config);
  Vec4 v;
  v << w.a[0], w.a[1], w.b[0], w.b[1];
  return std::exp(-0.25 * v.dot(lam * v));
}

CovarianceMatrix covariance(const SymplecticMatrix& m_x, const OscillatorConfig& config) {
  require_x_order(m_x);
  config.validate();
  const Mat4 v = 0.5 * m_x.entries() * vacuum_diag(config, false) * m_x.entries().transpose();
  return CovarianceMatrix(0.5 * (v + v.transpose()), config);
}

CovarianceMatrix covariance_decoupled(double a11, double a12, double a22, double c11,
                                      double c12, double c22,
                                      const OscillatorConfig& config) {
  config.validate();
  const double h2 = config.hbar * config.hbar;

  struct ModeEntries {
    double xx, xp, pp;
  };
  const auto mode = [h2](double m11, double m12, double m22, double length) {
    const double det = m11 * m22 - m12 * m12;
    const double lambda = -det;
    const double c = analytic_C(lambda);
    const double s = analytic_S(lambda);
    const double lsq = length * length;
    ModeEntries e;
    e.xx = lsq * c * c + 2.0 * m12 * lsq * c * s + s * s * (m12 * m12 * lsq + m22 * m22 * h2 / lsq);
    e.xp = c * s * (m22 * h2 / lsq - m11 * lsq) - m12 * s * s * (m11 * lsq + m22 * h2 / lsq);
    e.pp = h2 * c * c / lsq - 2.0 * m12 * h2 * c * s / lsq +
           s * s * (m11 * m11 * lsq + m12 * m12 * h2 / lsq);
    return e;
  };

  const ModeEntries m1 = mode(a11, a12, a22, config.l1);
  const ModeEntries m2 = mode(c11, c12, c22, config.l2);

  Mat4 v = Mat4::Zero();
  v(0, 0) = m1.xx;
  v(1, 1) = m2.xx;
  v(0, 2) = v(2, 0) = m1.xp;
  v(1, 3) = v(3, 1) = m2.xp;
  v(2, 2) = m1.pp;
  v(3, 3) = m2.pp;
  return CovarianceMatrix(0.5 * v, config);
}

Dispersions dispersions(const CovarianceMatrix& v) {
  const Mat4& e = v.entries();
  Dispersions d;
  d.dx1 = std::sqrt(e(0, 0));
  d.dx2 = std::sqrt(e(1, 1));
  d.dp1 = std::sqrt(e(2, 2));
  d.dp2 = std::sqrt(e(3, 3));
  return d;
}

BipartiteMoments bipartite_moments(const SqueezeParams& params) {
  params.validate();
  const double l1 = params.l1;
  const double l2 = params.l2;
  const double hb = params.hbar;
  const double e2r = std::exp(2.0 * params.r);
  const double em2r = std::exp(-2.0 * params.r);
  const double cross = 2.0 * l1 * l2 * std::cos(params.phi);
  const double sum_sq = l1 * l1 + l2 * l2;

  BipartiteMoments m;
  m.x_plus_sq = 0.25 * e2r * (sum_sq - cross) + 0.25 * em2r * (sum_sq + cross);
  m.x_minus_sq = 0.25 * e2r * (sum_sq + cross) + 0.25 * em2r * (sum_sq - cross);
  const double pscale = hb * hb / (l1 * l1 * l2 * l2);
  m.p_plus_sq = 0.25 * pscale * (e2r * (sum_sq + cross) + em2r * (sum_sq - cross));
  m.p_minus_sq = 0.25 * pscale * (e2r * (sum_sq - cross) + em2r * (sum_sq + cross));
  return m;
}

WeylLabel weyl_conjugation_labels(const SymplecticMatrix& m_x, const WeylLabel& w) {
  require_x_order(m_x);
  const Mat2 a_blk = m_x.block_a();
  const Mat2 b_blk = m_x.block_b();
  const Mat2 c_blk = m_x.block_c();
  const Mat2 d_blk = m_x.block_d();
  WeylLabel out;
  // Row-vector action: a' = a D^T - b C^T, b' = -a B^T + b A^T.
  out.a = d_blk * w.a - c_blk * w.b;
  out.b = -b_blk * w.a + a_blk * w.b;
  return out;
}

std::array<double, 2> williamson_nu(const CovarianceMatrix& v) {
  const Mat4 sigma = (2.0 / v.config().hbar) * v.entries();
  const Mat4 m = omega(Ordering::X).inverse() * sigma;
  Eigen::EigenSolver<Mat4> solver(m);
  std::array<double, 4> mods;
  for (int i = 0; i < 4; ++i) mods[i] = std::abs(solver.eigenvalues()[i].imag());
  std::sort(mods.begin(), mods.end());
  // Eigenvalues come in +-i nu pairs; take one representative per pair.
  return {0.5 * (mods[0] + mods[1]), 0.5 * (mods[2] + mods[3])};
}

}  // namespace sympl4
