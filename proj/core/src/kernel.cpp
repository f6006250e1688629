#include "sympl4/kernel.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace sympl4 {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

double singular_tol(const Mat2& b) {
  const double norm = b.cwiseAbs().maxCoeff();
  return 1e-12 * std::max(1.0, norm * norm);
}

Mat2 checked_b_block(const SymplecticMatrix& m_x) {
  if (m_x.ordering() != Ordering::X) {
    throw SymplError(ErrorCode::WrongOrdering, "kernel expects an X-ordered matrix");
  }
  const Mat2 b = m_x.block_b();
  if (std::abs(b.determinant()) <= singular_tol(b)) {
    throw SymplError(ErrorCode::SingularB,
                     "pointwise kernel undefined for singular B block");
  }
  return b;
}

}  // namespace

GaussHermiteRule gauss_hermite(int order) {
  if (order < 1) {
    throw SymplError(ErrorCode::InvalidArgument, "quadrature order must be positive");
  }
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double beta = std::sqrt(0.5 * k);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  GaussHermiteRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = solver.eigenvalues()[i];
    const double first = solver.eigenvectors()(0, i);
    rule.weights[i] = sqrt_pi * first * first;
  }
  return rule;
}

namespace {

// Gauss-Legendre on [-1, 1]; used for the output-side box integrals where an
// exponentially reweighted rule would amplify the inner quadrature noise.
GaussHermiteRule gauss_legendre(int order) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  GaussHermiteRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = solver.eigenvalues()[i];
    const double first = solver.eigenvectors()(0, i);
    rule.weights[i] = 2.0 * first * first;
  }
  return rule;
}

}  // namespace

std::complex<double> kernel_eval(const SymplecticMatrix& m_x, const Vec2& x,
                                 const Vec2& x_prime, const OscillatorConfig& config) {
  config.validate();
  const Mat2 b = checked_b_block(m_x);
  const Mat2 b_inv = b.inverse();
  const Mat2 db_inv = m_x.block_d() * b_inv;
  const Mat2 b_inv_a = b_inv * m_x.block_a();

  const double quad = x.dot(db_inv * x) - 2.0 * x_prime.dot(b_inv * x) +
                      x_prime.dot(b_inv_a * x_prime);
  const double two_pi_h = 2.0 * std::numbers::pi * config.hbar;
  const std::complex<double> prefactor_sq(-two_pi_h * two_pi_h * b.determinant(), 0.0);
  return std::exp(kI * quad / (2.0 * config.hbar)) / std::sqrt(prefactor_sq);
}

QuadratureMoments kernel_propagate_vacuum(const SymplecticMatrix& m_x,
                                          const OscillatorConfig& config, int order) {
  config.validate();
  const Mat2 b = checked_b_block(m_x);
  const Mat2 b_inv = b.inverse();
  const Mat2 db_inv_raw = m_x.block_d() * b_inv;
  const Mat2 phase_g = 0.5 * (db_inv_raw + db_inv_raw.transpose());
  const Mat2 b_inv_a_raw = b_inv * m_x.block_a();
  const Mat2 q_phase = 0.5 * (b_inv_a_raw + b_inv_a_raw.transpose());
  const double hbar = config.hbar;

  const int n = order;

  // Vacuum times kernel is one complex Gaussian in x'. Its integral is
  // evaluated exactly by completing the square, so the propagated state is
  // itself a complex Gaussian; node-sampling the x-dependent linear phase
  // instead would alias once |x| exceeds a few widths, and the leftover
  // oscillatory normalization integral converges too slowly in the order to
  // honor the moment tolerance. The quadrature content of this oracle is the
  // measurement of the second moments of the propagated density on an
  // order-by-order tensor grid.
  using C2 = Eigen::Matrix2cd;
  C2 sigma = C2::Zero();
  sigma(0, 0) = std::complex<double>(1.0 / (config.l1 * config.l1), 0.0);
  sigma(1, 1) = std::complex<double>(1.0 / (config.l2 * config.l2), 0.0);
  sigma -= kI / hbar * q_phase;
  const C2 sigma_inv = sigma.inverse();

  const std::complex<double> z_norm =
      2.0 * std::numbers::pi / std::sqrt(sigma.determinant());

  const double vacuum_norm =
      std::pow(std::numbers::pi * config.l1 * config.l1, -0.25) *
      std::pow(std::numbers::pi * config.l2 * config.l2, -0.25);
  const double two_pi_h = 2.0 * std::numbers::pi * hbar;
  const std::complex<double> prefactor =
      1.0 / std::sqrt(std::complex<double>(-two_pi_h * two_pi_h * b.determinant(), 0.0));
  const std::complex<double> amplitude = z_norm * vacuum_norm * prefactor;

  // psi(x) = amplitude * exp(-1/2 x^T W x); the gradient is -W x psi.
  const C2 w_form = (b_inv.transpose() * sigma_inv * b_inv).eval() / (hbar * hbar) -
                    kI / hbar * phase_g;
  const auto evaluate = [&](const Vec2& x, std::complex<double>& psi,
                            std::complex<double>& d1, std::complex<double>& d2) {
    const Eigen::Vector2cd xc = x.cast<std::complex<double>>();
    const Eigen::Vector2cd wx = w_form * xc;
    psi = amplitude * std::exp(-0.5 * (xc[0] * wx[0] + xc[1] * wx[1]));
    d1 = -wx[0] * psi;
    d2 = -wx[1] * psi;
  };

  // Box half-widths from the decay of |psi| along each axis: scan outward
  // until the density drops by e^-8 relative to the center, which sits at
  // four standard deviations for a Gaussian profile.
  std::complex<double> psi0, du1, du2;
  evaluate(Vec2::Zero(), psi0, du1, du2);
  if (!(std::abs(psi0) > 0.0) || !std::isfinite(std::abs(psi0))) {
    throw SymplError(ErrorCode::QuadratureNotConverged, "propagated state vanishes at the origin");
  }
  const double base = 0.25 * std::min(config.l1, config.l2);
  Vec2 half_width;
  for (int axis = 0; axis < 2; ++axis) {
    double s = base;
    bool found = false;
    for (int step = 0; step < 60; ++step) {
      Vec2 x = Vec2::Zero();
      x[axis] = s;
      std::complex<double> psi, g1, g2;
      evaluate(x, psi, g1, g2);
      if (std::abs(psi) < std::exp(-8.0) * std::abs(psi0)) {
        found = true;
        break;
      }
      s *= 1.5;
    }
    if (!found) {
      throw SymplError(ErrorCode::QuadratureNotConverged,
                       "could not bracket the spread of the propagated state");
    }
    half_width[axis] = 1.75 * s;  // box reaches ~7 standard deviations
  }

  const GaussHermiteRule box = gauss_legendre(n);
  double norm_acc = 0.0;
  Mat4 acc = Mat4::Zero();
  double defect = 0.0;
  for (int j = 0; j < n; ++j) {
    const double wx = box.weights[j] * half_width[0];
    for (int k = 0; k < n; ++k) {
      const double wy = box.weights[k] * half_width[1];
      const Vec2 x(half_width[0] * box.nodes[j], half_width[1] * box.nodes[k]);
      std::complex<double> psi, d1, d2;
      evaluate(x, psi, d1, d2);
      const double w = wx * wy;
      const double density = std::norm(psi);
      norm_acc += w * density;
      acc(0, 0) += w * density * x[0] * x[0];
      acc(0, 1) += w * density * x[0] * x[1];
      acc(1, 1) += w * density * x[1] * x[1];
      const std::complex<double> p1 = -kI * hbar * d1;
      const std::complex<double> p2 = -kI * hbar * d2;
      acc(2, 2) += w * std::norm(p1);
      acc(3, 3) += w * std::norm(p2);
      const std::complex<double> p1p2 = std::conj(p1) * p2;
      acc(2, 3) += w * p1p2.real();
      defect = std::max(defect, std::abs(w * p1p2.imag()));
      acc(0, 2) += w * (std::conj(psi) * x[0] * p1).real();
      acc(0, 3) += w * (std::conj(psi) * x[0] * p2).real();
      acc(1, 2) += w * (std::conj(psi) * x[1] * p1).real();
      acc(1, 3) += w * (std::conj(psi) * x[1] * p2).real();
    }
  }

  QuadratureMoments result;
  result.norm = std::sqrt(norm_acc);
  Mat4 v = acc / norm_acc;
  v(1, 0) = v(0, 1);
  v(2, 0) = v(0, 2);
  v(3, 0) = v(0, 3);
  v(2, 1) = v(1, 2);
  v(3, 1) = v(1, 3);
  v(3, 2) = v(2, 3);
  result.v = v;
  result.hermiticity_defect = defect;
  return result;
}

CovarianceMatrix kernel_apply_gaussian(const SymplecticMatrix& m_x,
                                       const OscillatorConfig& config,
                                       const GridSpec& grid) {
  const QuadratureMoments fine = kernel_propagate_vacuum(m_x, config, grid.order);
  if (grid.check_convergence) {
    const QuadratureMoments coarse =
        kernel_propagate_vacuum(m_x, config, std::max(8, grid.order / 2));
    const double drift = (fine.v - coarse.v).cwiseAbs().maxCoeff();
    if (drift > grid.convergence_tol) {
      throw SymplError(ErrorCode::QuadratureNotConverged,
                       "moments moved by " + std::to_string(drift) +
                           " between half and full quadrature order");
    }
  }
  return CovarianceMatrix(fine.v, config, 1e-4);
}

}  // namespace sympl4
