#pragma once

#include <complex>
#include <vector>

#include "sympl4/gaussian.hpp"

namespace sympl4 {

struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights for \int e^{-t^2} f(t) dt, by Golub-Welsch.
GaussHermiteRule gauss_hermite(int order);

/// Pointwise integral kernel of the metaplectic representation,
///   C(x, x') = exp{ i/(2 hbar) [x^T D B^-1 x - 2 x'^T B^-1 x + x'^T B^-1 A x'] }
///              / sqrt((2 pi i hbar)^2 det B),
/// principal branch of the square root. Requires an invertible B block;
/// throws SingularB otherwise.
std::complex<double> kernel_eval(const SymplecticMatrix& m_x, const Vec2& x,
                                 const Vec2& x_prime, const OscillatorConfig& config);

struct GridSpec {
  int order = 64;                  ///< Gauss-Hermite order per axis
  bool check_convergence = true;   ///< compare against the half-order run
  double convergence_tol = 1e-6;
};

struct QuadratureMoments {
  Mat4 v = Mat4::Zero();           ///< second moments, X ordering
  double norm = 0.0;               ///< L2 norm of the propagated state
  double hermiticity_defect = 0.0; ///< imaginary residue of the mixed moments
};

/// Propagates the two-mode vacuum Gaussian through the kernel by tensor
/// Gauss-Hermite quadrature and measures the second moments of the result.
/// Serves as the numerical oracle for the closed-form covariance.
QuadratureMoments kernel_propagate_vacuum(const SymplecticMatrix& m_x,
                                          const OscillatorConfig& config,
                                          int order);

/// Moment measurement wrapped as a CovarianceMatrix; throws
/// QuadratureNotConverged when halving the order moves any entry by more
/// than convergence_tol.
CovarianceMatrix kernel_apply_gaussian(const SymplecticMatrix& m_x,
                                       const OscillatorConfig& config,
                                       const GridSpec& grid = {});

}  // namespace sympl4
