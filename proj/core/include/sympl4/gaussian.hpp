#pragma once

#include <array>

#include "sympl4/special_forms.hpp"
#include "sympl4/symplectic_matrix.hpp"

namespace sympl4 {

/// Oscillator proper lengths l_j = sqrt(hbar / (m_j w_j)) and hbar.
struct OscillatorConfig {
  double l1 = 1.0;
  double l2 = 1.0;
  double hbar = 1.0;

  void validate() const;
};

/// Labels of an exponentiated phase-space displacement: a carries momentum
/// units, b position units.
struct WeylLabel {
  Vec2 a = Vec2::Zero();
  Vec2 b = Vec2::Zero();
};

/// Second-moment matrix of a squeezed vacuum state in X ordering.
/// Symmetric, positive definite, and (2/hbar) V is symplectic.
class CovarianceMatrix {
 public:
  CovarianceMatrix(const Mat4& entries, const OscillatorConfig& config,
                   double tol = kDefaultTolerance);

  const Mat4& entries() const { return entries_; }
  const OscillatorConfig& config() const { return config_; }

  double symplectic_residual() const;

 private:
  Mat4 entries_;
  OscillatorConfig config_;
};

/// Lambda = M diag(L^2/hbar^2, L^-2) M^T; the quadratic form of the
/// displacement amplitude.
Mat4 lambda_matrix(const SymplecticMatrix& m_x, const OscillatorConfig& config);

/// exp(-1/4 (a,b)^T Lambda (a,b)) in (0, 1].
double weyl_amplitude(const SymplecticMatrix& m_x, const OscillatorConfig& config,
                      const WeylLabel& w);

/// V = 1/2 M diag(L^2, hbar^2 L^-2) M^T = hbar^2 Lambda / 2.
CovarianceMatrix covariance(const SymplecticMatrix& m_x, const OscillatorConfig& config);

/// Covariance of a decoupled generator (b = 0) from the closed per-mode
/// forms, evaluated with the entire C and S functions so both determinant
/// signs stay real. Cross-checked against the general pipeline; the sign of
/// the mixed term in the momentum entries follows the oracle (see errata).
CovarianceMatrix covariance_decoupled(double a11, double a12, double a22, double c11,
                                      double c12, double c22,
                                      const OscillatorConfig& config);

struct Dispersions {
  double dx1 = 0.0, dx2 = 0.0, dp1 = 0.0, dp2 = 0.0;
};

/// Square roots of the diagonal; the states built here have vanishing means.
Dispersions dispersions(const CovarianceMatrix& v);

/// Closed-form second moments of x1 +- x2 and p1 +- p2 for the two-mode
/// squeezed vacuum.
struct BipartiteMoments {
  double x_plus_sq = 0.0;
  double x_minus_sq = 0.0;
  double p_plus_sq = 0.0;
  double p_minus_sq = 0.0;

  double dx1_sq_plus_dx2_sq() const { return 0.5 * (x_plus_sq + x_minus_sq); }
  double dp1_sq_plus_dp2_sq() const { return 0.5 * (p_plus_sq + p_minus_sq); }
};

BipartiteMoments bipartite_moments(const SqueezeParams& params);

/// Conjugation of a displacement by the group element:
/// (a, b) -> (a D^T - b C^T, -a B^T + b A^T) on row labels.
WeylLabel weyl_conjugation_labels(const SymplecticMatrix& m_x, const WeylLabel& w);

/// Symplectic (Williamson) eigenvalues of (2/hbar) V; both 1 for pure states.
std::array<double, 2> williamson_nu(const CovarianceMatrix& v);

}  // namespace sympl4
