#pragma once

#include <array>

#include "sympl4/lie_algebra.hpp"
#include "sympl4/symplectic_matrix.hpp"

namespace sympl4 {

/// Block coefficients of (m^2)^n = [[alpha_n 1, beta_n J d], [-beta_n J d^T, gamma_n 1]].
struct PowerCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Computed by the three-term recursion seeded with
/// alpha_1 = -(det a + det b), beta_1 = 1, gamma_1 = -(det c + det b);
/// total for every input, degenerate spectra included.
PowerCoefficients power_coeffs(const LieAlgebraElement& l, int n);

/// The six scalars weighting the even/odd parts of the exponential series.
struct SeriesCoefficients {
  double alpha_e = 1.0;
  double alpha_o = 1.0;
  double beta_e = 0.0;
  double beta_o = 0.0;
  double gamma_e = 1.0;
  double gamma_o = 1.0;
};

/// Closed-form series sums in terms of C(lambda_pm) and S(lambda_pm) with
/// confluent-safe divided differences. Throws ComplexEigenvalueRegime when
/// the spectrum of the recursion matrix is complex.
SeriesCoefficients series_coeffs(const LieAlgebraElement& l);

struct ExpResult {
  SymplecticMatrix matrix;
  /// False when the complex-eigenvalue fallback (reference Taylor
  /// exponential) produced the matrix instead of the closed form.
  bool closed_form = true;
};

/// Closed-form exponential sp(4,R) -> Sp(4,R) in Y ordering, assembled from
/// the four block expressions in the series coefficients. Falls back to the
/// reference exponential, flagged, when lambda_pm is complex.
ExpResult exp_sp4(const LieAlgebraElement& l);

/// exp_sp4(-L); the group inverse of exp_sp4(L).
ExpResult inverse_exp(const LieAlgebraElement& l);

/// exp_sp4(n L) = exp_sp4(L)^n.
ExpResult power_exp(const LieAlgebraElement& l, int n);

/// Checks M^T = -(J+J) M^-1 (J+J) with an LU inverse, within tol.
bool transpose_identity_check(const SymplecticMatrix& m, double tol = kDefaultTolerance);

/// Tr(exp_sp4(L)^n) = 2 cosh(n sqrt(lambda_plus)) + 2 cosh(n sqrt(lambda_minus)),
/// evaluated through the entire C function so negative eigenvalues take the
/// trigonometric branch. The factor 2 on each term is required by
/// Tr(I_4) = 4; see the errata notes.
double trace_power(const LieAlgebraElement& l, int n);

/// One reciprocal eigenvalue pair of the group element, derived from a single
/// lambda: {e^{-sqrt(lambda)}, e^{+sqrt(lambda)}} when lambda >= 0, a unit
/// circle pair with rotation angle sqrt(-lambda) otherwise.
struct SpectrumPair {
  bool hyperbolic = true;
  double modulus_low = 1.0;
  double modulus_high = 1.0;
  double phase = 0.0;
};

struct SymplecticSpectrum {
  SpectrumPair from_lambda_plus;
  SpectrumPair from_lambda_minus;

  bool elliptic() const {
    return !from_lambda_plus.hyperbolic || !from_lambda_minus.hyperbolic;
  }

  /// Ascending eigenvalues {e^{-sqrt(l+)}, e^{-sqrt(l-)}, e^{sqrt(l-)}, e^{sqrt(l+)}}.
  /// Throws EllipticSpectrum when any lambda is negative.
  std::array<double, 4> sorted_values() const;
};

SymplecticSpectrum symplectic_eigenvalues(const LieAlgebraElement& l);

}  // namespace sympl4
