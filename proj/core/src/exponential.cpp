#include "sympl4/exponential.hpp"

#include <algorithm>
#include <cmath>

#include "sympl4/analytic.hpp"
#include "sympl4/oracle.hpp"

namespace sympl4 {

PowerCoefficients power_coeffs(const LieAlgebraElement& l, int n) {
  if (n < 1) {
    throw SymplError(ErrorCode::InvalidArgument, "power_coeffs requires n >= 1");
  }
  const double det_a = l.a().determinant();
  const double det_b = l.b().determinant();
  const double det_c = l.c().determinant();
  const double det_d = d_matrix(l).determinant();

  PowerCoefficients k;
  k.alpha = -(det_a + det_b);
  k.beta = 1.0;
  k.gamma = -(det_c + det_b);
  const double alpha1 = k.alpha;
  const double gamma1 = k.gamma;
  for (int i = 1; i < n; ++i) {
    const double alpha = alpha1 * k.alpha + det_d * k.beta;
    const double beta = k.alpha + gamma1 * k.beta;
    const double gamma = det_d * k.beta + gamma1 * k.gamma;
    k.alpha = alpha;
    k.beta = beta;
    k.gamma = gamma;
  }
  return k;
}

SeriesCoefficients series_coeffs(const LieAlgebraElement& l) {
  const EigenPair pair = lambda_pm(l);
  if (pair.complex_regime) {
    throw SymplError(ErrorCode::ComplexEigenvalueRegime,
                     "series coefficients need a real recursion spectrum");
  }
  const double lp = pair.lambda_plus;
  const double lm = pair.lambda_minus;
  const double det_a = l.a().determinant();
  const double det_c = l.c().determinant();
  const double dca = det_c - det_a;

  const double cp = analytic_C(lp);
  const double cm = analytic_C(lm);
  const double sp = analytic_S(lp);
  const double sm = analytic_S(lm);
  const double dc = divided_C(lp, lm);
  const double ds = divided_S(lp, lm);

  SeriesCoefficients s;
  s.alpha_e = 0.5 * (cp + cm) + 0.5 * dca * dc;
  s.alpha_o = 0.5 * (sp + sm) + 0.5 * dca * ds;
  s.beta_e = dc;
  s.beta_o = ds;
  s.gamma_e = 0.5 * (cp + cm) - 0.5 * dca * dc;
  s.gamma_o = 0.5 * (sp + sm) - 0.5 * dca * ds;
  return s;
}

ExpResult exp_sp4(const LieAlgebraElement& l) {
  const EigenPair pair = lambda_pm(l);
  if (pair.complex_regime) {
    return {SymplecticMatrix(oracle::expm_taylor(build_m(l)), Ordering::Y), false};
  }
  const SeriesCoefficients s = series_coeffs(l);
  const Mat2 j = j2();
  const Mat2& a = l.a();
  const Mat2& b = l.b();
  const Mat2& c = l.c();
  const Mat2 bt = b.transpose();
  const double det_a = a.determinant();
  const double det_b = b.determinant();
  const double det_c = c.determinant();

  const Mat2 A = s.alpha_e * Mat2::Identity() + (s.alpha_o - s.beta_o * det_b) * j * a +
                 s.beta_o * j * b * j * c * j * bt;
  const Mat2 B = (s.gamma_o - s.beta_o * det_a) * j * b +
                 s.beta_e * (j * a * j * b + j * b * j * c) + s.beta_o * j * a * j * b * j * c;
  const Mat2 C = (s.alpha_o - s.beta_o * det_c) * j * bt +
                 s.beta_e * (j * bt * j * a + j * c * j * bt) + s.beta_o * j * c * j * bt * j * a;
  const Mat2 D = s.gamma_e * Mat2::Identity() + (s.gamma_o - s.beta_o * det_b) * j * c +
                 s.beta_o * j * bt * j * a * j * b;

  Mat4 m;
  m.block<2, 2>(0, 0) = A;
  m.block<2, 2>(0, 2) = B;
  m.block<2, 2>(2, 0) = C;
  m.block<2, 2>(2, 2) = D;
  return {SymplecticMatrix(m, Ordering::Y), true};
}

ExpResult inverse_exp(const LieAlgebraElement& l) { return exp_sp4(-l); }

ExpResult power_exp(const LieAlgebraElement& l, int n) {
  return exp_sp4(l * static_cast<double>(n));
}

bool transpose_identity_check(const SymplecticMatrix& m, double tol) {
  const Mat4 j = j4();
  const Mat4 inv = m.entries().inverse();
  const Mat4 target = -j * inv * j;
  return (m.entries().transpose() - target).cwiseAbs().maxCoeff() <= tol;
}

double trace_power(const LieAlgebraElement& l, int n) {
  if (n < 1) {
    throw SymplError(ErrorCode::InvalidArgument, "trace_power requires n >= 1");
  }
  const EigenPair pair = lambda_pm(l);
  if (pair.complex_regime) {
    throw SymplError(ErrorCode::ComplexEigenvalueRegime,
                     "trace identity needs a real recursion spectrum");
  }
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  return 2.0 * analytic_C(n2 * pair.lambda_plus) + 2.0 * analytic_C(n2 * pair.lambda_minus);
}

namespace {

SpectrumPair spectrum_pair(double lambda) {
  SpectrumPair p;
  if (lambda >= 0.0) {
    const double root = std::sqrt(lambda);
    p.hyperbolic = true;
    p.modulus_low = std::exp(-root);
    p.modulus_high = std::exp(root);
  } else {
    p.hyperbolic = false;
    p.modulus_low = 1.0;
    p.modulus_high = 1.0;
    p.phase = std::sqrt(-lambda);
  }
  return p;
}

}  // namespace

std::array<double, 4> SymplecticSpectrum::sorted_values() const {
  if (elliptic()) {
    throw SymplError(ErrorCode::EllipticSpectrum,
                     "eigenvalues lie on the unit circle; use the phase pairs");
  }
  std::array<double, 4> v = {from_lambda_plus.modulus_low, from_lambda_minus.modulus_low,
                             from_lambda_minus.modulus_high, from_lambda_plus.modulus_high};
  std::sort(v.begin(), v.end());
  return v;
}

SymplecticSpectrum symplectic_eigenvalues(const LieAlgebraElement& l) {
  const EigenPair pair = lambda_pm(l);
  if (pair.complex_regime) {
    throw SymplError(ErrorCode::ComplexEigenvalueRegime,
                     "group spectrum formulas need real lambda_pm");
  }
  SymplecticSpectrum s;
  s.from_lambda_plus = spectrum_pair(pair.lambda_plus);
  s.from_lambda_minus = spectrum_pair(pair.lambda_minus);
  return s;
}

}  // namespace sympl4
