#include "sympl4/analytic.hpp"

#include <cmath>
#include <cstdlib>

namespace sympl4 {
namespace {

constexpr double kSeriesRadius = 0.25;

double series_C(double lambda) {
  // sum lambda^n / (2n)!
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n <= 24; ++n) {
    term *= lambda / (2.0 * n * (2.0 * n - 1.0));
    sum += term;
    if (std::abs(term) < 1e-20 * std::abs(sum)) break;
  }
  return sum;
}

double series_S_derivative(int k, double lambda) {
  // d^k/dlambda^k sum lambda^n / (2n+1)!  =  sum_{n>=k} n!/(n-k)! lambda^(n-k) / (2n+1)!
  double term = 1.0;  // n = k term: k! / (2k+1)!
  for (int j = 1; j <= k; ++j) term *= j;
  for (int j = 1; j <= 2 * k + 1; ++j) term /= j;
  double sum = term;
  double power = 1.0;
  for (int n = k + 1; n <= k + 30; ++n) {
    power *= lambda;
    term = power;
    // n! / (n-k)! = product of (n-k+1 .. n)
    for (int j = n - k + 1; j <= n; ++j) term *= j;
    double fact = 1.0;
    for (int j = 1; j <= 2 * n + 1; ++j) fact *= j;
    term /= fact;
    sum += term;
    if (std::abs(term) < 1e-22 * (std::abs(sum) + 1e-300)) break;
  }
  return sum;
}

}  // namespace

double analytic_C(double lambda) {
  if (std::abs(lambda) < kSeriesRadius) return series_C(lambda);
  if (lambda > 0.0) return std::cosh(std::sqrt(lambda));
  return std::cos(std::sqrt(-lambda));
}

double analytic_S(double lambda) {
  return analytic_S_derivative(0, lambda);
}

double analytic_S_derivative(int order, double lambda) {
  if (std::abs(lambda) < kSeriesRadius) return series_S_derivative(order, lambda);
  double s;
  if (lambda > 0.0) {
    const double u = std::sqrt(lambda);
    s = std::sinh(u) / u;
  } else {
    const double u = std::sqrt(-lambda);
    s = std::sin(u) / u;
  }
  if (order == 0) return s;
  const double c = analytic_C(lambda);
  double prev = s;                       // S^(0)
  double cur = (c - s) / (2.0 * lambda);  // S^(1)
  for (int k = 1; k < order; ++k) {
    const double next = (prev - (4.0 * k + 2.0) * cur) / (4.0 * lambda);
    prev = cur;
    cur = next;
  }
  return cur;
}

double analytic_C_derivative(double lambda) { return 0.5 * analytic_S(lambda); }

std::complex<double> sinhc(std::complex<double> z) {
  if (std::abs(z) < 1e-4) {
    const std::complex<double> z2 = z * z;
    return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sinh(z) / z;
}

double divided_C(double a, double b) {
  const std::complex<double> u = std::sqrt(std::complex<double>(a, 0.0));
  const std::complex<double> v = std::sqrt(std::complex<double>(b, 0.0));
  const std::complex<double> p = 0.5 * (u + v);
  const std::complex<double> q = 0.5 * (u - v);
  return 0.5 * (sinhc(p) * sinhc(q)).real();
}

double divided_S(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  const double diff = a - b;
  if (std::abs(diff) > 0.05 * scale) {
    return (analytic_S(a) - analytic_S(b)) / diff;
  }
  const double m = 0.5 * (a + b);
  const double h2 = 0.25 * diff * diff;
  return analytic_S_derivative(1, m) + analytic_S_derivative(3, m) * h2 / 6.0 +
         analytic_S_derivative(5, m) * h2 * h2 / 120.0;
}

}  // namespace sympl4
