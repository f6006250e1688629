#pragma once

#include <complex>

namespace sympl4 {

/// Entire extension of cosh(sqrt(lambda)): equals cos(sqrt(-lambda)) for
/// lambda < 0, evaluated by Maclaurin series near zero and by the closed
/// hyperbolic/trigonometric form away from it.
double analytic_C(double lambda);

/// Entire extension of sinh(sqrt(lambda))/sqrt(lambda), with S(0) = 1.
double analytic_S(double lambda);

/// k-th derivative of analytic_S. Order 0 is analytic_S itself.
/// Uses the Maclaurin series for small |lambda| and the recurrence
/// 4*lambda*S'' + 6*S' - S = 0 differentiated k times elsewhere.
double analytic_S_derivative(int order, double lambda);

/// First derivative of analytic_C; equals analytic_S(lambda) / 2.
double analytic_C_derivative(double lambda);

/// sinh(z)/z for complex z, stable near z = 0.
std::complex<double> sinhc(std::complex<double> z);

/// Divided difference [C(a) - C(b)] / (a - b), evaluated through the
/// product identity cosh(u) - cosh(v) = 2 sinh((u+v)/2) sinh((u-v)/2),
/// which is exact in the confluent limit a -> b (where it tends to C'(a)).
double divided_C(double a, double b);

/// Divided difference [S(a) - S(b)] / (a - b). Direct quotient when a and b
/// are well separated; midpoint Taylor expansion with S', S''', S^(5)
/// otherwise, so the confluent limit returns S'(a) without cancellation.
double divided_S(double a, double b);

}  // namespace sympl4
