#pragma once

#include <vector>

#include "sympl4/lie_algebra.hpp"
#include "sympl4/symplectic_matrix.hpp"

namespace sympl4 {

/// Two-mode squeeze parameters: zeta = r e^{i phi} with zeta_x = r cos(phi)
/// and zeta_y = r sin(phi); l1, l2 are the oscillator proper lengths.
/// Negative r is allowed and reverses the squeeze direction, so that
/// squeeze_matrix(r) * squeeze_matrix(-r) = 1.
struct SqueezeParams {
  double r = 0.0;
  double phi = 0.0;
  double l1 = 1.0;
  double l2 = 1.0;
  double hbar = 1.0;

  double zeta_x() const;
  double zeta_y() const;
  void validate() const;
};

/// Decoupled element with b = 0: two independent Sp(2,R) blocks
/// C(-det a) + S(-det a) J a and the analog in c.
SymplecticMatrix m1_decoupled(const Mat2& a, const Mat2& c);

/// Coupled element with a = c = diag(a11, a22), b = diag(b11, b22); the
/// closed form uses lambda_pm = -(a11 -+ b11)(a22 -+ b22) and
/// S_pm = S(lambda_pm).
SymplecticMatrix m2_coupled(double a11, double a22, double b11, double b22);

/// Pure coupling element with a = c = 0: diagonal blocks C(-det b), and
/// S(-det b) J b / S(-det b) J b^T off the diagonal.
SymplecticMatrix m3_pure_coupling(const Mat2& b);

/// Generator of the two-mode squeeze: a = c = 0 and
/// b = [[hbar z_y/(l1 l2), -l2 z_x/l1], [-l1 z_x/l2, -l1 l2 z_y/hbar]],
/// so det b = -r^2 exactly.
LieAlgebraElement squeeze_generator(const SqueezeParams& params);

/// The Y-ordered squeeze matrix M_s(r, phi); diagonal cosh r.
SymplecticMatrix squeeze_matrix(const SqueezeParams& params);

/// The X-ordered squeeze matrix, defined as the Gamma(2) conjugate of
/// squeeze_matrix. Its entries carry cos(phi) and sin(phi); see the errata
/// notes for the angle-doubling variant this replaces.
SymplecticMatrix squeeze_matrix_x(const SqueezeParams& params);

struct TrajectoryPoint {
  double t = 0.0;
  double q1 = 0.0, p1 = 0.0, q2 = 0.0, p2 = 0.0;
};

struct TrajectorySample {
  TrajectoryPoint input;
  TrajectoryPoint transformed;
};

/// Samples the circular trajectory q_j(t) = cos(t) q_j + sin(t) p_j,
/// p_j(t) = -sin(t) q_j + cos(t) p_j on a uniform grid over [0, 2*pi]
/// (endpoint duplicated, n_samples + 1 rows) and applies M_s(r, phi).
std::vector<TrajectorySample> squeeze_trajectory(const SqueezeParams& params,
                                                 int n_samples, double q1, double p1,
                                                 double q2, double p2);

}  // namespace sympl4
