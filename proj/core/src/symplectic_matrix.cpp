#include "sympl4/symplectic_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <sstream>

namespace sympl4 {

double symplectic_residual(const Mat4& entries, Ordering ordering) {
  const Mat4 w = omega(ordering);
  return (entries * w * entries.transpose() - w).cwiseAbs().maxCoeff();
}

SymplecticMatrix::SymplecticMatrix(const Mat4& entries, Ordering ordering, double tol)
    : entries_(entries), ordering_(ordering) {
  if (!all_finite(entries)) {
    throw SymplError(ErrorCode::InvalidArgument, "non-finite matrix entries");
  }
  const double norm = entries.cwiseAbs().maxCoeff();
  const double scale2 = std::max(1.0, norm * norm);
  const double residual = sympl4::symplectic_residual(entries, ordering);
  if (residual > tol * scale2) {
    std::ostringstream msg;
    msg << "symplectic condition violated: residual " << residual << " exceeds "
        << tol * scale2;
    throw SymplError(ErrorCode::NotSymplectic, msg.str());
  }
  const double det = entries.determinant();
  if (std::abs(det - 1.0) > tol * scale2 * scale2) {
    std::ostringstream msg;
    msg << "determinant " << det << " is not 1 within tolerance";
    throw SymplError(ErrorCode::NotSymplectic, msg.str());
  }
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  const Mat4 w = omega(ordering_);
  // Omega^-1 = -Omega for both orderings.
  const Mat4 inv = -w * entries_.transpose() * w;
  return SymplecticMatrix(inv, ordering_);
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
  if (ordering_ != rhs.ordering_) {
    throw SymplError(ErrorCode::WrongOrdering,
                     "cannot multiply matrices with different orderings");
  }
  return SymplecticMatrix(entries_ * rhs.entries_, ordering_);
}

SymplecticMatrix to_x_order(const SymplecticMatrix& m) {
  if (m.ordering() != Ordering::Y) {
    throw SymplError(ErrorCode::WrongOrdering, "to_x_order expects a Y-ordered matrix");
  }
  const Mat4 g = gamma2();
  return SymplecticMatrix(g * m.entries() * g.transpose(), Ordering::X);
}

SymplecticMatrix to_y_order(const SymplecticMatrix& m) {
  if (m.ordering() != Ordering::X) {
    throw SymplError(ErrorCode::WrongOrdering, "to_y_order expects an X-ordered matrix");
  }
  const Mat4 g = gamma2();
  return SymplecticMatrix(g * m.entries() * g.transpose(), Ordering::Y);
}

double char_poly_check(const SymplecticMatrix& m) {
  const Mat4& e = m.entries();
  const Mat4 e2 = e * e;
  const double t1 = e.trace();
  const double t2 = e2.trace();
  const double t3 = (e2 * e).trace();

  const double c3 = -t1;
  const double c2 = 0.5 * (t1 * t1 - t2);
  const double c1 = -t1 * t1 * t1 / 6.0 + t1 * t2 / 2.0 - t3 / 3.0;
  const double c0 = 1.0;

  Eigen::EigenSolver<Mat4> solver(e);
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    const std::complex<double> z = solver.eigenvalues()[i];
    const std::complex<double> value = ((z + c3) * z + c2) * z * z + c1 * z + c0;
    worst = std::max(worst, std::abs(value));
  }
  return worst;
}

}  // namespace sympl4
