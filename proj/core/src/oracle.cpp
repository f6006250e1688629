#include "sympl4/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace sympl4::oracle {

Mat4 expm_taylor(const Mat4& m) {
  const double norm = m.cwiseAbs().maxCoeff();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale >= 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const Mat4 scaled = m * scale;

  Mat4 result = Mat4::Identity();
  Mat4 term = Mat4::Identity();
  for (int n = 1; n <= 40; ++n) {
    term = term * scaled / static_cast<double>(n);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

std::array<std::complex<double>, 4> eigenvalues(const Mat4& m) {
  Eigen::EigenSolver<Mat4> solver(m);
  std::array<std::complex<double>, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = solver.eigenvalues()[i];
  return out;
}

}  // namespace sympl4::oracle
