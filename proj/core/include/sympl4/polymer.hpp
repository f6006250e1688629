#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "sympl4/symplectic_matrix.hpp"

namespace sympl4 {

using Complex = std::complex<double>;

/// A finite superposition of two-mode plane waves, stored as a graph of
/// exact position labels with one complex coefficient per point. Canonical
/// form: points sorted lexicographically, exact duplicates merged, negative
/// zeros normalized.
class PolymerState {
 public:
  struct Point {
    double x1 = 0.0;
    double x2 = 0.0;
  };

  PolymerState() = default;
  PolymerState(std::vector<Point> points, std::vector<Complex> coeffs,
               std::optional<std::array<double, 2>> mu = std::nullopt);

  const std::vector<Point>& points() const { return points_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  const std::optional<std::array<double, 2>>& mu() const { return mu_; }

  std::size_t size() const { return points_.size(); }
  double norm_sq() const;
  PolymerState normalized() const;

  /// Rebuilds canonical form, merging points closer than merge_tol
  /// (coefficients add coherently). merge_tol 0 means exact-duplicate merge.
  static PolymerState canonical(std::vector<Point> points, std::vector<Complex> coeffs,
                                std::optional<std::array<double, 2>> mu,
                                double merge_tol);

 private:
  std::vector<Point> points_;
  std::vector<Complex> coeffs_;
  std::optional<std::array<double, 2>> mu_;
};

/// Single-mode factor of a product state.
struct PurePolymerFactor {
  std::vector<double> points;
  std::vector<Complex> coeffs;
};

struct SymmetryCertificate {
  bool lattice_symmetric = false;       ///< point set closed under negation
  bool coefficients_symmetric = false;  ///< coeff(x) == coeff(-x)
};

SymmetryCertificate check_symmetry(const PurePolymerFactor& factor);

/// Kronecker-delta pairing: sum over exactly matching points of
/// conj(psi_x) * phi_x.
Complex inner_product(const PolymerState& psi, const PolymerState& phi);

enum class NormalizationPolicy { Strict, AutoNormalize };

/// Position moments under the plane-wave eigenvalue convention
/// q | x > = -x | x >: means carry the sign flip, squares do not.
struct PositionMoments {
  double mean_q1 = 0.0, mean_q2 = 0.0;
  double q1_sq = 0.0, q2_sq = 0.0;
  double dx1 = 0.0, dx2 = 0.0;
  double normalization_factor = 1.0;  ///< applied factor in AutoNormalize mode
};

PositionMoments position_moments(const PolymerState& psi,
                                 NormalizationPolicy policy = NormalizationPolicy::Strict);

/// Diagonal squeeze action: (x1, x2) -> (e^-r1 x1, e^-r2 x2), coefficients
/// unchanged.
PolymerState apply_diag_squeeze(const PolymerState& psi, double r1, double r2);

/// Bipartite squeeze action:
/// (x1, x2) -> (cosh r x1 + sinh r x2, cosh r x2 + sinh r x1).
PolymerState apply_bipartite_squeeze(const PolymerState& psi, double r);

/// Point relabeling x -> A x for block-diagonal X-ordered group elements
/// (B = C = 0). Throws NotPointTransform otherwise.
PolymerState apply_point_transform(const PolymerState& psi, const SymplecticMatrix& m_x);

/// Tensor product of two symmetric single-mode factors; throws NotSymmetric
/// naming the violated flag.
PolymerState make_pure_symmetric(const PurePolymerFactor& f1, const PurePolymerFactor& f2);

struct DispersionLawReport {
  double diff_before = 0.0;  ///< dx1^2 - dx2^2 of the input
  double diff_after = 0.0;   ///< the same after the bipartite squeeze
  double sum_before = 0.0;   ///< dx1^2 + dx2^2 of the input
  double sum_after = 0.0;
  double cosh_law_prediction = 0.0;  ///< cosh(2r) * sum_before
};

DispersionLawReport dispersion_laws(const PolymerState& psi, double r);

}  // namespace sympl4
