#include "sympl4/polymer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace sympl4 {

namespace {

constexpr double kMergeTol = 1e-12;
constexpr double kNormTol = 1e-10;

double clean_zero(double x) { return x == 0.0 ? 0.0 : x; }  // folds -0.0 into +0.0

struct PointKey {
  double x1, x2;
  bool operator==(const PointKey& o) const { return x1 == o.x1 && x2 == o.x2; }
};

struct PointKeyHash {
  std::size_t operator()(const PointKey& k) const {
    auto h1 = std::hash<double>{}(k.x1);
    auto h2 = std::hash<double>{}(k.x2);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

}  // namespace

PolymerState PolymerState::canonical(std::vector<Point> points, std::vector<Complex> coeffs,
                                     std::optional<std::array<double, 2>> mu,
                                     double merge_tol) {
  if (points.size() != coeffs.size()) {
    throw SymplError(ErrorCode::InvalidArgument, "point/coefficient count mismatch");
  }
  for (auto& p : points) {
    if (!std::isfinite(p.x1) || !std::isfinite(p.x2)) {
      throw SymplError(ErrorCode::InvalidArgument, "non-finite lattice point");
    }
    p.x1 = clean_zero(p.x1);
    p.x2 = clean_zero(p.x2);
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (points[i].x1 != points[j].x1) return points[i].x1 < points[j].x1;
    return points[i].x2 < points[j].x2;
  });

  PolymerState state;
  state.mu_ = mu;
  for (std::size_t idx : order) {
    const Point& p = points[idx];
    if (!state.points_.empty()) {
      Point& last = state.points_.back();
      const bool close = std::abs(p.x1 - last.x1) <= merge_tol &&
                         std::abs(p.x2 - last.x2) <= merge_tol;
      if (close) {
        state.coeffs_.back() += coeffs[idx];
        continue;
      }
    }
    state.points_.push_back(p);
    state.coeffs_.push_back(coeffs[idx]);
  }
  return state;
}

PolymerState::PolymerState(std::vector<Point> points, std::vector<Complex> coeffs,
                           std::optional<std::array<double, 2>> mu) {
  *this = canonical(std::move(points), std::move(coeffs), mu, 0.0);
}

double PolymerState::norm_sq() const {
  double total = 0.0;
  for (const Complex& c : coeffs_) total += std::norm(c);
  return total;
}

PolymerState PolymerState::normalized() const {
  const double n = std::sqrt(norm_sq());
  if (n == 0.0) {
    throw SymplError(ErrorCode::InvalidArgument, "cannot normalize the zero state");
  }
  PolymerState out = *this;
  for (Complex& c : out.coeffs_) c /= n;
  return out;
}

SymmetryCertificate check_symmetry(const PurePolymerFactor& factor) {
  SymmetryCertificate cert;
  std::unordered_map<double, Complex> byPoint;
  for (std::size_t i = 0; i < factor.points.size(); ++i) {
    byPoint[clean_zero(factor.points[i])] += factor.coeffs[i];
  }
  cert.lattice_symmetric = true;
  cert.coefficients_symmetric = true;
  for (const auto& [x, coeff] : byPoint) {
    const auto mirror = byPoint.find(clean_zero(-x));
    if (mirror == byPoint.end()) {
      cert.lattice_symmetric = false;
      cert.coefficients_symmetric = false;
      break;
    }
    if (std::abs(mirror->second - coeff) > kMergeTol * std::max(1.0, std::abs(coeff))) {
      cert.coefficients_symmetric = false;
    }
  }
  return cert;
}

Complex inner_product(const PolymerState& psi, const PolymerState& phi) {
  std::unordered_map<PointKey, Complex, PointKeyHash> lookup;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    lookup[{psi.points()[i].x1, psi.points()[i].x2}] = psi.coeffs()[i];
  }
  Complex total{};
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const auto it = lookup.find({phi.points()[i].x1, phi.points()[i].x2});
    if (it != lookup.end()) total += std::conj(it->second) * phi.coeffs()[i];
  }
  return total;
}

PositionMoments position_moments(const PolymerState& psi, NormalizationPolicy policy) {
  const double nsq = psi.norm_sq();
  PositionMoments m;
  if (std::abs(nsq - 1.0) > kNormTol) {
    if (policy == NormalizationPolicy::Strict) {
      throw SymplError(ErrorCode::NotNormalized,
                       "state norm^2 = " + std::to_string(nsq) + "; normalize or use lenient mode");
    }
    m.normalization_factor = 1.0 / nsq;
  }
  double q1 = 0.0, q2 = 0.0, q1sq = 0.0, q2sq = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double w = std::norm(psi.coeffs()[i]) * m.normalization_factor;
    const auto& p = psi.points()[i];
    // Plane-wave eigenvalue is -x, so means flip sign relative to the labels.
    q1 += w * (-p.x1);
    q2 += w * (-p.x2);
    q1sq += w * p.x1 * p.x1;
    q2sq += w * p.x2 * p.x2;
  }
  m.mean_q1 = q1;
  m.mean_q2 = q2;
  m.q1_sq = q1sq;
  m.q2_sq = q2sq;
  m.dx1 = std::sqrt(std::max(0.0, q1sq - q1 * q1));
  m.dx2 = std::sqrt(std::max(0.0, q2sq - q2 * q2));
  return m;
}

namespace {

PolymerState map_points(const PolymerState& psi, const Mat2& map) {
  std::vector<PolymerState::Point> points;
  points.reserve(psi.size());
  for (const auto& p : psi.points()) {
    const double y1 = map(0, 0) * p.x1 + map(0, 1) * p.x2;
    const double y2 = map(1, 0) * p.x1 + map(1, 1) * p.x2;
    points.push_back({y1, y2});
  }
  return PolymerState::canonical(std::move(points), psi.coeffs(), psi.mu(), kMergeTol);
}

}  // namespace

PolymerState apply_diag_squeeze(const PolymerState& psi, double r1, double r2) {
  Mat2 map;
  map << std::exp(-r1), 0.0, 0.0, std::exp(-r2);
  return map_points(psi, map);
}

PolymerState apply_bipartite_squeeze(const PolymerState& psi, double r) {
  Mat2 map;
  map << std::cosh(r), std::sinh(r), std::sinh(r), std::cosh(r);
  return map_points(psi, map);
}

PolymerState apply_point_transform(const PolymerState& psi, const SymplecticMatrix& m_x) {
  if (m_x.ordering() != Ordering::X) {
    throw SymplError(ErrorCode::WrongOrdering, "point transform expects an X-ordered matrix");
  }
  const double off = std::max(m_x.block_b().cwiseAbs().maxCoeff(),
                              m_x.block_c().cwiseAbs().maxCoeff());
  if (off > 1e-12) {
    throw SymplError(ErrorCode::NotPointTransform,
                     "B and C blocks must vanish for a pure point relabeling");
  }
  const Mat2 a = m_x.block_a();
  if (std::abs(a.determinant()) < 1e-12) {
    throw SymplError(ErrorCode::NotPointTransform, "A block must be invertible");
  }
  return map_points(psi, a);
}

PolymerState make_pure_symmetric(const PurePolymerFactor& f1, const PurePolymerFactor& f2) {
  const SymmetryCertificate c1 = check_symmetry(f1);
  const SymmetryCertificate c2 = check_symmetry(f2);
  for (const auto& [cert, which] : {std::pair{c1, "factor 1"}, std::pair{c2, "factor 2"}}) {
    if (!cert.lattice_symmetric) {
      throw SymplError(ErrorCode::NotSymmetric,
                       std::string(which) + ": lattice not closed under negation");
    }
    if (!cert.coefficients_symmetric) {
      throw SymplError(ErrorCode::NotSymmetric,
                       std::string(which) + ": coefficients not symmetric under negation");
    }
  }
  std::vector<PolymerState::Point> points;
  std::vector<Complex> coeffs;
  points.reserve(f1.points.size() * f2.points.size());
  for (std::size_t i = 0; i < f1.points.size(); ++i) {
    for (std::size_t j = 0; j < f2.points.size(); ++j) {
      points.push_back({f1.points[i], f2.points[j]});
      coeffs.push_back(f1.coeffs[i] * f2.coeffs[j]);
    }
  }
  return PolymerState(std::move(points), std::move(coeffs));
}

DispersionLawReport dispersion_laws(const PolymerState& psi, double r) {
  const PositionMoments before = position_moments(psi);
  const PositionMoments after = position_moments(apply_bipartite_squeeze(psi, r));
  DispersionLawReport report;
  report.diff_before = before.dx1 * before.dx1 - before.dx2 * before.dx2;
  report.diff_after = after.dx1 * after.dx1 - after.dx2 * after.dx2;
  report.sum_before = before.dx1 * before.dx1 + before.dx2 * before.dx2;
  report.sum_after = after.dx1 * after.dx1 + after.dx2 * after.dx2;
  report.cosh_law_prediction = std::cosh(2.0 * r) * report.sum_before;
  return report;
}

}  // namespace sympl4
