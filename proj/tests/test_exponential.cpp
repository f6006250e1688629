#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "sympl4/exponential.hpp"
#include "sympl4/oracle.hpp"
#include "support.hpp"

using namespace sympl4;
using testsupport::random_hyperbolic;
using testsupport::random_lie;
using testsupport::random_real_regime;

namespace {

// Reference for (m^2)^n: repeated 4x4 multiplication.
Mat4 m2_power(const LieAlgebraElement& l, int n) {
  const Mat4 m2 = build_m(l) * build_m(l);
  Mat4 acc = Mat4::Identity();
  for (int i = 0; i < n; ++i) acc = acc * m2;
  return acc;
}

Mat4 reconstruct_from_coeffs(const LieAlgebraElement& l, const PowerCoefficients& k) {
  const Mat2 jd = j2() * d_matrix(l);
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = k.alpha * Mat2::Identity();
  m.block<2, 2>(0, 2) = k.beta * jd;
  m.block<2, 2>(2, 0) = -k.beta * (j2() * d_matrix(l).transpose());
  m.block<2, 2>(2, 2) = k.gamma * Mat2::Identity();
  return m;
}

}  // namespace

TEST_CASE("power_coeffs initial values") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    const LieAlgebraElement l = random_lie(rng);
    const PowerCoefficients k = power_coeffs(l, 1);
    CHECK(k.alpha == doctest::Approx(-(l.a().determinant() + l.b().determinant())).epsilon(1e-14));
    CHECK(k.beta == 1.0);
    CHECK(k.gamma == doctest::Approx(-(l.c().determinant() + l.b().determinant())).epsilon(1e-14));
  }
  CHECK_THROWS_AS(power_coeffs(LieAlgebraElement::zero(), 0), SymplError);
}

TEST_CASE("power_coeffs worked example: a = 1, b = c = 0, n = 2") {
  const LieAlgebraElement l(Mat2::Identity(), Mat2::Zero(), Mat2::Zero());
  const PowerCoefficients k = power_coeffs(l, 2);
  CHECK(k.alpha == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(k.beta == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(k.gamma == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("power_coeffs reconstruct the direct matrix power") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const LieAlgebraElement l = random_lie(rng);
    for (int n : {1, 2, 3, 5, 8}) {
      const Mat4 direct = m2_power(l, n);
      const Mat4 rebuilt = reconstruct_from_coeffs(l, power_coeffs(l, n));
      const double scale = std::max(1.0, direct.cwiseAbs().maxCoeff());
      CHECK((direct - rebuilt).cwiseAbs().maxCoeff() <= 1e-11 * scale);
    }
  }
}

TEST_CASE("series_coeffs at zero") {
  const SeriesCoefficients s = series_coeffs(LieAlgebraElement::zero());
  CHECK(s.alpha_e == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.alpha_o == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.beta_e == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s.beta_o == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(s.gamma_e == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.gamma_o == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("series_coeffs for pure coupling use the double eigenvalue") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> dist(0.2, 1.5);
  for (int i = 0; i < 20; ++i) {
    const double r = dist(rng);
    Mat2 b;
    b << 0.0, -r, -r, 0.0;  // det b = -r^2
    const LieAlgebraElement l(Mat2::Zero(), b, Mat2::Zero());
    const SeriesCoefficients s = series_coeffs(l);
    CHECK(s.alpha_e == doctest::Approx(std::cosh(r)).epsilon(1e-13));
    CHECK(s.gamma_e == doctest::Approx(std::cosh(r)).epsilon(1e-13));
    CHECK(s.alpha_o == doctest::Approx(std::sinh(r) / r).epsilon(1e-13));
    CHECK(s.gamma_o == doctest::Approx(std::sinh(r) / r).epsilon(1e-13));
  }
}

TEST_CASE("series_coeffs reproduce truncated partial sums of the matrix series") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 50; ++i) {
    const LieAlgebraElement l = random_real_regime(rng);
    Mat4 even = Mat4::Identity();
    Mat4 odd = Mat4::Identity();
    double even_fact = 1.0;
    double odd_fact = 1.0;
    Mat4 power = Mat4::Identity();
    const Mat4 m2 = build_m(l) * build_m(l);
    for (int n = 1; n <= 40; ++n) {
      power = power * m2;
      even_fact *= (2.0 * n) * (2.0 * n - 1.0);
      odd_fact *= (2.0 * n + 1.0) * (2.0 * n);
      even += power / even_fact;
      odd += power / odd_fact;
    }
    const SeriesCoefficients s = series_coeffs(l);
    const Mat2 jd = j2() * d_matrix(l);
    CHECK(s.alpha_e == doctest::Approx(even(0, 0)).epsilon(1e-11));
    CHECK(s.gamma_e == doctest::Approx(even(2, 2)).epsilon(1e-11));
    CHECK(s.alpha_o == doctest::Approx(odd(0, 0)).epsilon(1e-11));
    CHECK(s.gamma_o == doctest::Approx(odd(2, 2)).epsilon(1e-11));
    CHECK((s.beta_e * jd - even.block<2, 2>(0, 2)).cwiseAbs().maxCoeff() <= 1e-11);
    CHECK((s.beta_o * jd - odd.block<2, 2>(0, 2)).cwiseAbs().maxCoeff() <= 1e-11);
  }
}

TEST_CASE("series_coeffs continuity across the degenerate spectrum") {
  // a = c = diag(g, -1), b = [[t,0],[0,0]] gives lambda_pm = g +- t with
  // det a = det c, so the spread is controlled by t alone.
  const auto element_for = [](double g, double t) {
    Mat2 a, b;
    a << g, 0.0, 0.0, -1.0;
    b << t, 0.0, 0.0, 0.0;
    return LieAlgebraElement(a, b, a);
  };
  for (double center : {-2.0, -0.3, 0.0, 0.4, 3.0}) {
    const EigenPair probe = lambda_pm(element_for(center, 5e-7));
    REQUIRE(probe.delta == doctest::Approx(1e-6).epsilon(1e-9));
    REQUIRE(probe.lambda_plus == doctest::Approx(center + 5e-7).epsilon(1e-9));
    const SeriesCoefficients near = series_coeffs(element_for(center, 5e-7));
    const SeriesCoefficients at = series_coeffs(element_for(center, 0.0));
    CHECK(std::abs(near.alpha_e - at.alpha_e) <= 1e-8);
    CHECK(std::abs(near.alpha_o - at.alpha_o) <= 1e-8);
    CHECK(std::abs(near.beta_e - at.beta_e) <= 1e-8);
    CHECK(std::abs(near.beta_o - at.beta_o) <= 1e-8);
    CHECK(std::abs(near.gamma_e - at.gamma_e) <= 1e-8);
    CHECK(std::abs(near.gamma_o - at.gamma_o) <= 1e-8);
  }
}

TEST_CASE("exp_sp4 of zero is the identity") {
  const ExpResult r = exp_sp4(LieAlgebraElement::zero());
  CHECK(r.closed_form);
  CHECK((r.matrix.entries() - Mat4::Identity()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("exp_sp4 of the pi/2 decoupled generator is J + J") {
  const double half_pi = std::numbers::pi / 2.0;
  const LieAlgebraElement l(half_pi * Mat2::Identity(), Mat2::Zero(),
                            half_pi * Mat2::Identity());
  const ExpResult r = exp_sp4(l);
  CHECK(r.closed_form);
  CHECK((r.matrix.entries() - j4()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("exp_sp4 matches the scaling-and-squaring oracle") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 300; ++i) {
    const LieAlgebraElement l = random_lie(rng);
    const ExpResult r = exp_sp4(l);
    const Mat4 reference = oracle::expm_taylor(build_m(l));
    CHECK((r.matrix.entries() - reference).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("exp_sp4 falls back in the complex regime, flagged") {
  std::mt19937_64 rng(46);
  int found = 0;
  for (int i = 0; i < 3000 && found < 10; ++i) {
    const LieAlgebraElement l = random_lie(rng, 1.2);
    if (!lambda_pm(l).complex_regime) continue;
    ++found;
    const ExpResult r = exp_sp4(l);
    CHECK(!r.closed_form);
    const Mat4 reference = oracle::expm_taylor(build_m(l));
    CHECK((r.matrix.entries() - reference).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(r.matrix.symplectic_residual() <= 1e-10);
  }
  REQUIRE(found > 0);
}

TEST_CASE("exponential is symplectic with unit determinant") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    const ExpResult r = exp_sp4(random_lie(rng));
    CHECK(r.matrix.symplectic_residual() <= 1e-10);
    CHECK(std::abs(r.matrix.determinant() - 1.0) <= 1e-10);
  }
}

TEST_CASE("inverse_exp and power_exp") {
  std::mt19937_64 rng(48);
  for (int i = 0; i < 50; ++i) {
    const LieAlgebraElement l = random_lie(rng, 0.8);
    const Mat4 m = exp_sp4(l).matrix.entries();
    const Mat4 inv = inverse_exp(l).matrix.entries();
    CHECK((inv * m - Mat4::Identity()).cwiseAbs().maxCoeff() <= 1e-10);
    const Mat4 squared = power_exp(l, 2).matrix.entries();
    CHECK((squared - m * m).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("transpose identity") {
  std::mt19937_64 rng(49);
  for (int i = 0; i < 100; ++i) {
    const ExpResult r = exp_sp4(random_lie(rng));
    CHECK(transpose_identity_check(r.matrix, 1e-10));
  }
}

TEST_CASE("trace identity with the factor 2") {
  CHECK(trace_power(LieAlgebraElement::zero(), 1) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(trace_power(LieAlgebraElement::zero(), 3) == doctest::Approx(4.0).epsilon(1e-15));

  // Trigonometric branch: the pi/2 decoupled generator maps to J + J, trace 0.
  const double half_pi = std::numbers::pi / 2.0;
  const LieAlgebraElement rot(half_pi * Mat2::Identity(), Mat2::Zero(),
                              half_pi * Mat2::Identity());
  CHECK(std::abs(trace_power(rot, 1)) <= 1e-14);

  std::mt19937_64 rng(50);
  for (int i = 0; i < 100; ++i) {
    const LieAlgebraElement l = random_real_regime(rng);
    for (int n : {1, 2, 3}) {
      const Mat4 direct = power_exp(l, n).matrix.entries();
      CHECK(trace_power(l, n) == doctest::Approx(direct.trace()).epsilon(1e-9));
    }
  }
}

TEST_CASE("symplectic eigenvalues") {
  SUBCASE("identity") {
    const SymplecticSpectrum s = symplectic_eigenvalues(LieAlgebraElement::zero());
    const auto v = s.sorted_values();
    for (double value : v) CHECK(value == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("pure coupling with det b = -r^2") {
    const double r = 0.5;
    Mat2 b;
    b << 0.0, -r, -r, 0.0;
    const LieAlgebraElement l(Mat2::Zero(), b, Mat2::Zero());
    const auto v = symplectic_eigenvalues(l).sorted_values();
    CHECK(v[0] == doctest::Approx(std::exp(-0.5)).epsilon(1e-13));
    CHECK(v[1] == doctest::Approx(std::exp(-0.5)).epsilon(1e-13));
    CHECK(v[2] == doctest::Approx(std::exp(0.5)).epsilon(1e-13));
    CHECK(v[3] == doctest::Approx(std::exp(0.5)).epsilon(1e-13));
  }

  SUBCASE("hyperbolic samples match the dense eigensolver") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
      const LieAlgebraElement l = random_hyperbolic(rng);
      const auto v = symplectic_eigenvalues(l).sorted_values();
      auto eigs = oracle::eigenvalues(exp_sp4(l).matrix.entries());
      std::array<double, 4> mods;
      for (int k = 0; k < 4; ++k) mods[k] = std::abs(eigs[k]);
      std::sort(mods.begin(), mods.end());
      for (int k = 0; k < 4; ++k) {
        CHECK(v[k] == doctest::Approx(mods[k]).epsilon(1e-8));
      }
      CHECK(v[0] * v[3] == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(v[1] * v[2] == doctest::Approx(1.0).epsilon(1e-10));
    }
  }

  SUBCASE("elliptic spectrum is reported with phases") {
    const double half_pi = std::numbers::pi / 2.0;
    const LieAlgebraElement rot(half_pi * Mat2::Identity(), Mat2::Zero(),
                                half_pi * Mat2::Identity());
    const SymplecticSpectrum s = symplectic_eigenvalues(rot);
    CHECK(s.elliptic());
    CHECK(s.from_lambda_plus.phase == doctest::Approx(half_pi).epsilon(1e-12));
    CHECK_THROWS_AS(s.sorted_values(), SymplError);
  }
}

TEST_CASE("characteristic quartic annihilates the spectrum") {
  CHECK(char_poly_check(SymplecticMatrix::identity(Ordering::Y)) <= 1e-12);

  const SymplecticMatrix jj(j4(), Ordering::Y);
  CHECK(char_poly_check(jj) <= 1e-12);

  std::mt19937_64 rng(52);
  for (int i = 0; i < 100; ++i) {
    const LieAlgebraElement l = random_hyperbolic(rng);
    CHECK(char_poly_check(exp_sp4(l).matrix) <= 1e-8);
  }
}

TEST_CASE("ordering transforms") {
  SUBCASE("identity maps to identity") {
    const SymplecticMatrix id = SymplecticMatrix::identity(Ordering::Y);
    CHECK((to_x_order(id).entries() - Mat4::Identity()).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("gamma2 is an orthogonal involution") {
    const Mat4 g = gamma2();
    CHECK((g * g - Mat4::Identity()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((g.transpose() - g.inverse()).cwiseAbs().maxCoeff() <= 1e-15);
  }

  SUBCASE("round trip and symplecticity in the target ordering") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 100; ++i) {
      const SymplecticMatrix m = exp_sp4(random_lie(rng)).matrix;
      const SymplecticMatrix x = to_x_order(m);
      CHECK(x.ordering() == Ordering::X);
      CHECK(x.symplectic_residual() <= 1e-10);
      const SymplecticMatrix back = to_y_order(x);
      CHECK((back.entries() - m.entries()).cwiseAbs().maxCoeff() == 0.0);
    }
  }

  SUBCASE("wrong ordering throws") {
    const SymplecticMatrix id_x = SymplecticMatrix::identity(Ordering::X);
    CHECK_THROWS_AS(to_x_order(id_x), SymplError);
    const SymplecticMatrix id_y = SymplecticMatrix::identity(Ordering::Y);
    CHECK_THROWS_AS(to_y_order(id_y), SymplError);
    CHECK_THROWS_AS(id_x * id_y, SymplError);
  }
}

TEST_CASE("matrix construction rejects non-symplectic input") {
  Mat4 bad = Mat4::Identity();
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(SymplecticMatrix(bad, Ordering::Y), SymplError);
}
