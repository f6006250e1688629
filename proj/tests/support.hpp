#pragma once

#include <random>

#include "sympl4/exponential.hpp"
#include "sympl4/lie_algebra.hpp"

namespace testsupport {

using sympl4::LieAlgebraElement;
using sympl4::Mat2;
using sympl4::Mat4;

inline Mat2 random_mat2(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  Mat2 m;
  m << dist(rng), dist(rng), dist(rng), dist(rng);
  return m;
}

inline Mat2 random_sym2(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  const double d0 = dist(rng);
  const double off = dist(rng);
  const double d1 = dist(rng);
  Mat2 m;
  m << d0, off, off, d1;
  return m;
}

inline LieAlgebraElement random_lie(std::mt19937_64& rng, double scale = 1.0) {
  return LieAlgebraElement(random_sym2(rng, scale), random_mat2(rng, scale),
                           random_sym2(rng, scale));
}

/// Random element whose recursion spectrum is safely real.
inline LieAlgebraElement random_real_regime(std::mt19937_64& rng, double scale = 1.0) {
  for (;;) {
    const LieAlgebraElement l = random_lie(rng, scale);
    const sympl4::EigenPair pair = sympl4::lambda_pm(l);
    if (!pair.complex_regime && pair.delta > 1e-3) return l;
  }
}

/// Random element with both lambdas safely positive.
inline LieAlgebraElement random_hyperbolic(std::mt19937_64& rng, double scale = 1.0) {
  for (;;) {
    const LieAlgebraElement l = random_lie(rng, scale);
    const sympl4::EigenPair pair = sympl4::lambda_pm(l);
    if (!pair.complex_regime && pair.lambda_minus > 1e-2 && pair.delta > 1e-3) return l;
  }
}

}  // namespace testsupport
