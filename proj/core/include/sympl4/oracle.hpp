#pragma once

#include <array>
#include <complex>

#include "sympl4/types.hpp"

namespace sympl4::oracle {

/// Brute-force matrix exponential: scale by 2^-k until |m|_inf < 0.5, sum the
/// Taylor series to machine precision, then square k times. Used as the
/// independent reference for the closed-form exponential and surfaced by the
/// CLI as a residual diagnostic.
Mat4 expm_taylor(const Mat4& m);

/// Dense QR eigensolver wrapper.
std::array<std::complex<double>, 4> eigenvalues(const Mat4& m);

}  // namespace sympl4::oracle
