#pragma once

#include <nlohmann/json.hpp>
#include <ostream>

#include "sympl4/gaussian.hpp"
#include "sympl4/lie_algebra.hpp"
#include "sympl4/polymer.hpp"
#include "sympl4/special_forms.hpp"
#include "sympl4/symplectic_matrix.hpp"

namespace sympl4 {

using Json = nlohmann::json;

/// {"a":[4 row-major], "b":[4], "c":[4]}
Json to_json(const LieAlgebraElement& l);
LieAlgebraElement lie_from_json(const Json& j);

/// {"ordering":"Y"|"X", "entries":[16 row-major]}
Json to_json(const SymplecticMatrix& m);
SymplecticMatrix matrix_from_json(const Json& j, double tol = kDefaultTolerance);

/// {"entries":[16 row-major], "l":[l1,l2], "hbar":h}
Json to_json(const CovarianceMatrix& v);
CovarianceMatrix covariance_from_json(const Json& j, double tol = kDefaultTolerance);

/// {"points":[[x1,x2],...], "coeffs":[[re,im],...], "mu":[mu1,mu2]?}
Json to_json(const PolymerState& state);
PolymerState polymer_from_json(const Json& j);

Json parse_json(const std::string& text);

/// CSV trajectory table: header t,q1,p1,q2,p2,q1p,p1p,q2p,p2p, '.' decimal
/// separator, LF newlines, 17 significant digits.
void write_trajectory_csv(std::ostream& out, const std::vector<TrajectorySample>& samples);

}  // namespace sympl4
